from typing import Optional

from fusionframe.flow.critical import CriticalPointReport
from fusionframe.git.instability import OnePSCertificate
from fusionframe.git.property_s import PropertySResult, SubspaceWitness
from .files import encode_matrix
from .schemas import CriticalPointModel, OnePSCertificateModel, PropertySReport, SubspaceWitnessModel

def witness_to_model(witness: SubspaceWitness) -> SubspaceWitnessModel:
    return SubspaceWitnessModel(
        basis=encode_matrix(witness.basis),
        dims=list(witness.dims),
        lhs=witness.lhs,
        rhs=witness.rhs,
        margin=witness.margin,
        source=witness.source,
    )

def property_s_to_model(result: PropertySResult) -> PropertySReport:
    return PropertySReport(
        status=result.status.value,
        violated=result.violated,
        exact=result.exact,
        candidates_checked=result.candidates_checked,
        witness=witness_to_model(result.witness) if result.witness is not None else None,
    )

def certificate_to_model(cert: Optional[OnePSCertificate]) -> Optional[OnePSCertificateModel]:
    if cert is None:
        return None
    return OnePSCertificateModel(
        top_eigenvalue=cert.top_eigenvalue,
        ell=cert.ell,
        m=cert.m,
        n=cert.n,
        d=cert.d,
        weight_exponent=cert.weight_exponent,
        weights=[int(w) for w in cert.weights()],
        basis_rotation=encode_matrix(cert.basis_rotation),
    )

def critical_to_model(report: CriticalPointReport) -> CriticalPointModel:
    return CriticalPointModel(
        gradient_norm=report.gradient_norm,
        is_critical=report.is_critical,
        is_tight=report.is_tight,
        row_spaces_invariant=report.row_spaces_invariant,
        row_eigenvalues=[[float(v) for v in vals] for vals in report.row_eigenvalues],
    )
