import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fusionframe.config.settings import settings
from fusionframe.core.errors import ClusteringAmbiguityError, FrameValidationError
from fusionframe.core.frames import OperatorFrame
from fusionframe.core.linalg import adjoint, eigh_descending
from fusionframe.core.operations import ffp, frame_operator_matrix, welch_bound
from fusionframe.flow.critical import classify_critical_point

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class OnePSCertificate:
    """
    Destabilizing one-parameter subgroup
    lambda(t) = diag(t^(d-l) I_l, t^(-l) I_(d-l)) in the S-eigenbasis.
    """
    top_eigenvalue: float
    ell: int
    m: int
    n: int
    d: int
    basis_rotation: np.ndarray  # 열이 S 의 고유벡터 (내림차순)

    @property
    def weight_exponent(self) -> int:
        return self.m * self.d - self.n * self.ell

    def weights(self) -> np.ndarray:
        """S-고유기저 좌표별 지수 (d-l 또는 -l)"""
        w = np.full(self.d, -self.ell, dtype=int)
        w[: self.ell] = self.d - self.ell
        return w

    def subgroup(self, t: float) -> np.ndarray:
        """표준 기저에서의 lambda(t) (det = 1)"""
        v = self.basis_rotation
        return (v * np.power(float(t), self.weights())) @ adjoint(v)

def welch_gap(frame: OperatorFrame) -> float:
    """FFP - n^2/d"""
    return ffp(frame) - welch_bound(frame.config)

def instability_certificate(frame: OperatorFrame, tol: Optional[float] = None) -> Optional[OnePSCertificate]:
    """
    Hilbert-Mumford certificate for a non-tight critical point.

    With l = dim of the top eigenspace of S and m the number of aligned
    rows lying in it, the subgroup drives tau(A) to zero like t^(md - nl),
    and md - nl > 0 whenever the critical point is not tight.
    """
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    report = classify_critical_point(frame, tol)
    if not report.is_critical:
        raise FrameValidationError(
            f"instability certificate needs a critical point (|grad| = {report.gradient_norm:.3e} > {tol:.1e})"
        )
    if report.is_tight:
        return None

    vals, vecs = eigh_descending(frame_operator_matrix(frame.blocks))
    top = vals[0]
    ell = int(np.sum(vals >= top - tol))
    if ell < frame.d:
        gap = float(vals[ell - 1] - vals[ell])
        if gap < tol:
            raise ClusteringAmbiguityError(
                f"top eigenvalue cluster is ambiguous: boundary gap {gap:.3e} < tol {tol:.1e}", gap
            )

    m = int(sum(np.sum(np.abs(row_vals - top) <= tol) for row_vals in report.row_eigenvalues))
    cert = OnePSCertificate(float(top), ell, m, frame.n, frame.d, vecs)
    if cert.weight_exponent <= 0:
        logger.warning(f"비-tight 임계점인데 지수가 양수가 아님: md - nl = {cert.weight_exponent}")
        return None
    return cert

def apply_one_parameter_subgroup(frame: OperatorFrame, certificate: OnePSCertificate, t: float) -> OperatorFrame:
    """
    Act on every row a_ij^* by lambda(t): A_i -> A_i lambda(t)^*.

    The image is only embedded, not used as a frame: as t -> 0 the rows of
    one block separate in scale by t^d, so no rank check is applied.
    """
    g = certificate.subgroup(t)
    return OperatorFrame._trusted(frame.config, [a @ adjoint(g) for a in frame.blocks])
