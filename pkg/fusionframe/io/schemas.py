from datetime import datetime
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

from fusionframe.core.frames import ScalarField

# real 성분은 숫자, complex 성분은 [re, im]
Entry = Union[float, List[float]]
Matrix = List[List[Entry]]

class FrameFile(BaseModel):
    """frame 파일 모델"""
    field: ScalarField
    d: int
    ranks: List[int]
    blocks: List[Matrix]

class SubspaceWitnessModel(BaseModel):
    """property S 위반 증인 모델"""
    basis: Matrix
    dims: List[int]
    lhs: float
    rhs: float
    margin: float
    source: str

class PropertySReport(BaseModel):
    """property S 검사 결과 모델"""
    status: str
    violated: bool
    exact: bool
    candidates_checked: int
    witness: Optional[SubspaceWitnessModel] = None

class OnePSCertificateModel(BaseModel):
    """1-PS 불안정성 증명서 모델"""
    top_eigenvalue: float
    ell: int
    m: int
    n: int
    d: int
    weight_exponent: int
    weights: List[int]
    basis_rotation: Matrix

class CertificateReport(BaseModel):
    """증명서 검사 결과 모델 (tight 이면 certificate 없음)"""
    is_critical: bool
    is_tight: bool
    ffp: float
    welch_bound: float
    certificate: Optional[OnePSCertificateModel] = None
    note: str = ""

class CriticalPointModel(BaseModel):
    """임계점 분류 결과 모델"""
    gradient_norm: float
    is_critical: bool
    is_tight: bool
    row_spaces_invariant: bool
    row_eigenvalues: List[List[float]]

class TightnessReport(BaseModel):
    """tightness 검사 결과 모델"""
    ffp: float
    welch_bound: float
    gap: float
    is_tight: bool
    is_fusion_frame: bool

class SpectraReport(BaseModel):
    """스펙트럼 검사 결과 모델"""
    frame_spectrum: List[float]
    block_spectra: List[List[float]]
    target_lambda: Optional[List[float]] = None
    target_r: Optional[List[List[float]]] = None
    match: Optional[bool] = None

class AdmissibilityReport(BaseModel):
    """허용성 검사 결과 모델"""
    kind: str
    result: Optional[bool] = None
    trace_value: Optional[float] = None
    verdict: Optional[str] = None
    note: str = ""

class RunManifest(BaseModel):
    """실행 기록 모델: 같은 manifest 로 재실행하면 같은 출력"""
    command: str
    parameters: Dict[str, Any]
    seed: Optional[int] = None
    version: str
    started_at: datetime
    duration_seconds: float
    outputs: List[str] = Field(default_factory=list)
    exit_code: int = 0

class RunSummary(BaseModel):
    """재현 실험의 seed 별 결과 모델"""
    seed: int
    converged: bool
    iterations: int
    final_ffp: float
    reached_target: bool
    above_bound: bool
    dihedral_angle: Optional[float] = None
    pairwise_angles: Optional[List[float]] = None
    geometry_ok: Optional[bool] = None
    trace_path: str
    error: Optional[str] = None

class ReproductionSummary(BaseModel):
    """재현 실험 요약 모델"""
    d: int
    ranks: List[int]
    field: ScalarField
    target_ffp: float
    target_tol: float
    welch_bound: float
    angle_tol: float
    master_seed: int
    seeds: List[int]
    runs: List[RunSummary]
    fraction_reaching_target: float
    fraction_geometry_ok: float
