import logging
from typing import List, Optional, Sequence

import numpy as np

from fusionframe.config.settings import settings
from .errors import StructuralError
from .frames import FrameConfig, HermitianOperator, OperatorFrame, SpectralData
from .linalg import adjoint, eigh_descending

logger = logging.getLogger(__name__)

def frame_operator_matrix(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """S = sum_i A_i^* A_i (검증 없는 내부용)"""
    d = blocks[0].shape[1]
    s = np.zeros((d, d), dtype=np.result_type(*blocks))
    for a in blocks:
        if a.ndim != 2 or a.shape[1] != d:
            raise StructuralError(f"block of shape {a.shape} does not act on K^{d}")
        s += adjoint(a) @ a
    # 수치적 Hermitian 대칭 강제
    return (s + adjoint(s)) / 2

def frame_operator(frame: OperatorFrame) -> HermitianOperator:
    return HermitianOperator(frame_operator_matrix(frame.blocks))

def projectors(frame: OperatorFrame) -> List[HermitianOperator]:
    """P_i = A_i^* A_i"""
    return [HermitianOperator(adjoint(a) @ a) for a in frame.blocks]

def ffp(frame: OperatorFrame) -> float:
    """fusion frame potential ||S_A||^2 (Frobenius)"""
    s = frame_operator_matrix(frame.blocks)
    return float(np.real(np.vdot(s, s)))

def welch_bound(config: FrameConfig) -> float:
    """FFP 의 하한 n^2 / d"""
    return config.n ** 2 / config.d

def is_tight(frame: OperatorFrame, tol: Optional[float] = None) -> bool:
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    s = frame_operator_matrix(frame.blocks)
    target = (frame.n / frame.d) * np.eye(frame.d)
    return bool(np.linalg.norm(s - target) <= tol)

def is_fusion_frame(frame: OperatorFrame, tol: Optional[float] = None) -> bool:
    """각 A_i 의 행이 정규직교이고 S_A 가 양의 정부호인지 확인"""
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    for a in frame.blocks:
        if np.linalg.norm(a @ adjoint(a) - np.eye(a.shape[0])) > tol:
            return False
    smallest = np.linalg.eigvalsh(frame_operator_matrix(frame.blocks))[0]
    return bool(smallest > tol)

def spectrum(op: HermitianOperator, return_vectors: bool = False, tol: Optional[float] = None):
    """
    Eigenvalues in decreasing order; with ``return_vectors`` also the
    eigenvector matrix V (columns), checked so that ||op - V diag V*|| <= tol.
    """
    if not isinstance(op, HermitianOperator):
        op = HermitianOperator(np.asarray(op))
    vals, vecs = eigh_descending(op.matrix)
    if not return_vectors:
        return vals
    tol = settings.SPECTRAL_TOL if tol is None else tol
    residual = np.linalg.norm(op.matrix - (vecs * vals) @ adjoint(vecs))
    if residual > tol * max(1.0, float(np.linalg.norm(op.matrix))):
        raise StructuralError(f"eigendecomposition residual {residual:.3e} exceeds tolerance")
    return vals, vecs

def block_spectra(frame: OperatorFrame) -> List[np.ndarray]:
    """nonzero eigenvalues of each P_i, i.e. eigenvalues of A_i A_i^* (decreasing)"""
    return [np.linalg.eigvalsh(a @ adjoint(a))[::-1] for a in frame.blocks]

def check_spectral_membership(frame: OperatorFrame, target: SpectralData, tol: Optional[float] = None) -> bool:
    tol = settings.SPECTRAL_TOL if tol is None else tol
    if target.r is not None:
        if len(target.r) != frame.config.N:
            raise StructuralError(f"r has {len(target.r)} lists for {frame.config.N} blocks")
        for i, (observed, wanted) in enumerate(zip(block_spectra(frame), target.r)):
            if len(wanted) != len(observed):
                raise StructuralError(f"r_{i} has length {len(wanted)}, block rank is {len(observed)}")
            if np.max(np.abs(observed - np.asarray(wanted))) > tol:
                return False
    if target.lambda_ is not None:
        if len(target.lambda_) != frame.d:
            raise StructuralError(f"lambda has length {len(target.lambda_)}, expected d={frame.d}")
        observed = spectrum(frame_operator(frame))
        if np.max(np.abs(observed - np.asarray(target.lambda_))) > tol:
            return False
    return True
