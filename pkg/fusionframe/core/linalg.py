"""
Small dense linear algebra helpers shared by the frame modules.

All routines are field generic: the dtype of the input decides whether
conjugation matters, so real data stays real on the real path.
"""

import logging
from typing import Optional, Tuple

import numpy as np
import scipy.linalg
from scipy.stats import ortho_group, unitary_group

from fusionframe.config.settings import settings
from .errors import StructuralError
from .frames import ScalarField

logger = logging.getLogger(__name__)

def adjoint(m: np.ndarray) -> np.ndarray:
    return m.conj().T

def eigh_descending(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Hermitian 고유분해, 고유값 내림차순"""
    vals, vecs = np.linalg.eigh(m)
    return vals[::-1].copy(), vecs[:, ::-1].copy()

def tie_preserving_order(vals: np.ndarray, tie_tol: Optional[float] = None) -> np.ndarray:
    """
    Decreasing order of ascending solver output that keeps the solver order
    inside clusters whose consecutive gaps are below ``tie_tol``.
    """
    tie_tol = settings.TIE_TOL if tie_tol is None else tie_tol
    labels = np.zeros(len(vals), dtype=int)
    for j in range(1, len(vals)):
        labels[j] = labels[j - 1] + (1 if vals[j] - vals[j - 1] >= tie_tol else 0)
    return np.argsort(-labels, kind="stable")

def orthonormalize_rows(b: np.ndarray, rank_rtol: Optional[float] = None) -> np.ndarray:
    """
    QR 분해로 행을 정규직교화 (행 공간 보존).

    Raises StructuralError when the rows are numerically dependent.
    """
    rank_rtol = settings.RANK_RTOL if rank_rtol is None else rank_rtol
    q, r = scipy.linalg.qr(adjoint(b), mode="economic")
    diag = np.abs(np.diag(r))
    if diag.size == 0 or diag.max() == 0 or diag.min() <= rank_rtol * diag.max():
        raise StructuralError("rows are linearly dependent")
    # 부호/위상을 고정해 결과를 결정적으로 만듦
    phases = np.diag(r) / diag
    return adjoint(q * phases)

def polar_rows(b: np.ndarray, rank_rtol: Optional[float] = None) -> np.ndarray:
    """(B B*)^{-1/2} B, 행이 정규직교인 가장 가까운 행렬"""
    rank_rtol = settings.RANK_RTOL if rank_rtol is None else rank_rtol
    u, s, vh = np.linalg.svd(b, full_matrices=False)
    if s[0] == 0 or s[-1] <= rank_rtol * s[0]:
        raise StructuralError(f"block is rank deficient (sigma_min/sigma_max = {s[-1] / max(s[0], 1e-300):.3e})")
    return u @ vh

def random_unitary(k: int, field: ScalarField, rng: np.random.Generator) -> np.ndarray:
    """Haar 분포 k x k unitary (실수 field 이면 orthogonal)"""
    if k == 1:
        if field is ScalarField.REAL:
            return np.array([[rng.choice([-1.0, 1.0])]])
        return np.array([[np.exp(2j * np.pi * rng.random())]])
    if field is ScalarField.REAL:
        return ortho_group.rvs(k, random_state=rng)
    return unitary_group.rvs(k, random_state=rng)

def find_unitary_equivalence(a: np.ndarray, b: np.ndarray, tol: Optional[float] = None) -> Optional[np.ndarray]:
    """
    Unitary U with U A = B, or None when A*A != B*B.

    Full-rank A: U = polar(B A*(A A*)^{-1}). Rank-deficient A: the map is
    fixed on the column space of A through its SVD and completed by an
    arbitrary isometry between the orthogonal complements.
    """
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise StructuralError(f"shape mismatch: {a.shape} vs {b.shape}")
    if np.linalg.norm(adjoint(a) @ a - adjoint(b) @ b) > tol:
        return None

    k = a.shape[0]
    s = np.linalg.svd(a, compute_uv=False)
    full_rank = s.size > 0 and s[0] > 0 and s[-1] > settings.RANK_RTOL * s[0] and s.size == k
    if full_rank:
        guess = b @ adjoint(a) @ np.linalg.inv(a @ adjoint(a))
        u, _ = scipy.linalg.polar(guess)
    else:
        u = _complete_isometry(a, b)

    if np.linalg.norm(u @ a - b) > tol:
        logger.debug(f"unitary equivalence residual {np.linalg.norm(u @ a - b):.3e} > tol {tol:.1e}")
        return None
    return u

def _complete_isometry(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ua, s, vah = np.linalg.svd(a)
    r = int(np.sum(s > settings.RANK_RTOL * (s[0] if s.size else 0.0)))
    dtype = np.result_type(a, b)
    if r == 0:
        return np.eye(a.shape[0], dtype=dtype)
    # B v_j / s_j 는 A*A = B*B 이므로 정규직교
    w = b @ adjoint(vah[:r]) / s[:r]
    w_perp = scipy.linalg.null_space(adjoint(w))
    ua_perp = ua[:, r:]
    return (w @ adjoint(ua[:, :r]) + w_perp @ adjoint(ua_perp)).astype(dtype)
