"""
Property S: for every proper subspace Q of K^d,

    (1 / dim Q) * sum_i dim(S_i ∩ Q) <= n / d.

The quantifier ranges over infinitely many Q, so the checker evaluates a
finite candidate family and reports a witness for the first violation.
In the classical case (all k_i = 1) a maximizing Q can be taken to be the
span of the frame vectors it contains, so enumerating every subset span
makes the verdict exact.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

import numpy as np
import scipy.linalg

from fusionframe.config.settings import settings
from fusionframe.core.frames import OperatorFrame
from fusionframe.core.generate import gaussian_block
from fusionframe.core.linalg import adjoint
from fusionframe.core.operations import frame_operator_matrix

logger = logging.getLogger(__name__)

class PropertySStatus(str, Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"  # 위반 없음, 완전성은 보장되지 않음

@dataclass(frozen=True)
class SubspaceWitness:
    basis: np.ndarray  # d x q, 정규직교 열
    dims: Tuple[int, ...]
    lhs: float
    rhs: float
    source: str = "explicit"

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs

    def violates(self, tol: Optional[float] = None) -> bool:
        tol = settings.STRUCTURAL_TOL if tol is None else tol
        return self.margin > tol

@dataclass(frozen=True)
class PropertySResult:
    status: PropertySStatus
    witness: Optional[SubspaceWitness]
    candidates_checked: int
    exact: bool

    @property
    def violated(self) -> bool:
        return self.status is PropertySStatus.VIOLATED

def _rank(m: np.ndarray, rank_rtol: float) -> int:
    if m.size == 0:
        return 0
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > rank_rtol * sv[0]))

def intersection_dim(u: np.ndarray, w: np.ndarray, rank_rtol: Optional[float] = None) -> int:
    """dim(col U ∩ col W) = dim U + dim W - rank [U | W]"""
    rank_rtol = settings.RANK_RTOL if rank_rtol is None else rank_rtol
    return u.shape[1] + w.shape[1] - _rank(np.hstack([u, w]), rank_rtol)

def _orth(m: np.ndarray, rank_rtol: float) -> np.ndarray:
    if m.size == 0:
        return m
    return scipy.linalg.orth(m, rcond=rank_rtol)

def _intersect(u: np.ndarray, w: np.ndarray, rank_rtol: float) -> np.ndarray:
    if u.shape[1] == 0 or w.shape[1] == 0:
        return u[:, :0]
    coeffs = scipy.linalg.null_space(np.hstack([u, -w]), rcond=rank_rtol)
    if coeffs.shape[1] == 0:
        return u[:, :0]
    return _orth(u @ coeffs[: u.shape[1]], rank_rtol)

def subspace_bases(frame: OperatorFrame) -> List[np.ndarray]:
    """S_i = row(A_i), 정규직교 열 기저 A_i^*"""
    return [adjoint(a) for a in frame.blocks]

def evaluate_subspace(frame: OperatorFrame, basis: np.ndarray, rank_rtol: Optional[float] = None,
                      source: str = "explicit") -> SubspaceWitness:
    """Q = col(basis) 에 대한 property S 부등식의 양변"""
    rank_rtol = settings.RANK_RTOL if rank_rtol is None else rank_rtol
    q_basis = _orth(np.asarray(basis), rank_rtol)
    q = q_basis.shape[1]
    if q == 0 or q >= frame.d:
        raise ValueError(f"Q must be a proper nonzero subspace, got dim {q} in K^{frame.d}")
    dims = tuple(intersection_dim(si, q_basis, rank_rtol) for si in subspace_bases(frame))
    return SubspaceWitness(q_basis, dims, sum(dims) / q, frame.n / frame.d, source)

def _candidates(frame: OperatorFrame, subset_size_cap: int, random_subspaces: int, seed: int,
                rank_rtol: float) -> Iterator[Tuple[str, np.ndarray]]:
    d = frame.d
    N = frame.config.N
    bases = subspace_bases(frame)

    # (a) S_A 의 고유공간과 그 합
    vals, vecs = np.linalg.eigh(frame_operator_matrix(frame.blocks))
    clusters: List[List[int]] = [[0]]
    for j in range(1, d):
        if vals[j] - vals[j - 1] < settings.SPECTRAL_TOL:
            clusters[-1].append(j)
        else:
            clusters.append([j])
    clusters.reverse()
    for size in range(1, min(len(clusters) - 1, subset_size_cap) + 1):
        for chosen in combinations(range(len(clusters)), size):
            cols = [j for c in chosen for j in clusters[c]]
            yield "eigenspaces", vecs[:, cols]

    # (b) sum_{i in T} S_i, 그리고 |T| >= 3 인 교집합
    cap = min(N, subset_size_cap)
    for size in range(1, cap + 1):
        for subset in combinations(range(N), size):
            yield f"sum{list(subset)}", _orth(np.hstack([bases[i] for i in subset]), rank_rtol)
        if size < 3:
            continue
        for subset in combinations(range(N), size):
            inter = bases[subset[0]]
            for i in subset[1:]:
                inter = _intersect(inter, bases[i], rank_rtol)
            yield f"intersection{list(subset)}", inter

    # (c) 두 부분공간의 교집합
    for i, j in combinations(range(N), 2):
        yield f"intersection[{i}, {j}]", _intersect(bases[i], bases[j], rank_rtol)

    # (d) 무작위 부분공간
    rng = np.random.default_rng(seed)
    for q in range(1, d):
        for _ in range(random_subspaces):
            yield f"random[dim={q}]", _orth(gaussian_block(q, d, frame.field, rng).T, rank_rtol)

def check_property_S(
    frame: OperatorFrame,
    tol: Optional[float] = None,
    subset_size_cap: Optional[int] = None,
    random_subspaces: Optional[int] = None,
    seed: Optional[int] = None,
    rank_rtol: Optional[float] = None,
) -> PropertySResult:
    """
    Semidecision for property S over the candidate family.

    Returns VIOLATED with the first witness in canonical candidate order,
    SATISFIED when no violation exists and the family is exhaustive (the
    classical case with every subset enumerated), INCONCLUSIVE otherwise.
    """
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    subset_size_cap = settings.SUBSET_SIZE_CAP if subset_size_cap is None else subset_size_cap
    random_subspaces = settings.RANDOM_SUBSPACES if random_subspaces is None else random_subspaces
    seed = settings.PROPERTY_S_SEED if seed is None else seed
    rank_rtol = settings.RANK_RTOL if rank_rtol is None else rank_rtol

    exact = all(k == 1 for k in frame.config.ranks) and frame.config.N <= subset_size_cap
    checked = 0
    for source, basis in _candidates(frame, subset_size_cap, random_subspaces, seed, rank_rtol):
        q = basis.shape[1]
        if q == 0 or q >= frame.d:
            continue
        checked += 1
        witness = evaluate_subspace(frame, basis, rank_rtol, source)
        if witness.violates(tol):
            logger.debug(f"property S 위반: {source}, lhs={witness.lhs:.6g} > rhs={witness.rhs:.6g}")
            return PropertySResult(PropertySStatus.VIOLATED, witness, checked, exact)

    status = PropertySStatus.SATISFIED if exact else PropertySStatus.INCONCLUSIVE
    logger.debug(f"property S 검사 완료: {status.value}, 후보 {checked} 개")
    return PropertySResult(status, None, checked, exact)
