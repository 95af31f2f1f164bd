from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Tuple

import numpy as np

from fusionframe.core.frames import OperatorFrame

def choose(d: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    """{0..d-1} 의 정렬된 k-부분집합"""
    return tuple(combinations(range(d), k))

def minor_vector(a: np.ndarray) -> np.ndarray:
    """a_1 ^ ... ^ a_k 의 좌표: 열 부분집합별 k x k minor"""
    k, d = a.shape
    return np.array([np.linalg.det(a[:, list(cols)]) for cols in choose(d, k)])

@dataclass(frozen=True)
class PluckerVector:
    """
    tau(A) = tau_1(A_1) (x) ... (x) tau_N(A_N), stored factored.

    ``factors[i][j]`` is the minor of block i on ``subsets[i][j]``.
    """
    factors: Tuple[np.ndarray, ...]
    subsets: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def norm(self) -> float:
        # 텐서곱의 norm 은 인수 norm 의 곱
        return float(np.prod([np.linalg.norm(f) for f in self.factors]))

    def dense(self) -> np.ndarray:
        """N 차원 배열로 전개 (작은 경우에만)"""
        return reduce(np.multiply.outer, self.factors)

    def coordinate(self, index: Tuple[Tuple[int, ...], ...]) -> complex:
        value = 1.0
        for factor, subsets, cols in zip(self.factors, self.subsets, index):
            value = value * factor[subsets.index(tuple(sorted(cols)))]
        return value

def plucker_embed(frame: OperatorFrame) -> PluckerVector:
    factors = tuple(minor_vector(a) for a in frame.blocks)
    subsets = tuple(choose(frame.d, k) for k in frame.config.ranks)
    return PluckerVector(factors, subsets)
