import logging
import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from fusionframe.config.settings import settings
from fusionframe.core.frames import FrameConfig

logger = logging.getLogger(__name__)

class TFFVerdict(str, Enum):
    EXISTS = "exists"
    IMPOSSIBLE = "impossible"
    UNDECIDED = "undecided"

@dataclass(frozen=True)
class DimensionCountObstruction:
    """Q 가 subset 의 부분공간들을 포함할 때 property S 비율의 하한"""
    subset: tuple
    q: int
    lower_bound: float
    trace_value: float

@dataclass(frozen=True)
class TFFCheck:
    trace_value: float
    verdict: TFFVerdict
    note: str
    obstruction: Optional[DimensionCountObstruction] = None

def equal_rank_tff_exists(N: int, k: int, d: int) -> bool:
    """
    Spectral-tetris reduction for N subspaces of dimension k in K^d.

    True means a tight fusion frame with these parameters can be built;
    False means the reduction gives no construction.
    """
    if N < 1 or k < 1 or k > d:
        raise ValueError(f"invalid equal-rank parameters N={N}, k={k}, d={d}")
    if k == d:
        return True
    if 2 * k > d:
        k = d - k  # 여공간
    while True:
        if d % k == 0:
            return N >= d // k
        ceiling = math.ceil(d / k)
        if N > ceiling + 1:
            return True
        if N < ceiling + 1:
            return False
        # N = ceil(d/k) + 1: Naimark 보완으로 축소, d 는 엄격히 감소
        d = N * k - d
        k = d - k

def dimension_count_obstruction(config: FrameConfig, subset_size_cap: Optional[int] = None
                                ) -> Optional[DimensionCountObstruction]:
    """
    For a block subset T with q = sum_T k_i < d, a q-plane Q containing
    those subspaces meets every other S_j in at least max(0, k_j + q - d)
    dimensions. If the resulting ratio exceeds n/d for some T, no frame
    in the space has property S, so no tight fusion frame exists.
    """
    subset_size_cap = settings.SUBSET_SIZE_CAP if subset_size_cap is None else subset_size_cap
    d, ranks = config.d, config.ranks
    trace_value = config.n / d
    best = None
    for size in range(1, min(config.N, subset_size_cap) + 1):
        for subset in combinations(range(config.N), size):
            q = sum(ranks[i] for i in subset)
            if q >= d:
                continue
            forced = sum(max(0, ranks[j] + q - d) for j in range(config.N) if j not in subset)
            bound = (q + forced) / q
            if bound > trace_value + settings.STRUCTURAL_TOL and (best is None or bound > best.lower_bound):
                best = DimensionCountObstruction(subset, q, bound, trace_value)
    return best

def tff_necessary_check(config: FrameConfig) -> TFFCheck:
    """
    Trace value n/d of any tight fusion frame plus what this toolkit can
    decide about existence. General existence hinges on non-vanishing
    Littlewood-Richardson coefficients, which is not decided here.
    """
    trace_value = config.n / config.d
    if config.n < config.d:
        return TFFCheck(trace_value, TFFVerdict.IMPOSSIBLE,
                        f"n={config.n} < d={config.d}: the subspaces cannot span K^{config.d}")

    obstruction = dimension_count_obstruction(config)
    if obstruction is not None:
        blocks = ", ".join(str(i) for i in obstruction.subset)
        return TFFCheck(
            trace_value, TFFVerdict.IMPOSSIBLE,
            f"no frame has property S: a {obstruction.q}-plane containing blocks [{blocks}] "
            f"has ratio >= {obstruction.lower_bound:.6g} > n/d = {trace_value:.6g}",
            obstruction,
        )

    if config.n % config.d == 0:
        return TFFCheck(trace_value, TFFVerdict.EXISTS,
                        f"consecutive standard basis blocks cover every coordinate {config.n // config.d} times")

    ranks = set(config.ranks)
    if len(ranks) == 1:
        k = ranks.pop()
        if equal_rank_tff_exists(config.N, k, config.d):
            return TFFCheck(trace_value, TFFVerdict.EXISTS,
                            f"equal-rank construction available for N={config.N}, k={k}, d={config.d}")
        return TFFCheck(trace_value, TFFVerdict.UNDECIDED,
                        "equal-rank reduction gives no construction; existence depends on "
                        "Littlewood-Richardson conditions not decided here")

    return TFFCheck(trace_value, TFFVerdict.UNDECIDED,
                    "unequal ranks: existence depends on Littlewood-Richardson conditions not decided here")
