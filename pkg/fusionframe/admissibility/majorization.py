from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from fusionframe.config.settings import settings
from fusionframe.core.errors import StructuralError

class MajorizationQuery(BaseModel):
    """고전적 경우의 (lambda, r) 질의: 두 목록 모두 내림차순으로 정렬"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    lambda_: Tuple[float, ...] = Field(alias="lambda")
    r: Tuple[float, ...]

    @field_validator("lambda_", "r", mode="before")
    @classmethod
    def _sorted_positive(cls, value):
        values = [float(v) for v in value]
        if not values:
            raise ValueError("spectral lists must be non-empty")
        if any(v <= 0 for v in values):
            raise ValueError(f"entries must be positive: {values}")
        return tuple(sorted(values, reverse=True))

    @property
    def d(self) -> int:
        return len(self.lambda_)

    @property
    def N(self) -> int:
        return len(self.r)

def majorizes(lambda_: Sequence[float], r: Sequence[float], tol: Optional[float] = None) -> bool:
    """
    True iff lambda majorizes r: equal totals and every top-k partial sum
    of lambda dominates the one of r (k = 1..d), both sorted decreasing.

    r is padded with zeros when it is shorter than lambda.
    """
    tol = settings.MAJORIZATION_TOL if tol is None else tol
    if len(lambda_) == 0 or len(r) == 0:
        raise StructuralError("majorization needs non-empty lists")
    lam = np.sort(np.asarray(lambda_, dtype=float))[::-1]
    rr = np.sort(np.asarray(r, dtype=float))[::-1]
    if abs(lam.sum() - rr.sum()) > tol:
        return False
    d = len(lam)
    if len(rr) < d:
        rr = np.concatenate([rr, np.zeros(d - len(rr))])
    return bool(np.all(np.cumsum(lam) >= np.cumsum(rr[:d]) - tol))

def query_majorizes(query: MajorizationQuery, tol: Optional[float] = None) -> bool:
    return majorizes(query.lambda_, query.r, tol)
