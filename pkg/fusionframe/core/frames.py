from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, field_validator, model_validator

from fusionframe.config.settings import settings
from .errors import StructuralError

class ScalarField(str, Enum):
    """스칼라 field 태그 (ℝ 또는 ℂ)"""
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.float64) if self is ScalarField.REAL else np.dtype(np.complex128)

class FrameConfig(BaseModel):
    """frame 공간을 정의하는 파라미터 (field, d, ranks)"""
    model_config = ConfigDict(frozen=True)

    field: ScalarField = ScalarField.REAL
    d: PositiveInt
    ranks: Tuple[PositiveInt, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _ranks_fit_dimension(self) -> "FrameConfig":
        too_big = [k for k in self.ranks if k > self.d]
        if too_big:
            raise ValueError(f"every rank must satisfy k_i <= d={self.d}, got {too_big}")
        return self

    @property
    def n(self) -> int:
        return int(sum(self.ranks))

    @property
    def N(self) -> int:
        return len(self.ranks)

    def as_complex(self) -> "FrameConfig":
        return self.model_copy(update={"field": ScalarField.COMPLEX})

class SpectralData(BaseModel):
    """개별 스펙트럼 r 과 frame operator 스펙트럼 lambda 목표값"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    r: Optional[Tuple[Tuple[float, ...], ...]] = None
    lambda_: Optional[Tuple[float, ...]] = Field(default=None, alias="lambda")

    @field_validator("r")
    @classmethod
    def _r_decreasing(cls, value):
        if value is None:
            return value
        for block in value:
            _check_decreasing_positive(block, "r_i")
        return value

    @field_validator("lambda_")
    @classmethod
    def _lambda_decreasing(cls, value):
        if value is not None:
            _check_decreasing_positive(value, "lambda")
        return value

def _check_decreasing_positive(values: Sequence[float], name: str):
    if len(values) == 0:
        raise ValueError(f"{name} must be non-empty")
    if any(v <= 0 for v in values):
        raise ValueError(f"{name} entries must be positive: {list(values)}")
    if any(a < b for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} must be sorted in decreasing order: {list(values)}")

@dataclass(frozen=True)
class HermitianOperator:
    """d x d Hermitian 행렬 (S_A, P_i 등)"""
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise StructuralError(f"Hermitian operator must be square, got shape {m.shape}")
        scale = max(1.0, float(np.linalg.norm(m)))
        asym = float(np.linalg.norm(m - m.conj().T))
        if asym > settings.STRUCTURAL_TOL * scale:
            raise StructuralError(f"operator is not Hermitian (||M - M*|| = {asym:.3e})")
        m = np.array(m, copy=True)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

@dataclass(frozen=True)
class OperatorFrame:
    """N 개의 k_i x d block A_i 로 이루어진 operator-valued frame"""
    config: FrameConfig
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.blocks) != self.config.N:
            raise StructuralError(f"expected {self.config.N} blocks, got {len(self.blocks)}")
        dtype = self.config.field.dtype
        checked = []
        for i, (block, k) in enumerate(zip(self.blocks, self.config.ranks)):
            a = np.asarray(block)
            if a.shape != (k, self.config.d):
                raise StructuralError(f"block {i} has shape {a.shape}, expected ({k}, {self.config.d})")
            if np.iscomplexobj(a) and dtype.kind != "c":
                if np.any(a.imag != 0):
                    raise StructuralError(f"block {i} has complex entries but the field is real")
                a = a.real
            a = np.array(a, dtype=dtype, copy=True)
            if not np.all(np.isfinite(a)):
                raise StructuralError(f"block {i} has non-finite entries")
            sv = np.linalg.svd(a, compute_uv=False)
            if sv[0] == 0 or sv[-1] <= settings.RANK_RTOL * sv[0]:
                raise StructuralError(f"block {i} is rank deficient (rk(A_i) < k_i={k})")
            a.setflags(write=False)
            checked.append(a)
        object.__setattr__(self, "blocks", tuple(checked))

    @classmethod
    def from_blocks(cls, blocks: Sequence[np.ndarray], field: Optional[ScalarField] = None) -> "OperatorFrame":
        """block 목록에서 config 를 추론하여 frame 생성"""
        arrays = [np.atleast_2d(np.asarray(b)) for b in blocks]
        if not arrays:
            raise StructuralError("a frame needs at least one block")
        if field is None:
            field = ScalarField.COMPLEX if any(np.iscomplexobj(a) for a in arrays) else ScalarField.REAL
        d = arrays[0].shape[1]
        if any(a.shape[1] != d for a in arrays):
            raise StructuralError("all blocks must have the same number of columns d")
        config = FrameConfig(field=field, d=d, ranks=tuple(a.shape[0] for a in arrays))
        return cls(config, tuple(arrays))

    @classmethod
    def _trusted(cls, config: FrameConfig, blocks: Sequence[np.ndarray]) -> "OperatorFrame":
        # 내부 루프 전용: 이미 검증된 block
        frame = object.__new__(cls)
        frozen = []
        for b in blocks:
            b = np.array(b, dtype=config.field.dtype, copy=True)
            b.setflags(write=False)
            frozen.append(b)
        object.__setattr__(frame, "config", config)
        object.__setattr__(frame, "blocks", tuple(frozen))
        return frame

    @property
    def d(self) -> int:
        return self.config.d

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def field(self) -> ScalarField:
        return self.config.field

    def with_blocks(self, blocks: Sequence[np.ndarray]) -> "OperatorFrame":
        return OperatorFrame(self.config, tuple(blocks))

    def as_complex(self) -> "OperatorFrame":
        """실수 frame 을 복소수 경로로 옮김"""
        return OperatorFrame._trusted(self.config.as_complex(), self.blocks)
