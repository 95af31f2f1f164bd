import logging
from typing import Optional, Sequence

import numpy as np

from fusionframe.config.settings import settings
from .errors import DegenerateDrawError, StructuralError
from .frames import FrameConfig, OperatorFrame, ScalarField
from .linalg import orthonormalize_rows, random_unitary
from .operations import is_fusion_frame

logger = logging.getLogger(__name__)

def gaussian_block(k: int, d: int, field: ScalarField, rng: np.random.Generator) -> np.ndarray:
    """표준 Gaussian 성분의 k x d 행렬"""
    if field is ScalarField.REAL:
        return rng.standard_normal((k, d))
    return (rng.standard_normal((k, d)) + 1j * rng.standard_normal((k, d))) / np.sqrt(2)

def random_fusion_frame(config: FrameConfig, seed: int, max_redraws: Optional[int] = None) -> OperatorFrame:
    """
    Gaussian block 의 행을 정규직교화하여 무작위 fusion frame 생성.

    Deterministic given ``seed``. Degenerate draws are redrawn up to
    ``max_redraws`` times.
    """
    max_redraws = settings.MAX_REDRAWS if max_redraws is None else max_redraws
    rng = np.random.default_rng(seed)
    spans = config.n >= config.d

    for attempt in range(max_redraws + 1):
        try:
            blocks = [orthonormalize_rows(gaussian_block(k, config.d, config.field, rng)) for k in config.ranks]
            frame = OperatorFrame(config, tuple(blocks))
        except StructuralError as e:
            logger.warning(f"퇴화된 Gaussian 추출 (seed={seed}, attempt={attempt}): {e}")
            continue
        if spans and not is_fusion_frame(frame):
            logger.warning(f"frame operator 가 특이함, 재추출 (seed={seed}, attempt={attempt})")
            continue
        return frame

    raise DegenerateDrawError(f"no valid draw for {config} after {max_redraws} redraws (seed={seed})")

def mercedes_benz_frame() -> OperatorFrame:
    """ℝ^2 의 세 단위벡터 (90, 210, 330 도)"""
    angles = np.deg2rad([90.0, 210.0, 330.0])
    return OperatorFrame.from_blocks([np.array([[np.cos(t), np.sin(t)]]) for t in angles])

def orthonormal_sum_frame(d: int, ranks: Sequence[int], field: ScalarField = ScalarField.REAL) -> OperatorFrame:
    """
    Blocks made of consecutive standard basis rows, wrapping around K^d.

    Tight whenever every coordinate is covered the same number of times,
    e.g. d=4, ranks=(2, 2) or d=2, ranks=(1, 1, 1, 1).
    """
    eye = np.eye(d)
    blocks = []
    start = 0
    for k in ranks:
        rows = [(start + j) % d for j in range(k)]
        blocks.append(eye[rows])
        start = (start + k) % d
    config = FrameConfig(field=field, d=d, ranks=tuple(ranks))
    return OperatorFrame(config, tuple(blocks))

def rotate_frame(
    frame: OperatorFrame,
    block_unitaries: Optional[Sequence[np.ndarray]] = None,
    common_unitary: Optional[np.ndarray] = None,
) -> OperatorFrame:
    """(U_1 A_1 V^*, ..., U_N A_N V^*)"""
    blocks = []
    for i, a in enumerate(frame.blocks):
        if block_unitaries is not None:
            a = block_unitaries[i] @ a
        if common_unitary is not None:
            a = a @ common_unitary.conj().T
        blocks.append(a)
    config = frame.config
    if any(np.iscomplexobj(b) and np.any(np.imag(b) != 0) for b in blocks):
        config = config.as_complex()
    return OperatorFrame(config, tuple(blocks))

def random_rotation(frame: OperatorFrame, rng: np.random.Generator) -> OperatorFrame:
    """block 별 unitary 와 공통 unitary 를 무작위로 적용"""
    field = frame.field
    block_unitaries = [random_unitary(k, field, rng) for k in frame.config.ranks]
    common = random_unitary(frame.d, field, rng)
    return rotate_frame(frame, block_unitaries, common)
