from typing import Optional, Sequence, Tuple

import numpy as np

from fusionframe.core.errors import FrameValidationError
from fusionframe.core.frames import OperatorFrame
from fusionframe.core.linalg import adjoint
from fusionframe.core.operations import frame_operator_matrix, is_fusion_frame

Blocks = Tuple[np.ndarray, ...]

def _as_blocks(frame_or_blocks) -> Blocks:
    if isinstance(frame_or_blocks, OperatorFrame):
        return frame_or_blocks.blocks
    return tuple(np.asarray(b) for b in frame_or_blocks)

def efp(frame_or_blocks) -> float:
    """||sum_i A_i^* A_i||^2 on the whole ambient matrix space"""
    s = frame_operator_matrix(_as_blocks(frame_or_blocks))
    return float(np.real(np.vdot(s, s)))

def extrinsic_gradient(frame_or_blocks) -> Blocks:
    """block i = 4 A_i S_A"""
    blocks = _as_blocks(frame_or_blocks)
    s = frame_operator_matrix(blocks)
    return tuple(4.0 * a @ s for a in blocks)

def _riemannian_blocks(blocks: Sequence[np.ndarray], s: np.ndarray) -> Blocks:
    out = []
    for a in blocks:
        a_s = a @ s
        out.append(4.0 * (a_s - (a_s @ adjoint(a)) @ a))
    return tuple(out)

def riemannian_gradient(frame: OperatorFrame, tol: Optional[float] = None) -> Blocks:
    """
    block i = 4 (A_i S - (A_i S A_i^*) A_i) = 4 A_i S (I - A_i^* A_i).

    The projection formula assumes A_i A_i^* = I, so non-fusion-frame
    input is rejected.
    """
    if not is_fusion_frame(frame, tol):
        raise FrameValidationError("riemannian_gradient requires a fusion frame (row-orthonormal blocks, S > 0)")
    return _riemannian_blocks(frame.blocks, frame_operator_matrix(frame.blocks))

def gradient_norm(blocks: Sequence[np.ndarray]) -> float:
    return float(np.sqrt(sum(np.real(np.vdot(g, g)) for g in blocks)))
