from typing import Optional, Sequence

import numpy as np

from fusionframe.config.settings import settings
from fusionframe.core.errors import StepTooLargeError, StructuralError
from fusionframe.core.frames import FrameConfig, OperatorFrame, ScalarField
from fusionframe.core.linalg import polar_rows

def retract(
    frame_plus_step: Sequence[np.ndarray],
    tol: Optional[float] = None,
    config: Optional[FrameConfig] = None,
) -> OperatorFrame:
    """
    Polar retraction B_i -> (B_i B_i^*)^{-1/2} B_i for every block.

    Raises StepTooLargeError when a block lost rank; callers shrink the step.
    """
    tol = settings.RANK_RTOL if tol is None else tol
    blocks = []
    for i, b in enumerate(frame_plus_step):
        try:
            blocks.append(polar_rows(np.asarray(b), rank_rtol=tol))
        except StructuralError as e:
            raise StepTooLargeError(f"block {i}: {e}") from e
    if config is None:
        field = ScalarField.COMPLEX if any(np.iscomplexobj(b) for b in blocks) else ScalarField.REAL
        config = FrameConfig(field=field, d=blocks[0].shape[1], ranks=tuple(b.shape[0] for b in blocks))
    return OperatorFrame._trusted(config, blocks)
