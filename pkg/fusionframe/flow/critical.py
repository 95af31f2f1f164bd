from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from fusionframe.config.settings import settings
from fusionframe.core.frames import OperatorFrame
from fusionframe.core.linalg import adjoint, tie_preserving_order
from fusionframe.core.operations import frame_operator_matrix, is_tight
from .gradients import _riemannian_blocks, gradient_norm

@dataclass(frozen=True)
class CriticalPointReport:
    gradient_norm: float
    is_critical: bool
    is_tight: bool
    row_spaces_invariant: bool
    aligned_frame: OperatorFrame
    row_eigenvalues: List[np.ndarray]  # A_i S A_i^* 의 고유값, aligned 행 순서

def classify_critical_point(frame: OperatorFrame, tol: Optional[float] = None) -> CriticalPointReport:
    """
    Critical points of FFP are exactly the frames whose row spaces are
    S-invariant; rotating each block by the eigenvectors of A_i S A_i^*
    makes every row an eigenvector of S.
    """
    tol = settings.STRUCTURAL_TOL if tol is None else tol
    s = frame_operator_matrix(frame.blocks)
    grad = _riemannian_blocks(frame.blocks, s)
    gnorm = gradient_norm(grad)
    # grad_i = 4 A_i S (I - A_i^* A_i)
    invariant = all(np.linalg.norm(g) / 4.0 <= tol for g in grad)

    aligned = []
    row_eigs = []
    for a in frame.blocks:
        m = a @ s @ adjoint(a)
        vals, vecs = np.linalg.eigh((m + adjoint(m)) / 2)
        order = tie_preserving_order(vals)
        u = adjoint(vecs[:, order])
        aligned.append(u @ a)
        row_eigs.append(vals[order])

    return CriticalPointReport(
        gradient_norm=gnorm,
        is_critical=gnorm <= tol,
        is_tight=is_tight(frame, tol),
        row_spaces_invariant=invariant,
        aligned_frame=OperatorFrame._trusted(frame.config, aligned),
        row_eigenvalues=row_eigs,
    )
