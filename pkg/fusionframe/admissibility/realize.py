import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from fusionframe.config.settings import settings
from fusionframe.core.errors import StructuralError
from fusionframe.core.frames import OperatorFrame, ScalarField
from fusionframe.core.generate import gaussian_block
from fusionframe.core.linalg import adjoint
from .majorization import majorizes

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class RealizedFrame:
    """
    Frame vectors f_i with ||f_i||^2 = r_i and sum f_i f_i^* close to diag(lambda).

    ``vectors`` holds f_i^* as rows; ``frame`` is the rank-one fusion frame
    of the normalized vectors.
    """
    vectors: np.ndarray
    residual: float
    restarts: int
    iterations: int

    @property
    def frame_operator(self) -> np.ndarray:
        return adjoint(self.vectors) @ self.vectors

    @property
    def frame(self) -> OperatorFrame:
        unit = self.vectors / np.linalg.norm(self.vectors, axis=1, keepdims=True)
        return OperatorFrame.from_blocks([row[None, :] for row in unit])

def _renormalize(f: np.ndarray, norms: np.ndarray) -> np.ndarray:
    return f * (norms / np.linalg.norm(f, axis=1))[:, None]

def _objective(f: np.ndarray, target: np.ndarray) -> float:
    return float(np.linalg.norm(adjoint(f) @ f - target) ** 2)

def realize_classical_spectrum(
    lambda_: Sequence[float],
    r: Sequence[float],
    field: ScalarField = ScalarField.COMPLEX,
    seed: int = 0,
    tol: float = 1e-6,
    max_restarts: int = 5,
    max_iters: int = 20_000,
) -> RealizedFrame:
    """
    Build N vectors in K^d with squared norms r and frame operator diag(lambda).

    Descent on ||S - diag(lambda)||^2 where every step is followed by
    renormalizing each vector to its prescribed norm; a run that stalls
    above ``tol`` is restarted from a fresh Gaussian draw.
    """
    lam = np.sort(np.asarray(lambda_, dtype=float))[::-1]
    norms = np.sqrt(np.asarray(r, dtype=float))
    if not majorizes(lam, r):
        raise StructuralError(f"lambda={list(lam)} does not majorize r={list(r)}")
    d, N = len(lam), len(norms)
    target = np.diag(lam).astype(field.dtype)
    step0 = 0.1 / lam[0]
    rng = np.random.default_rng(seed)

    best = None
    for restart in range(max_restarts + 1):
        f = _renormalize(gaussian_block(N, d, field, rng), norms)
        value = _objective(f, target)
        step = step0
        it = 0
        while value > tol ** 2 and it < max_iters:
            grad = 4 * f @ (adjoint(f) @ f - target)
            candidate = _renormalize(f - step * grad, norms)
            cand_value = _objective(candidate, target)
            if cand_value > value:
                step /= 2
                if step < step0 * 2.0 ** -settings.MAX_HALVINGS:
                    break
                continue
            f, value = candidate, cand_value
            step = min(step * 1.5, step0)
            it += 1
        residual = float(np.sqrt(value))
        if best is None or residual < best.residual:
            best = RealizedFrame(f, residual, restart, it)
        if residual <= tol:
            logger.info(f"스펙트럼 실현 성공: restart={restart}, iter={it}, residual={residual:.3e}")
            return best
        logger.warning(f"스펙트럼 실현 재시작 {restart + 1}/{max_restarts}: residual={residual:.3e}")
    return best
