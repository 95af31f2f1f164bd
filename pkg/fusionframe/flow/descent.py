import logging
import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from fusionframe.config.settings import settings
from fusionframe.core.errors import DivergenceError, FrameValidationError, StepTooLargeError
from fusionframe.core.frames import OperatorFrame
from fusionframe.core.operations import frame_operator_matrix, is_fusion_frame
from .gradients import _riemannian_blocks, gradient_norm
from .retraction import retract

logger = logging.getLogger(__name__)

class DescentSettings(BaseModel):
    """경사 하강 설정"""
    model_config = ConfigDict(frozen=True)

    step_size: float = Field(default_factory=lambda: settings.STEP_SIZE, gt=0)
    line_search: bool = True  # FFP 가 증가하면 step 을 절반으로
    max_iters: int = Field(default_factory=lambda: settings.MAX_ITERS, ge=1)
    grad_tol: float = Field(default_factory=lambda: settings.CONVERGENCE_TOL, gt=0)
    record_every: int = Field(default_factory=lambda: settings.RECORD_EVERY, ge=1)
    max_halvings: int = Field(default_factory=lambda: settings.MAX_HALVINGS, ge=0)
    monotone_slack: float = Field(default_factory=lambda: settings.MONOTONE_SLACK, ge=0)
    keep_iterates: bool = False

class TraceRecord(NamedTuple):
    iter: int
    ffp: float
    grad_norm: float

@dataclass
class DescentTrace:
    """하강 기록: (iter, FFP, gradient norm) 시계열과 최종 frame"""
    records: List[TraceRecord]
    final_frame: OperatorFrame
    converged: bool
    iterations: int
    iterates: List[OperatorFrame] = field(default_factory=list)

    @property
    def ffp_values(self) -> np.ndarray:
        return np.array([r.ffp for r in self.records])

    @property
    def final_ffp(self) -> float:
        return self.records[-1].ffp

    @property
    def final_grad_norm(self) -> float:
        return self.records[-1].grad_norm

def _potential(s: np.ndarray) -> float:
    return float(np.real(np.vdot(s, s)))

def descend(start: OperatorFrame, options: Optional[DescentSettings] = None) -> DescentTrace:
    """
    Projected gradient descent on FFP with polar retraction.

    Every iteration tries A <- retract(A - step * grad FFP(A)) with the
    configured step and halves it while the potential would increase.
    Stops once ||grad|| <= grad_tol or after max_iters iterations.
    """
    options = options or DescentSettings()
    if not is_fusion_frame(start):
        raise FrameValidationError("descent must start from a fusion frame")

    config = start.config
    blocks = start.blocks
    s = frame_operator_matrix(blocks)
    value = _potential(s)
    grad = _riemannian_blocks(blocks, s)
    gnorm = gradient_norm(grad)

    records = [TraceRecord(0, value, gnorm)]
    iterates = [start] if options.keep_iterates else []
    converged = gnorm <= options.grad_tol
    halvings = options.max_halvings if options.line_search else 0
    current = start
    it = 0

    logger.info(f"하강 시작: d={config.d}, ranks={list(config.ranks)}, FFP={value:.12g}, |grad|={gnorm:.3e}")

    while not converged and it < options.max_iters:
        step = options.step_size
        accepted = None
        for attempt in range(halvings + 1):
            try:
                candidate = retract([a - step * g for a, g in zip(blocks, grad)], config=config)
            except StepTooLargeError as e:
                logger.debug(f"iter {it + 1}: step {step:.3e} 너무 큼 ({e})")
                step /= 2
                continue
            cand_s = frame_operator_matrix(candidate.blocks)
            cand_value = _potential(cand_s)
            if cand_value <= value + options.monotone_slack:
                accepted = (candidate, cand_s, cand_value)
                break
            logger.debug(f"iter {it + 1}: FFP 증가 {cand_value - value:.3e}, step 절반으로 ({step:.3e})")
            step /= 2

        if accepted is None:
            trace = DescentTrace(records, current, False, it, iterates)
            logger.error(f"하강 발산: iter {it + 1} 에서 {halvings} 번 절반 후에도 FFP 증가")
            raise DivergenceError(f"FFP increased at iteration {it + 1} after {halvings} halvings", trace)

        current, s, value = accepted
        blocks = current.blocks
        it += 1
        grad = _riemannian_blocks(blocks, s)
        gnorm = gradient_norm(grad)
        converged = gnorm <= options.grad_tol

        if it % options.record_every == 0 or converged or it == options.max_iters:
            records.append(TraceRecord(it, value, gnorm))
            if options.keep_iterates:
                iterates.append(current)

    if converged:
        logger.info(f"하강 수렴: iter={it}, FFP={value:.12g}, |grad|={gnorm:.3e}")
    else:
        logger.warning(f"최대 반복 도달: iter={it}, FFP={value:.12g}, |grad|={gnorm:.3e}")

    if not math.isfinite(value):
        raise DivergenceError("FFP became non-finite", DescentTrace(records, current, False, it, iterates))
    return DescentTrace(records, current, converged, it, iterates)
