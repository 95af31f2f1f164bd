from .gradients import efp, extrinsic_gradient, riemannian_gradient, gradient_norm
from .retraction import retract
from .descent import DescentSettings, DescentTrace, TraceRecord, descend
from .critical import CriticalPointReport, classify_critical_point

__all__ = [
    'efp', 'extrinsic_gradient', 'riemannian_gradient', 'gradient_norm',
    'retract',
    'DescentSettings', 'DescentTrace', 'TraceRecord', 'descend',
    'CriticalPointReport', 'classify_critical_point'
]
