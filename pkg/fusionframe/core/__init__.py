from .errors import (
    FusionFrameError, StructuralError, FrameValidationError, DegenerateDrawError,
    StepTooLargeError, DivergenceError, ClusteringAmbiguityError
)
from .frames import ScalarField, FrameConfig, SpectralData, HermitianOperator, OperatorFrame
from .linalg import find_unitary_equivalence, random_unitary, orthonormalize_rows, polar_rows
from .operations import (
    frame_operator, frame_operator_matrix, projectors, ffp, welch_bound, is_tight,
    is_fusion_frame, spectrum, block_spectra, check_spectral_membership
)
from .generate import (
    random_fusion_frame, mercedes_benz_frame, orthonormal_sum_frame, rotate_frame, random_rotation
)

__all__ = [
    'FusionFrameError', 'StructuralError', 'FrameValidationError', 'DegenerateDrawError',
    'StepTooLargeError', 'DivergenceError', 'ClusteringAmbiguityError',
    'ScalarField', 'FrameConfig', 'SpectralData', 'HermitianOperator', 'OperatorFrame',
    'find_unitary_equivalence', 'random_unitary', 'orthonormalize_rows', 'polar_rows',
    'frame_operator', 'frame_operator_matrix', 'projectors', 'ffp', 'welch_bound', 'is_tight',
    'is_fusion_frame', 'spectrum', 'block_spectra', 'check_spectral_membership',
    'random_fusion_frame', 'mercedes_benz_frame', 'orthonormal_sum_frame', 'rotate_frame', 'random_rotation'
]
