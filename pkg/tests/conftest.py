import numpy as np
import pytest

from fusionframe.core import FrameConfig, OperatorFrame, ScalarField, mercedes_benz_frame, orthonormal_sum_frame

# 여러 field, 차원, rank 조합
CONFIGS = [
    FrameConfig(field=ScalarField.REAL, d=2, ranks=(1, 1, 1)),
    FrameConfig(field=ScalarField.COMPLEX, d=2, ranks=(1, 1, 1, 1)),
    FrameConfig(field=ScalarField.REAL, d=3, ranks=(1, 1, 2)),
    FrameConfig(field=ScalarField.COMPLEX, d=3, ranks=(2, 2, 1)),
    FrameConfig(field=ScalarField.REAL, d=4, ranks=(2, 2, 2)),
    FrameConfig(field=ScalarField.COMPLEX, d=4, ranks=(1, 3, 2, 1)),
]

def coordinate_frame(d, counts):
    """counts[j] 개의 e_j 로 이루어진 rank-1 frame"""
    eye = np.eye(d)
    return OperatorFrame.from_blocks([eye[[j]] for j, c in enumerate(counts) for _ in range(c)])

@pytest.fixture
def rng():
    return np.random.default_rng(20240611)

@pytest.fixture
def e1e1e2():
    return coordinate_frame(2, (2, 1))

@pytest.fixture
def mercedes_benz():
    return mercedes_benz_frame()

@pytest.fixture
def constructed_tffs():
    return [
        mercedes_benz_frame(),
        orthonormal_sum_frame(2, (1, 1, 1, 1)),
        orthonormal_sum_frame(4, (2, 2)),
        orthonormal_sum_frame(3, (2, 2, 2)),
        orthonormal_sum_frame(4, (2, 2, 2, 2), ScalarField.COMPLEX),
    ]

@pytest.fixture
def two_lines_and_a_plane():
    """(1,1,2) 최소점: Mercedes-Benz 평면 위 두 직선, 세 번째 방향과 e3 가 이루는 평면"""
    angles = np.deg2rad([90.0, 210.0, 330.0])
    u = [np.array([np.cos(t), np.sin(t), 0.0]) for t in angles]
    return OperatorFrame.from_blocks([u[0][None, :], u[1][None, :], np.vstack([u[2], [0.0, 0.0, 1.0]])])
