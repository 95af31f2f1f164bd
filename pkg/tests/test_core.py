import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from fusionframe.core import (
    FrameConfig, HermitianOperator, OperatorFrame, ScalarField, SpectralData, StructuralError,
    check_spectral_membership, ffp, find_unitary_equivalence, frame_operator, is_fusion_frame, is_tight,
    orthonormal_sum_frame, projectors, random_fusion_frame, random_rotation, random_unitary, spectrum,
    welch_bound
)
from tests.conftest import CONFIGS

@pytest.mark.parametrize("config", CONFIGS)
def test_random_frames_respect_welch_bound(config):
    for seed in range(34):
        frame = random_fusion_frame(config, seed)
        assert is_fusion_frame(frame)
        assert ffp(frame) >= welch_bound(config) - 1e-9

def test_constructed_tffs_attain_welch_bound(constructed_tffs, rng):
    for frame in constructed_tffs:
        for _ in range(4):
            rotated = random_rotation(frame, rng)
            assert is_tight(rotated)
            assert abs(ffp(rotated) - welch_bound(rotated.config)) <= 1e-9

def test_e1e1e2_values(e1e1e2):
    assert_allclose(frame_operator(e1e1e2).matrix, np.diag([2.0, 1.0]))
    assert ffp(e1e1e2) == pytest.approx(5.0)
    assert welch_bound(e1e1e2.config) == pytest.approx(4.5)
    assert not is_tight(e1e1e2)
    assert_allclose(spectrum(frame_operator(e1e1e2)), [2.0, 1.0])

def test_mercedes_benz_is_tight(mercedes_benz):
    assert_allclose(frame_operator(mercedes_benz).matrix, 1.5 * np.eye(2), atol=1e-12)
    assert ffp(mercedes_benz) == pytest.approx(4.5)

def test_projectors_sum_to_frame_operator(rng):
    frame = random_fusion_frame(CONFIGS[3], 5)
    total = sum(p.matrix for p in projectors(frame))
    assert_allclose(total, frame_operator(frame).matrix, atol=1e-12)
    for p in projectors(frame):
        assert_allclose(p.matrix @ p.matrix, p.matrix, atol=1e-12)

def test_ffp_is_invariant_under_rotations(rng):
    for config in CONFIGS:
        frame = random_fusion_frame(config, 3)
        rotated = random_rotation(frame, rng)
        assert ffp(rotated) == pytest.approx(ffp(frame), rel=1e-10)

def test_random_frame_is_deterministic():
    a = random_fusion_frame(CONFIGS[2], 7)
    b = random_fusion_frame(CONFIGS[2], 7)
    assert all(np.array_equal(x, y) for x, y in zip(a.blocks, b.blocks))

def test_too_few_dimensions_is_not_a_fusion_frame():
    frame = random_fusion_frame(FrameConfig(d=3, ranks=(1, 1)), 0)
    assert not is_fusion_frame(frame)

def test_rank_larger_than_dimension_is_rejected():
    with pytest.raises(ValidationError):
        FrameConfig(d=3, ranks=(5,))

def test_block_shape_and_rank_are_checked():
    config = FrameConfig(d=2, ranks=(1, 2))
    with pytest.raises(StructuralError):
        OperatorFrame(config, (np.array([[1.0, 0.0]]), np.array([[1.0, 0.0]])))
    with pytest.raises(StructuralError):
        OperatorFrame(config, (np.array([[1.0, 0.0]]), np.array([[1.0, 0.0], [2.0, 0.0]])))

def test_complex_entries_need_complex_field():
    config = FrameConfig(d=2, ranks=(1,))
    with pytest.raises(StructuralError):
        OperatorFrame(config, (np.array([[1.0, 1j]]),))

def test_hermitian_operator_rejects_asymmetric():
    with pytest.raises(StructuralError):
        HermitianOperator(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(StructuralError):
        HermitianOperator(np.ones((2, 3)))

def test_real_frame_on_complex_path(e1e1e2):
    lifted = e1e1e2.as_complex()
    assert lifted.field is ScalarField.COMPLEX
    assert ffp(lifted) == pytest.approx(ffp(e1e1e2))

def test_spectral_membership(e1e1e2):
    assert check_spectral_membership(e1e1e2, SpectralData(lambda_=(2.0, 1.0)))
    assert not check_spectral_membership(e1e1e2, SpectralData(lambda_=(1.5, 1.5)))
    assert check_spectral_membership(e1e1e2, SpectralData(r=((1.0,), (1.0,), (1.0,))))
    with pytest.raises(StructuralError):
        check_spectral_membership(e1e1e2, SpectralData(lambda_=(2.0, 1.0, 0.5)))

def test_spectral_data_must_be_decreasing():
    with pytest.raises(ValidationError):
        SpectralData(lambda_=(1.0, 2.0))
    with pytest.raises(ValidationError):
        SpectralData(r=((1.0, -1.0),))

@pytest.mark.parametrize("field", [ScalarField.REAL, ScalarField.COMPLEX])
def test_unitary_equivalence_round_trip(field, rng):
    config = FrameConfig(field=field, d=4, ranks=(2,))
    for seed in range(50):
        a = random_fusion_frame(config, seed).blocks[0]
        u0 = random_unitary(2, field, rng)
        u = find_unitary_equivalence(a, u0 @ a)
        assert u is not None
        assert np.linalg.norm(u @ a - u0 @ a) <= 1e-10

def test_unitary_equivalence_rank_deficient(rng):
    a = rng.standard_normal((3, 2)) @ rng.standard_normal((2, 3))
    u0 = random_unitary(3, ScalarField.REAL, rng)
    u = find_unitary_equivalence(a, u0 @ a)
    assert u is not None
    assert_allclose(u @ a, u0 @ a, atol=1e-8)
    assert_allclose(u.T @ u, np.eye(3), atol=1e-8)

def test_unitary_equivalence_detects_different_gram():
    a = np.array([[1.0, 0.0]])
    b = np.array([[0.0, 1.0]])
    assert find_unitary_equivalence(a, b) is None

def test_orthonormal_sum_frame_layout():
    frame = orthonormal_sum_frame(3, (2, 2, 2))
    assert_allclose(frame_operator(frame).matrix, 2 * np.eye(3))

@pytest.mark.parametrize("config", CONFIGS)
def test_distinct_seeds_give_distinct_frames(config):
    frames = [random_fusion_frame(config, seed) for seed in range(5)]
    for i in range(len(frames)):
        for j in range(i + 1, len(frames)):
            assert not all(np.allclose(a, b) for a, b in zip(frames[i].blocks, frames[j].blocks))

@pytest.mark.parametrize("config", CONFIGS)
def test_trace_and_projector_spectra(config):
    frame = random_fusion_frame(config, 11)
    assert np.trace(frame_operator(frame).matrix).real == pytest.approx(frame.n)
    for p, k in zip(projectors(frame), config.ranks):
        expected = [1.0] * k + [0.0] * (config.d - k)
        assert_allclose(spectrum(p), expected, atol=1e-10)

def test_tight_frames_have_flat_spectrum(constructed_tffs):
    for frame in constructed_tffs:
        flat = SpectralData(lambda_=[frame.n / frame.d] * frame.d)
        assert check_spectral_membership(frame, flat)
