import numpy as np
import pytest
from numpy.testing import assert_allclose
from pydantic import ValidationError

from fusionframe.admissibility import (
    MajorizationQuery, TFFVerdict, dimension_count_obstruction, equal_rank_tff_exists, majorizes,
    query_majorizes, realize_classical_spectrum, tff_necessary_check
)
from fusionframe.core import FrameConfig, ScalarField, StructuralError

def test_majorization_examples():
    assert majorizes((5, 5), (3, 3, 3, 1))
    assert not majorizes((1, 1), (3,))
    assert not majorizes((6, 2), (7, 1))

@pytest.mark.parametrize("N,d", [(4, 2), (5, 3), (7, 4)])
def test_flat_spectrum_majorizes_unit_norms(N, d):
    assert majorizes([N / d] * d, [1.0] * N)

def test_majorization_sorts_inputs():
    assert majorizes((5, 5), (1, 3, 3, 3))
    assert majorizes((1, 3), (2, 2))

def test_majorization_is_reflexive(rng):
    x = rng.random(6) + 0.1
    assert majorizes(x, x)

def test_majorization_needs_values():
    with pytest.raises(StructuralError):
        majorizes((), (1.0,))

def test_majorization_query_model():
    query = MajorizationQuery(lambda_=[1, 3], r=[2, 2])
    assert query.lambda_ == (3.0, 1.0)
    assert query.d == 2
    assert query_majorizes(query)
    with pytest.raises(ValidationError):
        MajorizationQuery(lambda_=[1, -1], r=[0.0])

def test_tff_check_two_lines_and_a_plane():
    check = tff_necessary_check(FrameConfig(d=3, ranks=(1, 1, 2)))
    assert check.trace_value == pytest.approx(4 / 3)
    assert check.verdict is TFFVerdict.IMPOSSIBLE
    assert check.obstruction.subset == (0, 1)

def test_tff_check_examples():
    check = tff_necessary_check(FrameConfig(d=2, ranks=(1, 1, 1)))
    assert check.trace_value == pytest.approx(1.5)
    assert check.verdict is TFFVerdict.EXISTS
    check = tff_necessary_check(FrameConfig(d=4, ranks=(2, 2)))
    assert check.trace_value == pytest.approx(1.0)
    assert check.verdict is TFFVerdict.EXISTS
    assert tff_necessary_check(FrameConfig(d=3, ranks=(1, 1))).verdict is TFFVerdict.IMPOSSIBLE

def test_unequal_ranks_stay_undecided():
    check = tff_necessary_check(FrameConfig(d=4, ranks=(1, 1, 1, 2, 2)))
    assert check.verdict is TFFVerdict.UNDECIDED
    assert "Littlewood-Richardson" in check.note

def test_dimension_count_obstruction():
    obstruction = dimension_count_obstruction(FrameConfig(d=3, ranks=(1, 1, 2)))
    assert obstruction.q == 2
    assert obstruction.lower_bound == pytest.approx(1.5)
    assert dimension_count_obstruction(FrameConfig(d=2, ranks=(1, 1, 1))) is None

def test_equal_rank_existence():
    assert equal_rank_tff_exists(3, 1, 2)
    assert equal_rank_tff_exists(3, 2, 3)
    assert equal_rank_tff_exists(2, 3, 3)
    assert not equal_rank_tff_exists(2, 1, 3)
    with pytest.raises(ValueError):
        equal_rank_tff_exists(2, 4, 3)

def test_realize_flat_spectrum():
    result = realize_classical_spectrum((5, 5), (3, 3, 3, 1), ScalarField.REAL, seed=0)
    assert result.residual <= 1e-6
    assert_allclose(np.linalg.norm(result.vectors, axis=1) ** 2, [3, 3, 3, 1])
    assert_allclose(result.frame_operator, 5 * np.eye(2), atol=1e-5)

def test_realize_rejects_non_majorized():
    with pytest.raises(StructuralError):
        realize_classical_spectrum((1, 1), (3,))

def test_majorization_is_antisymmetric(rng):
    assert majorizes((3, 1), (2, 2))
    assert not majorizes((2, 2), (3, 1))
    for _ in range(20):
        x = rng.random(4) + 0.1
        y = rng.permutation(x)
        assert majorizes(x, y) and majorizes(y, x)
        z = rng.random(4) + 0.1
        z *= x.sum() / z.sum()
        if majorizes(x, z) and majorizes(z, x):
            assert_allclose(np.sort(x), np.sort(z), atol=1e-8)

@pytest.mark.slow
def test_realize_random_majorizing_instances():
    rng = np.random.default_rng(7)
    for i in range(100):
        d = 2 + i % 2
        field = ScalarField.REAL if i % 3 == 0 else ScalarField.COMPLEX
        # 임의의 frame 에서 얻은 (lambda, r) 는 항상 majorization 을 만족
        lam = np.eye(d)[0]
        while lam[-1] < 0.1 * lam[0]:
            f = rng.standard_normal((d + 2, d))
            r = np.sum(f ** 2, axis=1)
            lam = np.linalg.eigvalsh(f.T @ f)[::-1]
        assert majorizes(lam, r)
        result = realize_classical_spectrum(lam, r, field, seed=i, max_restarts=5)
        assert result.residual <= 1e-6
        assert_allclose(np.linalg.norm(result.vectors, axis=1) ** 2, r, rtol=1e-9)
