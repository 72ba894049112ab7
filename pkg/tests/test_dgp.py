import math
import numpy as np
import pytest
from errors import ConfigError
from simbench.dgp import AR1_MA_COEFFICIENTS, DgpSpec, Example, generate

def test_example3_without_moving_average_is_uncorrelated():
    spec = DgpSpec(Example.AR1_MA, n = 2000, p = 10, theta = 0.0, seed = 1)
    raw, _ = generate(spec)

    for j in range(raw.p - 1):
        assert abs(np.corrcoef(raw.X[:, j], raw.X[:, j + 1])[0, 1]) < 4 / math.sqrt(raw.n)

def test_example3_neighbours_are_correlated():
    spec = DgpSpec(Example.AR1_MA, n = 10 ** 4, p = 6, theta = 0.9, seed = 2)
    raw, truth = generate(spec)

    expected = 0.9 / (1 + 0.9 ** 2)
    assert abs(np.corrcoef(raw.X[:, 0], raw.X[:, 1])[0, 1] - expected) < 0.03
    assert abs(np.corrcoef(raw.X[:, 0], raw.X[:, 2])[0, 1]) < 0.03
    assert truth.support.indices == (0, 1, 2, 3, 4)
    assert truth.beta_true[:5].tolist() == list(AR1_MA_COEFFICIENTS)

def test_example4_compound_symmetry():
    spec = DgpSpec(Example.COMPOUND_SYMMETRY, n = 10 ** 4, p = 5, theta = 3.0, seed = 3)
    raw, truth = generate(spec)

    correlations = np.corrcoef(raw.X, rowvar = False)[np.triu_indices(5, 1)]

    assert np.abs(correlations - 0.9).max() < 0.02
    assert (truth.beta_true[:5] == 3.0).all()

def test_example5_support_size_and_coefficients():
    spec = DgpSpec(Example.INDEPENDENT_DIVERGING, n = 200, p = 400, seed = 4)
    _, truth = generate(spec)

    assert spec.support_size() == 11
    assert len(truth.support) == 11
    assert (np.abs(truth.beta_true[:11]) > 5 * math.log(200) / math.sqrt(200)).all()
    assert (truth.beta_true[11:] == 0).all()

def test_example5_coefficients_change_between_replications():
    spec = DgpSpec(Example.INDEPENDENT_DIVERGING, n = 50, p = 100, seed = 5)

    _, first = generate(spec.replication(0))
    _, second = generate(spec.replication(1))

    assert not np.array_equal(first.beta_true, second.beta_true)

def test_generate_is_deterministic():
    spec = DgpSpec(Example.COMPOUND_SYMMETRY, n = 30, p = 50, theta = 1.0, seed = 7, stream = 3)

    raw, truth = generate(spec)
    again, truth_again = generate(spec)

    assert np.array_equal(raw.X, again.X)
    assert np.array_equal(raw.y, again.y)
    assert truth.y_test == truth_again.y_test

def test_streams_are_independent():
    spec = DgpSpec(Example.AR1_MA, n = 30, p = 50, theta = 0.3, seed = 7)

    first, _ = generate(spec.replication(0))
    second, _ = generate(spec.replication(1))

    assert not np.array_equal(first.X, second.X)

def test_held_out_row():
    spec = DgpSpec(Example.AR1_MA, n = 30, p = 20, theta = 0.3, seed = 8)
    raw, truth = generate(spec)

    assert raw.n == 30
    assert truth.x_test.shape == (20,)
    assert math.isfinite(truth.y_test)

def test_invalid_specs():
    with pytest.raises(ConfigError):
        DgpSpec(Example.AR1_MA, n = 1, p = 10)
    with pytest.raises(ConfigError):
        DgpSpec(Example.AR1_MA, n = 50, p = 4)
    with pytest.raises(ConfigError):
        DgpSpec(Example.AR1_MA, n = 50, p = 10, theta = math.inf)
    with pytest.raises(ConfigError):
        Example.parse('6')

    assert Example.parse('4') is Example.COMPOUND_SYMMETRY
