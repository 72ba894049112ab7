import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from dataset.dataset import standardize
from dataset.raw_dataset import RawDataset
from errors import ConfigError, InputError
from population.examples import example1_model, example2_model
from population.population_model import PopulationModel, pop_path, pop_scores
from selection.gsfr import gsfr_scores
from selection.method import Method
from selection.oga import oga_scores
from selection.path_state import PathState
from selection.selector_config import SelectorConfig

def test_example1_first_iteration():
    model = example1_model(b = 1, beta = 2)

    gsfr = pop_scores(model, [], Method.GSFR)
    oga = pop_scores(model, [], Method.OGA)

    assert gsfr[1] == pytest.approx(2 / math.sqrt(2) + 1, abs = 1e-10)
    assert gsfr[1] == pytest.approx(2.4142, abs = 1e-4)
    assert np.array_equal(gsfr, oga)
    assert int(np.argmax(np.abs(gsfr))) == 0

def test_example1_second_iteration():
    model = example1_model(b = 1, beta = 2)

    oga = pop_scores(model, [0], Method.OGA)
    gsfr = pop_scores(model, [0], Method.GSFR)

    assert oga[0] == 0.0
    assert gsfr[0] == 0.0
    assert oga[1] == pytest.approx(0.5, abs = 1e-10)
    assert oga[2] == pytest.approx(10 / math.sqrt(2 * 102), abs = 1e-10)
    assert gsfr[1] == pytest.approx(1 / math.sqrt(2), abs = 1e-10)
    assert gsfr[2] == pytest.approx(10 / math.sqrt(2 * 101), abs = 1e-10)
    assert_allclose([oga[1], oga[2], gsfr[1], gsfr[2]], [0.5, 0.70014, 0.70711, 0.70360], atol = 1e-5)

def test_example1_paths():
    model = example1_model(b = 1, beta = 2)

    assert pop_path(model, 2, Method.GSFR) == [0, 1]
    assert pop_path(model, 2, Method.OGA) == [0, 2]

def test_example1_closed_forms_hold_for_other_b():
    for b in (0.3, 2.0):
        model = example1_model(b = b, beta = 2)
        oga = pop_scores(model, [0], Method.OGA)
        gsfr = pop_scores(model, [0], Method.GSFR)

        assert oga[2] == pytest.approx(10 * b ** 2 / math.sqrt((1 + b ** 2) * (2 + 100 * b ** 2)), abs = 1e-10)
        assert gsfr[2] == pytest.approx(10 * b ** 2 / math.sqrt((1 + b ** 2) * (1 + 100 * b ** 2)), abs = 1e-10)

def test_example1_without_lean():
    model = example1_model(b = 0, beta = 2)

    path = pop_path(model, 3, Method.GSFR)

    assert path[0] == 0
    assert 1 not in path
    with pytest.raises(InputError):
        pop_scores(model, [0, 1], Method.GSFR)

def test_example2_paths():
    assert pop_path(example2_model(eta = 0.5), 2, Method.GSFR) == [0, 1]
    assert pop_path(example2_model(eta = 0.0), 3, Method.GSFR) == [0, 1]

def test_diagonal_design_follows_coefficient_size():
    model = PopulationModel(np.eye(4), [0.0, 5.0, 0.0, 1.0])

    assert pop_path(model, 4, Method.GSFR) == [1, 3]
    assert_allclose(pop_scores(model, [1], Method.GSFR), pop_scores(model, [1], Method.OGA))

def test_residual_variance_is_within_bounds():
    model = example1_model(b = 1, beta = 2)
    Gamma = model.Gamma

    for i, J in ((1, [0]), (2, [0]), (2, [0, 1]), (1, [2])):
        block = Gamma[np.ix_(J, J)]
        residual = Gamma[i, i] - Gamma[i, J] @ np.linalg.solve(block, Gamma[J, i])
        assert 0 < residual <= Gamma[i, i]

def test_invalid_models():
    with pytest.raises(ConfigError):
        PopulationModel(np.array([[1.0, 0.5], [0.0, 1.0]]), [1.0, 1.0])
    with pytest.raises(ConfigError):
        PopulationModel(np.array([[1.0, 2.0], [2.0, 1.0]]), [1.0, 1.0])
    with pytest.raises(ConfigError):
        example1_model(b = -1)
    with pytest.raises(ConfigError):
        example2_model(eta = -0.1)
    with pytest.raises(ConfigError):
        pop_path(example1_model(), 4, Method.GSFR)
    with pytest.raises(ConfigError):
        pop_scores(example1_model(), [], Method.FR)
    with pytest.raises(ConfigError):
        PopulationModel(np.eye(2), [1.0, 1.0]).sample(5, np.random.default_rng(0))

def test_sample_scores_converge_to_population_scores():
    model = example1_model(b = 1, beta = 2)
    y, X = model.sample(10 ** 6, np.random.default_rng(123))
    data = standardize(RawDataset(y, X))
    cfg = SelectorConfig(rho1 = 0)

    state = PathState(data)
    for J in ([], [0]):
        if J:
            state.advance(J[-1])
        assert_allclose(np.abs(gsfr_scores(state, data, cfg)), np.abs(pop_scores(model, J, Method.GSFR)), atol = 0.01)
        assert_allclose(np.abs(oga_scores(state, data)), np.abs(pop_scores(model, J, Method.OGA)), atol = 0.01)
