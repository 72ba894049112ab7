import numpy as np
import pytest
from numpy.testing import assert_allclose
from dataset.dataset import Dataset, standardize
from dataset.raw_dataset import RawDataset
from errors import InternalError
from selection.path_state import PathState

def gaussian_data(n = 30, p = 6, seed = 0) -> Dataset:
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, p))
    y = X @ rng.uniform(-2, 2, size = p) + rng.standard_normal(n)
    return standardize(RawDataset(y, X))

def orthogonal_columns(n: int, p: int, seed = 0) -> np.ndarray:
    """Returns n x p centered columns, mutually orthogonal with unit sd."""
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, p))
    Q, _ = np.linalg.qr(Z - Z.mean(axis = 0))
    return Q * np.sqrt(n - 1)

def batch_fit(data: Dataset, columns: list[int]) -> np.ndarray:
    design = data.X[:, columns]
    coef = np.linalg.solve(design.T @ design, design.T @ data.y)
    return design @ coef

def test_empty_state():
    data = gaussian_data()
    state = PathState(data)

    assert state.step == 0
    assert_allclose(state.residual, data.y)
    assert state.sigma2 == [pytest.approx(np.mean(data.y ** 2))]
    assert state.active.all()

def test_advance_matches_batch_least_squares():
    data = gaussian_data()
    state = PathState(data)

    for j in (2, 0, 5, 3):
        state.advance(j)

        assert np.abs(state.fitted - batch_fit(data, state.selected)).max() < 1e-8
        assert np.abs(state.residual + state.fitted - data.y).max() < 1e-10

def test_residualized_columns_stay_orthogonal_to_directions():
    data = gaussian_data(n = 40, p = 8, seed = 3)
    state = PathState(data)
    previous = state.sq_norms.copy()
    directions = []

    for j in (1, 6, 4):
        directions.append(state.xperp[:, j].copy())
        state.advance(j)

        for direction in directions:
            assert np.abs(direction @ state.xperp / data.n).max() < 1e-8
        assert np.abs(state.sq_norms - np.mean(state.xperp ** 2, axis = 0)).max() < 1e-10
        assert (state.sq_norms <= previous + 1e-15).all()
        previous = state.sq_norms.copy()

def test_sigma2_drop_is_pythagoras():
    data = gaussian_data(seed = 5)
    state = PathState(data)

    for j in (4, 1, 2):
        direction = state.xperp[:, j].copy()
        state.advance(j)
        drop = state.sigma2[-2] - state.sigma2[-1]

        assert abs(drop - state.betas[-1] ** 2 * (direction @ direction) / data.n) < 1e-8
        assert abs(state.unique_values[-1] ** 2 - drop) < 1e-8

def test_orthogonal_column_is_untouched():
    X = orthogonal_columns(20, 2)
    data = standardize(RawDataset(X[:, 0] + 0.5 * X[:, 1], X))
    before = data.X[:, 1].copy()

    state = PathState(data).advance(0)

    assert np.abs(state.xperp[:, 1] - before).max() < 1e-12

def test_duplicate_column_is_deactivated():
    rng = np.random.default_rng(2)
    X = rng.standard_normal((25, 3))
    X[:, 2] = X[:, 0]
    data = standardize(RawDataset(X[:, 0] + X[:, 1], X))

    state = PathState(data).advance(0)

    assert state.sq_norms[2] < 1e-12
    assert not state.active[2]
    assert state.deactivated == [2]
    assert state.active[1]

def test_constant_column_starts_inactive():
    rng = np.random.default_rng(4)
    X = rng.standard_normal((10, 3))
    X[:, 1] = 7.0
    data = standardize(RawDataset(rng.standard_normal(10), X))
    state = PathState(data)

    assert data.degenerate[1]
    assert not state.active[1]
    assert state.deactivated == []

def test_advance_rejects_inactive_columns():
    state = PathState(gaussian_data()).advance(3)

    with pytest.raises(InternalError):
        state.advance(3)

def test_small_unit_column_stays_active_when_centered_only():
    rng = np.random.default_rng(6)
    X = rng.standard_normal((30, 4))
    X[:, 2] *= 1e-13
    data = standardize(RawDataset(X[:, 2] * 1e13 + X[:, 0], X), scale_columns = False)

    state = PathState(data)

    assert state.active.all()
    state.advance(2)
    assert state.selected == [2]
    assert state.deactivated == []
