import numpy as np
import pytest
from numpy.testing import assert_allclose
from dataset.dataset import standardize
from dataset.raw_dataset import RawDataset
from errors import InputError, RankDeficientError
from selection.refit import OLSModel, predict, rank_deficient_columns, refit_ols

def test_null_model():
    rng = np.random.default_rng(0)
    raw = RawDataset(rng.normal(4.0, 1.0, 20), rng.standard_normal((20, 3)))

    model = refit_ols(standardize(raw), [])

    assert model.intercept == pytest.approx(raw.y.mean())
    assert model.rss == pytest.approx(np.sum((raw.y - raw.y.mean()) ** 2))
    assert predict(model, np.array([9.0, -3.0, 0.5])) == pytest.approx(raw.y.mean())

def test_exact_linear_response():
    rng = np.random.default_rng(1)
    X = rng.standard_normal((30, 5))
    raw = RawDataset(1.5 + 2 * X[:, 0] - X[:, 3], X)

    model = refit_ols(standardize(raw), [0, 3])

    assert model.rss < 1e-16 * raw.n
    assert_allclose(model.coef, [2.0, -1.0], atol = 1e-10)
    assert model.intercept == pytest.approx(1.5)

def test_matches_normal_equations_in_original_units():
    rng = np.random.default_rng(2)
    X = rng.normal(10.0, 3.0, size = (25, 6))
    raw = RawDataset(X @ rng.standard_normal(6) + rng.standard_normal(25), X)
    J = [1, 2, 5]

    model = refit_ols(standardize(raw), J)

    design = np.column_stack([np.ones(25), X[:, J]])
    solution = np.linalg.inv(design.T @ design) @ design.T @ raw.y

    assert_allclose(model.coef, solution[1:], atol = 1e-8)
    assert model.intercept == pytest.approx(solution[0], abs = 1e-8)
    assert_allclose(model.coefficients()[[0, 3, 4]], 0.0)

def test_saturated_model_interpolates():
    rng = np.random.default_rng(3)
    raw = RawDataset(rng.standard_normal(5), rng.standard_normal((5, 4)))

    model = refit_ols(standardize(raw), [0, 1, 2, 3])

    for t in range(5):
        assert abs(predict(model, raw.X[t]) - raw.y[t]) < 1e-8

def test_predict_by_hand():
    model = OLSModel(support = (0,), coef = np.array([2.0]), intercept = 1.0, rss = 0.0, p = 1)

    assert predict(model, np.array([3.0])) == 7.0

def test_predict_rejects_bad_rows():
    model = OLSModel(support = (0,), coef = np.array([2.0]), intercept = 1.0, rss = 0.0, p = 2)

    with pytest.raises(InputError):
        predict(model, np.array([3.0]))
    with pytest.raises(InputError):
        predict(model, np.array([3.0, np.nan]))

def test_rank_deficient_design_names_columns():
    rng = np.random.default_rng(4)
    X = rng.standard_normal((20, 4))
    X[:, 3] = X[:, 0] - X[:, 1]
    data = standardize(RawDataset(rng.standard_normal(20), X))

    with pytest.raises(RankDeficientError, match = 'offending columns') as error:
        refit_ols(data, [0, 1, 3])
    assert len(error.value.columns) == 1
    assert error.value.columns[0] in (0, 1, 3)

    model = refit_ols(data, [0, 1, 3], allow_rank_deficient = True)
    assert np.isfinite(model.coef).all()

def test_too_many_columns():
    rng = np.random.default_rng(5)
    data = standardize(RawDataset(rng.standard_normal(4), rng.standard_normal((4, 6))))

    with pytest.raises(InputError):
        refit_ols(data, [0, 1, 2, 3])

def test_rank_deficient_columns_full_rank():
    assert rank_deficient_columns(np.eye(4)[:, :3]) == []
