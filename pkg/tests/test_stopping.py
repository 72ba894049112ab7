import math
import numpy as np
import pytest
from numpy.testing import assert_allclose
from dataset.dataset import standardize
from dataset.raw_dataset import RawDataset
from errors import ConfigError, PathTooShortError
from selection.method import Method, StopReason
from selection.refit import refit_ols
from selection.run import run_path
from selection.selection_path import SelectionPath
from selection.selector_config import SelectorConfig
from stopping.information_criteria import select_size_bic, select_size_hdbic
from stopping.ratio import delta_sequence, ratio_deltas, select_size_ratio
from stopping.rules import select_size
from stopping.stop_config import StopConfig
from stopping.stop_decision import StopRule

def fake_path(unique_values, sigma2 = None, n = 100, p = 50, stop_reason = StopReason.BUDGET) -> SelectionPath:
    K = len(unique_values)
    if sigma2 is None:
        sigma2 = [1.0 / (m + 1) for m in range(K + 1)]
    return SelectionPath(
        method = Method.GSFR,
        selected = tuple(range(K)),
        crit_values = unique_values,
        unique_values = unique_values,
        sigma2 = sigma2,
        step_betas = [1.0] * K,
        rho1 = 0.0,
        kn = K,
        n = n,
        p = p,
        stop_reason = stop_reason
    )

def orthogonal_columns(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    Z = rng.standard_normal((n, p))
    Q, _ = np.linalg.qr(Z - Z.mean(axis = 0))
    return Q * np.sqrt(n - 1)

def test_constant_contributions():
    assert_allclose(ratio_deltas([2, 2, 2], 1e-6), [1.0, 1.0])

def test_sharp_drop():
    deltas = ratio_deltas([3, 3, 0.000001], 1e-6)

    assert_allclose(deltas, [1.0, 2e-6 / (3 + 1e-6)])
    assert int(np.argmin(deltas)) + 1 == 2

def test_ratio_rule_picks_the_unique_minimum():
    decision = select_size_ratio(fake_path([1000.0, 900.0, 0.9, 0.72]))

    assert_allclose(decision.deltas, [0.9, 0.001, 0.8], rtol = 1e-5)
    assert decision.k_hat == 2
    assert decision.model(fake_path([1000.0, 900.0, 0.9, 0.72])) == (0, 1)

def test_ratio_rule_ties_go_to_the_smallest_size():
    assert select_size_ratio(fake_path([4.0, 2.0, 1.0]), StopConfig(rho2_term = 1e-12)).k_hat == 1

def test_ratio_rule_needs_two_contributions():
    with pytest.raises(PathTooShortError):
        select_size_ratio(fake_path([1.0]))
    with pytest.raises(PathTooShortError):
        select_size_ratio(fake_path([], sigma2 = [1.0], stop_reason = StopReason.EXHAUSTED))

def test_terminal_path_can_keep_every_step():
    path = fake_path([2.0], stop_reason = StopReason.PERFECT_FIT)

    assert select_size_ratio(path).k_hat == 1

def test_budget_path_never_keeps_the_last_step():
    rng = np.random.default_rng(0)

    for _ in range(20):
        path = fake_path(list(rng.uniform(0.1, 5.0, size = 6)))
        assert select_size_ratio(path).k_hat <= path.K - 1

def test_noiseless_two_signals_on_orthogonal_design():
    rng = np.random.default_rng(1)
    X = orthogonal_columns(40, 12, rng)
    data = standardize(RawDataset(3 * X[:, 0] + X[:, 1], X))

    path = run_path(data, Method.GSFR, SelectorConfig(kn = 6))

    assert select_size_ratio(path).k_hat == 2
    assert set(select_size_ratio(path).model(path)) == {0, 1}

def test_noiseless_sparse_instances_recover_the_support_size():
    rng = np.random.default_rng(7)

    for instance in range(100):
        q = 2 + instance % 5
        X = orthogonal_columns(60, 20, rng)
        support = rng.choice(20, size = q, replace = False)
        beta = rng.uniform(1.0, 3.0, size = q) * rng.choice([-1.0, 1.0], size = q)
        data = standardize(RawDataset(X[:, support] @ beta, X))

        path = run_path(data)
        decision = select_size_ratio(path)

        assert path.kn > q
        assert decision.k_hat == q
        assert set(decision.model(path)) == set(support.tolist())

def test_ratios_equal_square_roots_of_sigma2_drops():
    rng = np.random.default_rng(3)

    for seed in range(10):
        X = rng.standard_normal((50, 30))
        data = standardize(RawDataset(X[:, :3] @ [2.0, -1.0, 1.5] + rng.standard_normal(50), X))
        path = run_path(data, Method.GSFR, SelectorConfig(rho1 = 0, kn = 8))

        drops = -np.diff(path.sigma2)
        expected = np.sqrt(drops[1:]) / np.sqrt(drops[:-1])

        assert_allclose(ratio_deltas(path.unique_values, 0.0), expected, rtol = 1e-6, atol = 1e-8)

def test_ratios_ignore_response_scale():
    rng = np.random.default_rng(4)
    X = rng.standard_normal((50, 30))
    y = X[:, :3] @ [2.0, -1.0, 1.5] + rng.standard_normal(50)

    plain = run_path(standardize(RawDataset(y, X)))
    scaled = run_path(standardize(RawDataset(7.5 * y, X)))

    assert_allclose(ratio_deltas(plain.unique_values, 0.0), ratio_deltas(scaled.unique_values, 0.0), rtol = 1e-8)
    for c in (0.1, 10.0):
        rescaled = run_path(standardize(RawDataset(c * y, X)))
        assert select_size_ratio(rescaled).k_hat == select_size_ratio(plain).k_hat

def test_adjustment():
    assert StopConfig().adjustment(200) == 1e-6
    assert StopConfig(rho2_term = 2.0, gamma = 0.5, eps0 = 0.25).adjustment(16) == pytest.approx(2.0 * 16 ** -1.0)

    with pytest.raises(ConfigError):
        StopConfig(gamma = 0.5)
    with pytest.raises(ConfigError):
        StopConfig(rho2_term = 0)

def test_delta_sequence_uses_the_config():
    path = fake_path([1.0, 0.5])

    assert_allclose(delta_sequence(path, StopConfig(rho2_term = 1.0)), [1.5 / 2.0])

def test_information_criteria_limits():
    halving = [2.0 ** -m for m in range(6)]

    assert select_size_hdbic(fake_path([1.0] * 5, halving, n = 10 ** 6, p = 2)).k_hat == 5
    assert select_size_hdbic(fake_path([1.0] * 5, halving, n = 10, p = math.ceil(math.exp(10)))).k_hat == 1
    assert select_size_bic(fake_path([1.0] * 5, halving, n = 10 ** 6, p = 2)).k_hat == 5
    assert select_size_bic(fake_path([1.0] * 5, halving, n = 10, p = math.ceil(math.exp(10)))).k_hat == 1

def test_zero_residual_wins_at_once():
    path = fake_path([1.0] * 4, [1.0, 0.5, 0.0, 0.0, 0.0])

    assert select_size_hdbic(path).k_hat == 2
    assert select_size_bic(path).k_hat == 2

def test_single_signal_noiseless_criteria():
    rng = np.random.default_rng(5)
    X = orthogonal_columns(30, 6, rng)
    data = standardize(RawDataset(2 * X[:, 2], X))
    path = run_path(data, Method.OGA)

    assert select_size_hdbic(path, data).k_hat == 1
    assert select_size_bic(path, data).k_hat == 1

def test_criteria_match_brute_force_over_prefixes():
    rng = np.random.default_rng(6)
    X = rng.standard_normal((100, 200))
    data = standardize(RawDataset(X[:, :4] @ [1.0, -1.0, 0.8, 0.6] + rng.standard_normal(100), X))
    n, p = data.n, data.p

    for method, select, penalty in ((Method.OGA, select_size_hdbic, math.log(n) * math.log(p)),
                                    (Method.FR, select_size_bic, math.log(n) + 2 * math.log(p))):
        path = run_path(data, method, SelectorConfig(kn = 10))
        values = [n * math.log(refit_ols(data, path.prefix(m)).rss / n) + m * penalty for m in range(1, path.K + 1)]

        decision = select(path, data)

        assert decision.k_hat == int(np.argmin(values)) + 1
        assert_allclose(decision.criterion, values, rtol = 1e-8, atol = 1e-6)

def test_select_size_dispatch():
    path = fake_path([3.0, 1.0, 0.01, 0.009])

    assert select_size(path, None, StopRule.RATIO).rule is StopRule.RATIO
    assert select_size(path, None, StopRule.HDBIC).rule is StopRule.HDBIC
    assert select_size(path, None, StopRule.NONE).k_hat == 4
    assert StopRule.parse('HdBic') is StopRule.HDBIC

    with pytest.raises(ConfigError):
        StopRule.parse('aic')
