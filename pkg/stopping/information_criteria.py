from __future__ import annotations
import math
import numpy as np
from dataset.dataset import Dataset
from errors import PathTooShortError
from selection.selection_path import SelectionPath
from stopping.stop_decision import StopDecision, StopRule

def _argmin_criterion(path: SelectionPath, penalty: float, rule: StopRule) -> StopDecision:
    """Minimizes n * ln(sigma2_m) + m * penalty over 1 <= m <= K.

    A model with zero residual variance wins at once.
    """
    if path.K < 1:
        raise PathTooShortError(f'{rule.name} needs a nonempty path')

    sigma2 = np.asarray(path.sigma2[1:], dtype = float)
    sizes = np.arange(1, path.K + 1)

    exact = np.flatnonzero(sigma2 <= 0)
    with np.errstate(divide = 'ignore'):
        criterion = path.n * np.log(sigma2) + sizes * penalty

    if exact.size:
        k_hat = int(exact[0]) + 1
    else:
        k_hat = int(np.argmin(criterion)) + 1

    return StopDecision(k_hat = k_hat, rule = rule, criterion = tuple(float(value) for value in criterion))

def _counts(path: SelectionPath, data: Dataset | None) -> tuple[int, int]:
    return (data.n, data.p) if data is not None else (path.n, path.p)

def select_size_hdbic(path: SelectionPath, data: Dataset | None = None) -> StopDecision:
    """Chooses the size minimizing HDBIC = n ln(sigma2_m) + m (ln n)(ln p).

    Args:
        path (SelectionPath): The path.
        data (Dataset, optional): Supplies n and p; the path's own 
        counts are used when omitted.

    Returns:
        The StopDecision.
    """
    n, p = _counts(path, data)
    return _argmin_criterion(path, math.log(n) * math.log(p), StopRule.HDBIC)

def select_size_bic(path: SelectionPath, data: Dataset | None = None) -> StopDecision:
    """Chooses the size minimizing n ln(sigma2_m) + m (ln n + 2 ln p)."""
    n, p = _counts(path, data)
    return _argmin_criterion(path, math.log(n) + 2 * math.log(p), StopRule.BIC)
