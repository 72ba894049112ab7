from __future__ import annotations
from typing import Sequence
import numpy as np
from errors import PathTooShortError
from selection.method import StopReason
from selection.selection_path import SelectionPath
from stopping.stop_config import StopConfig
from stopping.stop_decision import StopDecision, StopRule

#paths ending this way have a known next contribution of exactly 0
TERMINAL_REASONS = (StopReason.PERFECT_FIT, StopReason.EXHAUSTED)

def ratio_deltas(values: Sequence[float], adj: float, terminal: bool = False) -> np.ndarray:
    """Computes (values[m] + adj) / (values[m - 1] + adj) for consecutive steps.

    Args:
        values (Sequence[float]): The winning contribution of each step.
        adj (float): The adjustment added to both parts (may be 0).
        terminal (bool, optional): True when the path ended with no 
        contribution left; a trailing 0 is appended. Defaults to False.

    Raises:
        PathTooShortError: No ratio can be formed.

    Returns:
        The ratios; entry m - 1 holds the ratio at model size m.
    """
    values = np.asarray(values, dtype = float)
    if terminal:
        values = np.append(values, 0.0)
    if values.shape[0] < 2:
        raise PathTooShortError('path too short for ratio rule')

    numerators = values[1:] + adj
    denominators = values[:-1] + adj

    with np.errstate(divide = 'ignore', invalid = 'ignore'):
        deltas = np.where(denominators > 0, numerators / np.where(denominators > 0, denominators, 1.0), np.inf)

    return deltas

def delta_sequence(path: SelectionPath, cfg: StopConfig | None = None) -> np.ndarray:
    """Computes the ratio sequence of a selection path.

    The ratios use the unadjusted unique contributions recorded 
    along the path (the rho1 = 0 form), so ratio m equals 
    ((sigma2[m] - sigma2[m+1]) ** 0.5 + adj) / ((sigma2[m-1] - sigma2[m]) ** 0.5 + adj).

    Args:
        path (SelectionPath): The path.
        cfg (StopConfig, optional): The adjustment. Defaults to 
        StopConfig().

    Returns:
        The ratio sequence.
    """
    cfg = cfg or StopConfig()
    return ratio_deltas(path.unique_values, cfg.adjustment(path.n), path.stop_reason in TERMINAL_REASONS)

def select_size_ratio(path: SelectionPath, cfg: StopConfig | None = None) -> StopDecision:
    """Chooses the model size at the sharpest drop in unique contributions.

    Args:
        path (SelectionPath): The path.
        cfg (StopConfig, optional): The adjustment. Defaults to 
        StopConfig().

    Returns:
        The StopDecision with k_hat = argmin of the ratio sequence 
        (lowest m on ties).
    """
    deltas = delta_sequence(path, cfg)
    k_hat = int(np.argmin(deltas)) + 1

    return StopDecision(k_hat = k_hat, rule = StopRule.RATIO, deltas = tuple(float(delta) for delta in deltas))
