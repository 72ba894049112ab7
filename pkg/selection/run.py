from __future__ import annotations
import logging
from time import perf_counter
from dataset.dataset import Dataset
from selection.forward_regression import FRSelector
from selection.gsfr import GSFRSelector
from selection.method import Method, StopReason
from selection.oga import OGASelector
from selection.path_state import PathState
from selection.selection_path import SelectionPath
from selection.selector import Selector
from selection.selector_config import SelectorConfig

logger = logging.getLogger(__name__)

#a path stops once the residual sum of squares is below this times n
PERFECT_FIT = 1e-14

SELECTORS: dict[Method, type] = {
    Method.GSFR: GSFRSelector,
    Method.OGA: OGASelector,
    Method.FR: FRSelector
}

def make_selector(method: Method, data: Dataset, cfg: SelectorConfig) -> Selector:
    return SELECTORS[method](data, cfg)

def run_path(data: Dataset, method: Method = Method.GSFR, cfg: SelectorConfig | None = None) -> SelectionPath:
    """Runs forward selection for up to K_n steps.

    Starting from the empty model, each step scores every candidate,
    adds the one with the largest score magnitude (lowest index on 
    ties) and advances the Gram-Schmidt state. The path ends after 
    K_n steps, when the fit is perfect, when every remaining score is
    0, or (FR only) when the wall-clock cap is reached.

    Args:
        data (Dataset): The standardized data.
        method (Method, optional): The engine. Defaults to 
        Method.GSFR.
        cfg (SelectorConfig, optional): The tuning. Defaults to 
        SelectorConfig().

    Returns:
        The SelectionPath of the run.
    """
    cfg = cfg or SelectorConfig()
    kn, warning = cfg.budget(data.n, data.p)

    selector = make_selector(method, data, cfg)
    state = PathState(data)
    crit_values = []
    stop_reason = StopReason.BUDGET
    start = perf_counter()

    for m in range(1, kn + 1):
        if state.rss() < PERFECT_FIT * data.n:
            stop_reason = StopReason.PERFECT_FIT
            break

        choice = selector.choose(state)
        if choice is None:
            stop_reason = StopReason.EXHAUSTED
            break

        index, magnitude = choice
        state.advance(index)
        crit_values.append(magnitude)
        logger.debug('%s step %d: selected column %d (|mu| = %.6g)', method.name, m, index + 1, magnitude)

        if method is Method.FR and cfg.time_limit_s is not None and m < kn and perf_counter() - start > cfg.time_limit_s:
            stop_reason = StopReason.TIME_LIMIT
            logger.warning('%s path stopped after %d steps: %.1f s cap reached', method.name, m, cfg.time_limit_s)
            break

    #a fit that became exact on the last allowed step is still terminal
    if stop_reason is StopReason.BUDGET and state.rss() < PERFECT_FIT * data.n:
        stop_reason = StopReason.PERFECT_FIT

    return SelectionPath(
        method = method,
        selected = state.selected,
        crit_values = crit_values,
        unique_values = state.unique_values,
        sigma2 = state.sigma2,
        step_betas = state.betas,
        rho1 = cfg.rho1,
        kn = kn,
        n = data.n,
        p = data.p,
        stop_reason = stop_reason,
        tie_rule = cfg.tie_rule,
        warnings = () if warning is None else (warning,),
        deactivated = state.deactivated
    )
