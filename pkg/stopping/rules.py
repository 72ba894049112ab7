from __future__ import annotations
from dataset.dataset import Dataset
from selection.selection_path import SelectionPath
from stopping.information_criteria import select_size_bic, select_size_hdbic
from stopping.ratio import select_size_ratio
from stopping.stop_config import StopConfig
from stopping.stop_decision import StopDecision, StopRule

def select_size(path: SelectionPath, data: Dataset | None, rule: StopRule, cfg: StopConfig | None = None) -> StopDecision:
    """Applies the given stop rule to a path.

    Args:
        path (SelectionPath): The path.
        data (Dataset | None): Supplies n and p for the criteria.
        rule (StopRule): The rule to apply.
        cfg (StopConfig, optional): The ratio rule's adjustment.

    Returns:
        The StopDecision.
    """
    match rule:
        case StopRule.RATIO:
            return select_size_ratio(path, cfg)
        case StopRule.HDBIC:
            return select_size_hdbic(path, data)
        case StopRule.BIC:
            return select_size_bic(path, data)
        case StopRule.NONE:
            return StopDecision(k_hat = path.K, rule = StopRule.NONE)
