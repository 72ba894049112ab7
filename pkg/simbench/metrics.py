from __future__ import annotations
from dataclasses import asdict, dataclass
from dataset.dataset import Dataset
from selection.refit import predict, refit_ols
from selection.selection_path import SelectionPath
from simbench.dgp import SimTruth
from stopping.stop_decision import StopDecision

@dataclass(frozen = True)
class ReplicationMetrics:
    """ReplicationMetrics holds the scores of one method on one replication.

    Attributes:
        covered (bool): The chosen model contains every relevant column.
        fn (float): Share of relevant columns missed.
        fp (float): Share of irrelevant columns chosen.
        best_size (int): First path position holding every relevant 
        column, K_n when the path never does.
        selected_size (int): The chosen model size.
        screened (bool): The whole path contains every relevant column.
        rss (float): Residual sum of squares of the refit chosen model.
        mspe (float): Squared error predicting the held-out response.
        runtime_s (float): Wall-clock seconds of selection plus stopping.
    """

    covered: bool
    fn: float
    fp: float
    best_size: int
    selected_size: int
    screened: bool
    rss: float
    mspe: float
    runtime_s: float

    @property
    def agrees(self) -> bool:
        return self.covered and self.selected_size == self.best_size

    def to_dict(self) -> dict:
        return asdict(self)

def best_size(path: SelectionPath, support: set[int]) -> int:
    """Returns the first m with the support inside J_m (K_n if none)."""
    remaining = set(support)
    if not remaining:
        return 0

    for m, index in enumerate(path.selected, 1):
        remaining.discard(index)
        if not remaining:
            return m

    return path.kn

def evaluate(path: SelectionPath, decision: StopDecision, truth: SimTruth, data: Dataset, runtime_s: float = 0.0) -> ReplicationMetrics:
    """Scores a stopped selection path against the truth of its replication.

    Args:
        path (SelectionPath): The selection path.
        decision (StopDecision): The chosen model size.
        truth (SimTruth): The relevant columns and the held-out row.
        data (Dataset): The standardized training data.
        runtime_s (float, optional): Seconds spent selecting. 
        Defaults to 0.

    Returns:
        The ReplicationMetrics.
    """
    chosen = set(decision.model(path))
    support = set(truth.support)
    irrelevant = data.p - len(support)

    model = refit_ols(data, decision.model(path), allow_rank_deficient = True)
    error = truth.y_test - predict(model, truth.x_test)

    return ReplicationMetrics(
        covered = support.issubset(chosen),
        fn = len(support - chosen) / len(support) if support else 0.0,
        fp = len(chosen - support) / irrelevant if irrelevant else 0.0,
        best_size = best_size(path, support),
        selected_size = len(chosen),
        screened = support.issubset(path.selected),
        rss = model.rss,
        mspe = error ** 2,
        runtime_s = runtime_s
    )
