from __future__ import annotations
import math
import numpy as np
from dataset.dataset import Dataset
from selection.path_state import PathState
from selection.selector import Selector
from selection.selector_config import SelectorConfig

def gsfr_scores(state: PathState, data: Dataset, cfg: SelectorConfig) -> np.ndarray:
    """Computes the GSFR unique-contribution criterion of every column.

    Entry i is n^-1 sum_t U_t x_ti divided by 
    (n^-1 sum_t x_perp_ti ** 2) ** 0.5 + rho1 * (log p / n) ** 0.5, 
    where U is the current residual and x_perp the column with the 
    selected directions projected out. The numerator uses the 
    original column, which equals the residualized one because U is 
    orthogonal to the selected span.

    Args:
        state (PathState): The current state.
        data (Dataset): The standardized data.
        cfg (SelectorConfig): Supplies rho1.

    Returns:
        A length-p vector, 0 at every inactive index.
    """
    n, p = data.n, data.p
    numerators = (data.X.T @ state.residual) / n

    if cfg.rho1 == 0:
        state.deactivate(np.flatnonzero(state.active & state.exhausted()))

    denominators = np.sqrt(state.sq_norms) + cfg.rho1 * math.sqrt(math.log(p) / n)

    scores = np.zeros(p)
    usable = state.active & (denominators > 0)
    scores[usable] = numerators[usable] / denominators[usable]

    return scores

class GSFRSelector(Selector):
    """GSFRSelector scores candidates by their normalized unique contribution."""

    def scores(self, state: PathState) -> np.ndarray:
        return gsfr_scores(state, self.data, self.cfg)
