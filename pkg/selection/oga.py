from __future__ import annotations
import numpy as np
from dataset.dataset import Dataset
from selection.path_state import PathState
from selection.selector import Selector

def oga_scores(state: PathState, data: Dataset) -> np.ndarray:
    """Computes the OGA marginal-contribution criterion of every column.

    Entry i is n^-1 sum_t U_t x_ti divided by the original column 
    norm (n^-1 sum_t x_ti ** 2) ** 0.5, which stays fixed along the 
    path (it is 1 on scaled data). Selected and degenerate columns 
    score 0.

    Args:
        state (PathState): The current state.
        data (Dataset): The standardized data.

    Returns:
        A length-p vector, 0 at every inactive index.
    """
    numerators = (data.X.T @ state.residual) / data.n

    scores = np.zeros(data.p)
    usable = state.active & (state.col_norms > 0)
    scores[usable] = numerators[usable] / np.sqrt(state.col_norms[usable])

    return scores

class OGASelector(Selector):
    """OGASelector scores candidates by their marginal contribution."""

    def scores(self, state: PathState) -> np.ndarray:
        return oga_scores(state, self.data)
