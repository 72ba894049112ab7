from __future__ import annotations
import math
import numpy as np
from scipy import linalg
from selection.path_state import PathState
from selection.selector import Selector

def refit_rss(X: np.ndarray, y: np.ndarray, columns: list[int]) -> float:
    """Returns the residual sum of squares of y regressed on the given columns.

    Args:
        X (np.ndarray): The design.
        y (np.ndarray): The response.
        columns (list[int]): The columns to regress on.

    Returns:
        The residual sum of squares of the least squares fit.
    """
    design = X[:, columns]
    coef = linalg.lstsq(design, y, lapack_driver = 'gelsy', check_finite = False)[0]
    residual = y - design @ coef

    return float(residual @ residual)

class FRSelector(Selector):
    """FRSelector picks the candidate whose addition minimizes the RSS.

    FRSelector is the projection-based forward regression baseline. 
    Every candidate is scored by a full least squares refit of y on 
    the selected columns plus the candidate; nothing is reused from 
    step to step. The score is ((RSS_now - RSS_with_j) / n) ** 0.5 so
    that the largest score is the RSS minimizer and its square is the
    drop in residual mean square.
    """

    def scores(self, state: PathState) -> np.ndarray:
        """Returns the square root of each candidate's RSS drop per observation.

        Args:
            state (PathState): The current state.

        Returns:
            A length-p vector, 0 at every inactive index.
        """
        X = self.data.X
        y = self.data.y
        n = self.data.n
        base = list(state.selected)
        rss_now = refit_rss(X, y, base) if base else float(y @ y)

        scores = np.zeros(self.data.p)
        for j in np.flatnonzero(state.active):
            drop = rss_now - refit_rss(X, y, base + [int(j)])
            scores[j] = math.sqrt(max(drop, 0.0) / n)

        return scores
