from __future__ import annotations
from abc import ABC
import numpy as np
from dataset.dataset import Dataset
from selection.path_state import PathState
from selection.selector_config import SelectorConfig

class Selector(ABC):
    """Selector represents a rule that scores the candidates of a PathState.

    Selector represents a rule that scores the candidate columns of a
    PathState. Each forward-selection engine scores differently; the 
    winner of a step is always the candidate with the largest score 
    magnitude, lowest index first on ties.
    """

    def __init__(self, data: Dataset, cfg: SelectorConfig):
        """Initializes a Selector for the given data and tuning.

        Args:
            data (Dataset): The standardized data.
            cfg (SelectorConfig): The tuning of the run.
        """
        self.data = data
        self.cfg = cfg

    def scores(self, state: PathState) -> np.ndarray:
        """Returns the criterion value of every column.

        Returns the criterion value of every column. Inactive columns
        score exactly 0. Depending on the child class, the criterion 
        is calculated differently.

        Raises:
            NotImplementedError: The scores function called belongs to
            the Selector abstract base class.

        Returns:
            A length-p vector of criterion values.
        """
        raise NotImplementedError()

    def choose(self, state: PathState) -> tuple[int, float] | None:
        """Picks the column with the largest score magnitude.

        Args:
            state (PathState): The current state.

        Returns:
            The chosen index and its score magnitude, or None when 
            every score is 0.
        """
        magnitudes = np.abs(self.scores(state))
        magnitudes[~state.active] = 0.0

        index = int(np.argmax(magnitudes)) #first maximum, so lowest index wins ties
        if not magnitudes[index] > 0:
            return None

        return index, float(magnitudes[index])
