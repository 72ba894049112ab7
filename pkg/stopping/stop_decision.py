from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum, auto
from errors import ConfigError
from selection.selection_path import SelectionPath

class StopRule(Enum):
    """StopRule represents the implemented model-size rules."""
    RATIO = auto() #argmin of consecutive unique-contribution ratios
    HDBIC = auto() #high-dimensional BIC
    BIC = auto()   #extended BIC with a 2 log p penalty
    NONE = auto()  #keep the whole path

    @staticmethod
    def parse(text: str) -> StopRule:
        try:
            return StopRule[text.strip().upper()]
        except KeyError:
            raise ConfigError(f'unknown stop rule {text!r}; expected one of {", ".join(r.name.lower() for r in StopRule)}')

@dataclass(frozen = True)
class StopDecision:
    """StopDecision represents a chosen model size and what produced it.

    Attributes:
        k_hat (int): The chosen number of leading path variables.
        rule (StopRule): The rule that chose it.
        deltas (tuple[float, ...]): The ratio sequence (ratio rule only).
        criterion (tuple[float, ...]): The information criterion value
        at m = 1..K (HDBIC and BIC only).
    """

    k_hat: int
    rule: StopRule
    deltas: tuple[float, ...] = field(default = ())
    criterion: tuple[float, ...] = field(default = ())

    def model(self, path: SelectionPath) -> tuple[int, ...]:
        """Returns the chosen nested model J_k_hat of the path."""
        return path.prefix(self.k_hat)

    def to_dict(self) -> dict:
        return {'k_hat': self.k_hat, 'rule': self.rule.name.lower(), 'deltas': list(self.deltas), 'criterion': list(self.criterion)}
