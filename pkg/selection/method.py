from __future__ import annotations
from enum import Enum, auto
from errors import ConfigError

class Method(Enum):
    """Method represents the implemented forward-selection engines."""
    GSFR = auto() #Gram-Schmidt forward regression (unique contributions)
    OGA = auto()  #orthogonal greedy algorithm (marginal contributions)
    FR = auto()   #forward regression by full refits

    @staticmethod
    def parse(text: str) -> Method:
        try:
            return Method[text.strip().upper()]
        except KeyError:
            raise ConfigError(f'unknown method {text!r}; expected one of {", ".join(m.name.lower() for m in Method)}')

class StopReason(Enum):
    """StopReason represents why a selection path ended."""
    BUDGET = auto()      #K_n steps taken
    PERFECT_FIT = auto() #residual sum of squares fell below the noise floor
    EXHAUSTED = auto()   #every remaining candidate scored 0
    TIME_LIMIT = auto()  #wall-clock cap reached (FR baseline)
