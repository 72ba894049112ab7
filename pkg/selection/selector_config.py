from __future__ import annotations
import math
import logging
from dataclasses import dataclass, field, replace
from errors import ConfigError

logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class SelectorConfig:
    """SelectorConfig holds the tuning of a forward-selection run.

    Attributes:
        rho1 (float): The adjustment added to the GSFR denominator, 
        multiplied by (log p / n) ** 0.5. Defaults to 1e-6.
        kn (int | None): The iteration budget K_n. None means it is 
        computed from kn_mult with compute_kn.
        kn_mult (float): The multiplier of (n / log p) ** 0.5 used 
        when kn is None. Defaults to 5.
        tie_rule (str): Always 'lowest-index'.
        log_base (str): Always 'natural'.
        time_limit_s (float | None): Wall-clock cap for the FR 
        baseline, None for no cap.
    """

    rho1: float = 1e-6
    kn: int | None = None
    kn_mult: float = 5.0
    tie_rule: str = field(default = 'lowest-index', init = False)
    log_base: str = field(default = 'natural', init = False)
    time_limit_s: float | None = None

    def __post_init__(self) -> None:
        if not self.rho1 >= 0:
            raise ConfigError(f'rho1 must be >= 0, got {self.rho1}')
        if self.kn is not None and self.kn < 1:
            raise ConfigError(f'kn must be >= 1, got {self.kn}')
        if not self.kn_mult > 0:
            raise ConfigError(f'kn_mult must be > 0, got {self.kn_mult}')
        if self.time_limit_s is not None and not self.time_limit_s > 0:
            raise ConfigError(f'time_limit_s must be > 0, got {self.time_limit_s}')

    def with_kn(self, kn: int | None) -> SelectorConfig:
        return replace(self, kn = kn)

    def budget(self, n: int, p: int) -> tuple[int, str | None]:
        """Resolves the iteration budget for an n x p design.

        Args:
            n (int): The number of observations.
            p (int): The number of predictors.

        Returns:
            The budget, clipped to min(n - 1, p), and a warning 
            message when clipping happened (None otherwise).
        """
        cap = max(1, min(n - 1, p))

        if self.kn is None:
            if p < 2:
                return cap, None
            kn = unclipped_kn(n, p, self.kn_mult)
        else:
            kn = self.kn

        if kn > cap:
            message = f'K_n = {kn} exceeds min(n - 1, p) = {cap}; clipped to {cap}'
            logger.warning(message)
            return cap, message

        return kn, None

def compute_kn(n: int, p: int, mult: float = 5.0) -> int:
    """Computes the iteration budget floor(mult * (n / ln p) ** 0.5).

    Args:
        n (int): The number of observations (>= 2).
        p (int): The number of predictors (>= 2).
        mult (float, optional): The multiplier. Defaults to 5.

    Raises:
        ConfigError: n < 2, p < 2 or mult <= 0.

    Returns:
        The budget, at least 1 and at most min(n - 1, p).
    """
    if n < 2 or p < 2 or not mult > 0:
        raise ConfigError(f'compute_kn needs n >= 2, p >= 2 and mult > 0, got ({n}, {p}, {mult})')

    return min(unclipped_kn(n, p, mult), n - 1, p)

def unclipped_kn(n: int, p: int, mult: float) -> int:
    """Returns floor(mult * (n / ln p) ** 0.5), at least 1, before any clipping."""
    return max(1, math.floor(mult * math.sqrt(n / math.log(p))))
