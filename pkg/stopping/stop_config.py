from __future__ import annotations
from dataclasses import dataclass, field
from errors import ConfigError

@dataclass(frozen = True)
class StopConfig:
    """StopConfig holds the adjustment term of the ratio rule.

    By default the whole adjustment rho2 * n ** -(1.5 * gamma + eps0)
    is the single constant rho2_term. When both gamma and eps0 are 
    given, rho2_term plays the part of rho2 and the n-dependent form 
    is used.

    Attributes:
        rho2_term (float): The adjustment (or rho2). Defaults to 1e-6.
        gamma (float | None): Exponent from the signal-strength 
        condition. Defaults to None.
        eps0 (float | None): Extra exponent. Defaults to None.
    """

    rho2_term: float = 1e-6
    gamma: float | None = field(default = None)
    eps0: float | None = field(default = None)

    def __post_init__(self) -> None:
        if not self.rho2_term > 0:
            raise ConfigError(f'rho2_term must be > 0, got {self.rho2_term}')
        if (self.gamma is None) != (self.eps0 is None):
            raise ConfigError('gamma and eps0 must be given together')

    def adjustment(self, n: int) -> float:
        """Returns the additive term used in both parts of each ratio.

        Args:
            n (int): The number of observations.

        Returns:
            rho2_term, or rho2_term * n ** -(1.5 * gamma + eps0) when 
            gamma and eps0 are set.
        """
        if self.gamma is None:
            return self.rho2_term
        return self.rho2_term * n ** -(1.5 * self.gamma + self.eps0)
