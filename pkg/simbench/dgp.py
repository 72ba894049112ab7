from __future__ import annotations
import math
from dataclasses import dataclass, field
from enum import Enum
import numpy as np
from dataset.raw_dataset import RawDataset
from dataset.support_set import SupportSet
from errors import ConfigError

#bit generator used for every simulated draw; written into reports for replay
PRNG_ALGORITHM = 'numpy.random.PCG64'

class Example(Enum):
    """Example represents the simulation designs.

    The value is the number the design is known by in the result 
    tables.
    """
    AR1_MA = 3                #x_tj = d_tj + theta d_t,j-1
    COMPOUND_SYMMETRY = 4     #x_tj = d_tj + theta w_t
    INDEPENDENT_DIVERGING = 5 #x_tj = d_tj with ~3 n^(1/4) random coefficients

    @staticmethod
    def parse(value: int | str) -> Example:
        try:
            return Example(int(value))
        except ValueError:
            raise ConfigError(f'unknown example {value!r}; expected 3, 4 or 5')

AR1_MA_COEFFICIENTS = (3.0, -3.5, 4.0, -2.8, 3.25)
COMPOUND_SYMMETRY_COEFFICIENTS = (3.0, 3.0, 3.0, 3.0, 3.0)

@dataclass(frozen = True)
class DgpSpec:
    """DgpSpec describes one simulation design and its random stream.

    Attributes:
        example (Example): The design.
        n (int): The number of training rows.
        p (int): The number of predictors.
        theta (float): The moving-average or common-factor weight 
        (unused by Example 5).
        seed (int): The base seed of the run.
        stream (int): The replication index; (seed, stream) selects an
        independent substream.
        q (int | None): Support size; fixed at 5 for Examples 3 and 4,
        floor(3 n ** 0.25) for Example 5 when None.
        scale_columns (bool): True to standardize simulated predictors
        from the sample, False to center only.
    """

    example: Example
    n: int
    p: int
    theta: float = 0.0
    seed: int = 0
    stream: int = 0
    q: int | None = field(default = None)
    scale_columns: bool = False

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ConfigError(f'n must be >= 2, got {self.n}')
        if self.p < self.support_size():
            raise ConfigError(f'p = {self.p} is smaller than the support size {self.support_size()}')
        if not math.isfinite(self.theta):
            raise ConfigError('theta must be finite')

    def support_size(self) -> int:
        if self.q is not None:
            return self.q
        if self.example is Example.INDEPENDENT_DIVERGING:
            return math.floor(3 * self.n ** 0.25)
        return 5

    def replication(self, stream: int) -> DgpSpec:
        return DgpSpec(self.example, self.n, self.p, self.theta, self.seed, stream, self.q, self.scale_columns)

    def rng(self) -> np.random.Generator:
        """Returns the generator of this spec's substream."""
        sequence = np.random.SeedSequence(entropy = self.seed, spawn_key = (self.stream,))
        return np.random.Generator(np.random.PCG64(sequence))

@dataclass(frozen = True)
class SimTruth:
    """SimTruth holds what a replication knows and the selector does not.

    Attributes:
        support (SupportSet): The relevant columns.
        beta_true (np.ndarray): The coefficients.
        x_test (np.ndarray): The held-out row of predictors.
        y_test (float): The held-out response.
    """

    support: SupportSet
    beta_true: np.ndarray
    x_test: np.ndarray
    y_test: float

def coefficients(spec: DgpSpec, rng: np.random.Generator) -> np.ndarray:
    """Returns the coefficient vector of a design.

    Examples 3 and 4 use fixed coefficients on the first q columns. 
    Example 5 draws (-1) ** U_j (5 ln n / n ** 0.5 + |Z_j|) with 
    P(U_j = 1) = 0.4 and Z_j standard normal.
    """
    q = spec.support_size()
    beta = np.zeros(spec.p)

    match spec.example:
        case Example.AR1_MA:
            fixed = AR1_MA_COEFFICIENTS
        case Example.COMPOUND_SYMMETRY:
            fixed = COMPOUND_SYMMETRY_COEFFICIENTS
        case Example.INDEPENDENT_DIVERGING:
            signs = np.where(rng.random(q) < 0.4, -1.0, 1.0)
            beta[:q] = signs * (5 * math.log(spec.n) / math.sqrt(spec.n) + np.abs(rng.standard_normal(q)))
            return beta

    if q > len(fixed):
        raise ConfigError(f'example {spec.example.value} has {len(fixed)} fixed coefficients, q = {q} requested')
    beta[:q] = fixed[:q]

    return beta

def predictors(spec: DgpSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    """Draws the predictor matrix of a design.

    Example 3 draws one extra column d_t0 so that x_t1 also has a 
    moving-average term.
    """
    match spec.example:
        case Example.AR1_MA:
            d = rng.standard_normal((rows, spec.p + 1))
            return d[:, 1:] + spec.theta * d[:, :-1]
        case Example.COMPOUND_SYMMETRY:
            d = rng.standard_normal((rows, spec.p))
            w = rng.standard_normal((rows, 1))
            return d + spec.theta * w
        case Example.INDEPENDENT_DIVERGING:
            return rng.standard_normal((rows, spec.p))

def generate(spec: DgpSpec) -> tuple[RawDataset, SimTruth]:
    """Draws one replication of a design.

    n + 1 rows are drawn; the last one is held out for prediction. 
    The noise is i.i.d. standard normal and independent of the 
    predictors. The same spec always yields the same data.

    Args:
        spec (DgpSpec): The design and substream.

    Returns:
        The training data and the truth of the replication.
    """
    rng = spec.rng()

    beta = coefficients(spec, rng)
    X = predictors(spec, rng, spec.n + 1)
    y = X @ beta + rng.standard_normal(spec.n + 1)

    truth = SimTruth(
        support = SupportSet.of(np.flatnonzero(beta)),
        beta_true = beta,
        x_test = X[-1].copy(),
        y_test = float(y[-1])
    )

    return RawDataset(y[:-1], X[:-1]), truth
