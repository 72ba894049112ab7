from __future__ import annotations
from dataclasses import dataclass, field
from typing import Sequence
import numpy as np
from scipy import linalg
from errors import ConfigError, InputError
from selection.method import Method

#eigenvalue / pivot acceptance threshold for population systems
PIVOT_TOLERANCE = 1e-10

@dataclass(frozen = True)
class PopulationModel:
    """PopulationModel represents y = beta' x + noise with known second moments.

    Attributes:
        Gamma (np.ndarray): The p x p covariance matrix of x.
        beta (np.ndarray): The length-p coefficient vector.
        noise_var (float): The noise variance.
        loadings (np.ndarray | None): Optional k x p matrix B with 
        x = B' z for z ~ N(0, I_k); Gamma = B' B. Needed by sample().
    """

    Gamma: np.ndarray
    beta: np.ndarray
    noise_var: float = 0.0
    loadings: np.ndarray | None = field(default = None)

    def __post_init__(self) -> None:
        Gamma = np.array(self.Gamma, dtype = float)
        beta = np.array(self.beta, dtype = float)

        if Gamma.ndim != 2 or Gamma.shape[0] != Gamma.shape[1] or Gamma.shape[0] != beta.shape[0]:
            raise ConfigError(f'Gamma {Gamma.shape} and beta {beta.shape} do not match')
        if not np.allclose(Gamma, Gamma.T, atol = 1e-12):
            raise ConfigError('Gamma must be symmetric')
        if linalg.eigvalsh(Gamma).min() < -1e-10:
            raise ConfigError('Gamma must be positive semidefinite')
        if self.noise_var < 0:
            raise ConfigError(f'noise_var must be >= 0, got {self.noise_var}')

        object.__setattr__(self, 'Gamma', Gamma)
        object.__setattr__(self, 'beta', beta)

    @staticmethod
    def from_loadings(loadings: np.ndarray, beta: Sequence[float], noise_var: float = 0.0) -> PopulationModel:
        """Builds a PopulationModel with Gamma = B' B.

        Args:
            loadings (np.ndarray): k x p matrix whose column i is the 
            loading vector of x_i.
            beta (Sequence[float]): The coefficients.
            noise_var (float, optional): Defaults to 0.

        Returns:
            The PopulationModel.
        """
        loadings = np.asarray(loadings, dtype = float)
        Gamma = loadings.T @ loadings
        return PopulationModel(0.5 * (Gamma + Gamma.T), beta, noise_var, loadings)

    @property
    def p(self) -> int:
        return self.beta.shape[0]

    def sample(self, n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        """Draws n rows (y, X) from the loading construction.

        Args:
            n (int): The number of rows.
            rng (np.random.Generator): The random source.

        Raises:
            ConfigError: The model has no loadings.

        Returns:
            The length-n response and the n x p predictors.
        """
        if self.loadings is None:
            raise ConfigError('sampling needs a model built from loadings')

        z = rng.standard_normal((n, self.loadings.shape[0]))
        X = z @ self.loadings
        y = X @ self.beta + np.sqrt(self.noise_var) * rng.standard_normal(n)

        return y, X

def pop_scores(model: PopulationModel, J: Sequence[int], method: Method) -> np.ndarray:
    """Evaluates the population selection criterion after selecting J.

    For i not in J the residual covariance E[(y - y_J) x_i] is 
    (Gamma beta)_i - g_i(J)' Gamma(J)^-1 (Gamma beta)(J). OGA divides
    it by Gamma_ii ** 0.5, GSFR by E[x_perp_i ** 2] ** 0.5 with 
    E[x_perp_i ** 2] = Gamma_ii - g_i(J)' Gamma(J)^-1 g_i(J). A 
    candidate exactly collinear with J (no residual variance) scores 0.

    Args:
        model (PopulationModel): The population.
        J (Sequence[int]): The selected 0-based indices.
        method (Method): Method.OGA or Method.GSFR.

    Raises:
        InputError: Gamma(J) is singular.
        ConfigError: method is not OGA or GSFR.

    Returns:
        A length-p vector, 0 at every index in J.
    """
    if method not in (Method.OGA, Method.GSFR):
        raise ConfigError(f'no population criterion for {method.name}')

    J = [int(j) for j in J]
    Gamma = model.Gamma
    variances = np.diag(Gamma).copy()
    covariances = Gamma @ model.beta

    if J:
        block = Gamma[np.ix_(J, J)]
        if linalg.eigvalsh(block).min() <= PIVOT_TOLERANCE:
            raise InputError(f'Gamma(J) is singular for J = {[j + 1 for j in J]}')

        factor = linalg.cho_factor(block)
        cross = Gamma[J, :]
        residual_variances = variances - np.sum(cross * linalg.cho_solve(factor, cross), axis = 0)
        residual_covariances = covariances - cross.T @ linalg.cho_solve(factor, covariances[J])
    else:
        residual_variances = variances
        residual_covariances = covariances

    if method is Method.OGA:
        denominators = np.sqrt(variances)
    else:
        denominators = np.sqrt(np.clip(residual_variances, 0.0, None))

    usable = residual_variances > PIVOT_TOLERANCE * np.maximum(variances, 1.0)
    usable[J] = False

    scores = np.zeros(model.p)
    scores[usable] = residual_covariances[usable] / denominators[usable]

    return scores

def pop_path(model: PopulationModel, K: int, method: Method) -> list[int]:
    """Runs the population version of greedy selection for K steps.

    Args:
        model (PopulationModel): The population.
        K (int): The number of steps (at most p).
        method (Method): Method.OGA or Method.GSFR.

    Raises:
        ConfigError: K is larger than p.

    Returns:
        The selected 0-based indices; shorter than K when every 
        remaining score is 0.
    """
    if K > model.p:
        raise ConfigError(f'K = {K} exceeds p = {model.p}')

    selected = []
    for _ in range(K):
        magnitudes = np.abs(pop_scores(model, selected, method))
        index = int(np.argmax(magnitudes))
        if not magnitudes[index] > PIVOT_TOLERANCE:
            break
        selected.append(index)

    return selected
