from __future__ import annotations
import math
import numpy as np
from errors import ConfigError
from population.population_model import PopulationModel

def example1_model(b: float = 1.0, beta: float = 2.0, noise_var: float = 0.0) -> PopulationModel:
    """Builds the three-variable design where marginal scoring goes wrong.

    y = beta x_1 + x_2 with x_i = B_i' z, z ~ N(0, I_3) and unit 
    variance loadings B_1 = (1, 0, 0), 
    B_2 = (1, b, 0) / (1 + b^2) ** 0.5 and 
    B_3 = (1, 10 b, 1) / (2 + 100 b^2) ** 0.5.

    Args:
        b (float, optional): Controls how far x_2 leans away from x_1;
        b = 0 makes them identical. Defaults to 1.
        beta (float, optional): The coefficient of x_1. Defaults to 2.
        noise_var (float, optional): Defaults to 0.

    Raises:
        ConfigError: b < 0.

    Returns:
        The PopulationModel.
    """
    if b < 0:
        raise ConfigError(f'b must be >= 0, got {b}')

    s2 = math.sqrt(1 + b ** 2)
    s3 = math.sqrt(2 + 100 * b ** 2)
    loadings = np.array([[1.0, 1 / s2, 1 / s3],
                         [0.0, b / s2, 10 * b / s3],
                         [0.0, 0.0, 1 / s3]])

    return PopulationModel.from_loadings(loadings, [beta, 1.0, 0.0], noise_var)

def example2_model(eta: float = 0.5, noise_var: float = 0.0) -> PopulationModel:
    """Builds the design where x_3 nearly duplicates x_1.

    y = 2 x_1 + x_2 with loadings B_1 = (2, 0, 0), B_2 = (0, 1, 0) and
    B_3 = (1, 0, eta); eta = 0 makes x_3 exactly x_1 / 2.
    """
    if eta < 0:
        raise ConfigError(f'eta must be >= 0, got {eta}')

    loadings = np.array([[2.0, 0.0, 1.0],
                         [0.0, 1.0, 0.0],
                         [0.0, 0.0, eta]])

    return PopulationModel.from_loadings(loadings, [2.0, 1.0, 0.0], noise_var)
