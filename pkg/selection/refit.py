from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Iterable
import numpy as np
from scipy import linalg
from dataset.dataset import Dataset
from errors import InputError, RankDeficientError

logger = logging.getLogger(__name__)

#singular values at or below this times the largest count as zero
RANK_TOLERANCE = 1e-10

@dataclass(frozen = True)
class OLSModel:
    """OLSModel represents a least squares refit on a chosen support.

    Attributes:
        support (tuple[int, ...]): The 0-based columns in the model, in
        the order given to refit_ols.
        coef (np.ndarray): Coefficients of the support columns in 
        original units.
        intercept (float): The intercept in original units.
        rss (float): The residual sum of squares on the fitted rows.
        p (int): The number of predictors of the data.
    """

    support: tuple[int, ...]
    coef: np.ndarray
    intercept: float
    rss: float
    p: int

    def coefficients(self) -> np.ndarray:
        """Returns the length-p coefficient vector (zeros off the support)."""
        full = np.zeros(self.p)
        full[list(self.support)] = self.coef
        return full

def rank_deficient_columns(design: np.ndarray) -> list[int]:
    """Finds columns of a design that are (near) combinations of the others.

    Uses a column-pivoted QR decomposition; columns pivoted past the 
    numerical rank are reported.

    Args:
        design (np.ndarray): The n x k design.

    Returns:
        Positions (0..k-1) of the offending columns, empty when the 
        design has full column rank.
    """
    if design.shape[1] == 0:
        return []

    R, pivots = linalg.qr(design, mode = 'r', pivoting = True)
    diagonal = np.abs(np.diag(R))
    size = diagonal.shape[0]
    scale = diagonal[0] if size else 0.0

    bad = [int(pivots[i]) for i in range(size) if diagonal[i] <= RANK_TOLERANCE * scale]
    bad.extend(int(pivots[i]) for i in range(size, design.shape[1]))

    return sorted(bad)

def refit_ols(data: Dataset, J: Iterable[int], allow_rank_deficient: bool = False) -> OLSModel:
    """Refits y by least squares on the columns in J.

    The fit is done on the standardized columns and mapped back to 
    original units with the stored means and divisors.

    Args:
        data (Dataset): The standardized data.
        J (Iterable[int]): The 0-based columns to fit on.
        allow_rank_deficient (bool, optional): True to return the 
        minimum-norm solution (with a logged warning) instead of 
        raising on a singular design. Defaults to False.

    Raises:
        InputError: J has more than n - 1 columns.
        RankDeficientError: The design is numerically singular; the 
        error names the offending columns.

    Returns:
        The fitted OLSModel.
    """
    support = tuple(int(j) for j in J)

    if not support:
        return OLSModel(support, np.zeros(0), data.y_mean, float(data.y @ data.y), data.p)
    if len(support) > data.n - 1 and not allow_rank_deficient:
        raise InputError(f'cannot refit {len(support)} columns on {data.n} observations')

    design = data.X[:, list(support)]
    singular_values = linalg.svdvals(design)

    if singular_values.min() <= RANK_TOLERANCE * singular_values.max() or len(support) > data.n - 1:
        offending = [support[i] for i in rank_deficient_columns(design)]
        if not allow_rank_deficient:
            raise RankDeficientError(offending)
        logger.warning('refit on rank deficient design (columns %s); using minimum-norm solution', [j + 1 for j in offending])

    coef_std = linalg.lstsq(design, data.y, lapack_driver = 'gelsd', check_finite = False)[0]
    residual = data.y - design @ coef_std

    coef = coef_std / data.x_scales[list(support)]
    intercept = data.y_mean - float(coef @ data.x_means[list(support)])

    return OLSModel(support, coef, intercept, float(residual @ residual), data.p)

def predict(model: OLSModel, x_new: np.ndarray) -> float:
    """Predicts the response of one row in original units.

    Args:
        model (OLSModel): The refit model.
        x_new (np.ndarray): A length-p row in original units.

    Raises:
        InputError: x_new has the wrong length or a non-finite entry.

    Returns:
        intercept + sum over the support of coef_j * x_new[j].
    """
    x_new = np.asarray(x_new, dtype = float)

    if x_new.shape != (model.p,):
        raise InputError(f'expected a row of {model.p} values, got shape {x_new.shape}')
    if not np.isfinite(x_new).all():
        raise InputError('x_new has a non-finite entry')

    return model.intercept + float(model.coefficients() @ x_new)
