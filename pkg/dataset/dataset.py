from __future__ import annotations
import logging
from dataclasses import dataclass, field
import numpy as np
from dataset.raw_dataset import RawDataset

logger = logging.getLogger(__name__)

#columns whose sample sd is at or below this share of their largest
#magnitude are treated as constant
DEGENERATE_SD = 1e-12

@dataclass(frozen = True)
class Dataset:
    """Dataset represents centered (and usually scaled) data ready for selection.

    Dataset is what every selector consumes. The response is centered
    and each predictor column is centered and divided by x_scales. The
    means and divisors are kept so that new rows can be transformed 
    the same way and so that fitted coefficients can be mapped back 
    to original units.

    Attributes:
        y (np.ndarray): The centered response.
        X (np.ndarray): The centered, scaled predictors.
        y_mean (float): The mean removed from the response.
        x_means (np.ndarray): The means removed from each column.
        x_scales (np.ndarray): The divisors applied to each column 
        (always > 0).
        degenerate (np.ndarray): True for columns with zero variance.
        column_names (list[str] | None): Names carried over from the 
        RawDataset.
    """

    y: np.ndarray
    X: np.ndarray
    y_mean: float
    x_means: np.ndarray
    x_scales: np.ndarray
    degenerate: np.ndarray
    column_names: list[str] | None = field(default = None)

    def __post_init__(self) -> None:
        for name in ('y', 'X', 'x_means', 'x_scales', 'degenerate'):
            getattr(self, name).setflags(write = False)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p(self) -> int:
        return self.X.shape[1]

    def transform(self, x_rows: np.ndarray) -> np.ndarray:
        """Applies this Dataset's centering and scaling to new rows.

        Args:
            x_rows (np.ndarray): A length-p vector or an m x p matrix
            in original units.

        Returns:
            The rows on the standardized scale.
        """
        return (np.asarray(x_rows, dtype = float) - self.x_means) / self.x_scales

    def restore(self) -> RawDataset:
        """Undoes the centering and scaling.

        Returns:
            A RawDataset equal (up to rounding) to the one that was 
            standardized.
        """
        return RawDataset(self.y + self.y_mean, self.X * self.x_scales + self.x_means, self.column_names)

    def label(self, index: int) -> str:
        if self.column_names is not None:
            return self.column_names[index]
        return f'x{index + 1}'

def standardize(raw: RawDataset, scale_columns: bool = True) -> Dataset:
    """Centers the response and centers (and scales) every predictor.

    The sample standard deviation uses the n - 1 divisor. A column 
    with zero variance is centered to zeros, keeps a divisor of 1 and
    is flagged as degenerate so that selectors never pick it while 
    reported indices still follow the input order.

    Args:
        raw (RawDataset): The data in original units.
        scale_columns (bool, optional): True to divide each column by
        its sample standard deviation, False to center only. Defaults
        to True.

    Returns:
        The standardized Dataset.
    """
    y_mean = float(np.mean(raw.y))
    x_means = np.mean(raw.X, axis = 0)
    X = raw.X - x_means

    sds = np.std(X, axis = 0, ddof = 1)
    magnitudes = np.maximum(np.abs(raw.X).max(axis = 0), 1e-300)
    degenerate = sds <= DEGENERATE_SD * magnitudes

    if scale_columns:
        x_scales = np.where(degenerate, 1.0, sds)
        X = X / x_scales
    else:
        x_scales = np.ones(raw.p)

    if degenerate.any():
        X[:, degenerate] = 0.0
        logger.debug('%d constant column(s) flagged degenerate', int(degenerate.sum()))

    return Dataset(
        y = raw.y - y_mean,
        X = X,
        y_mean = y_mean,
        x_means = x_means,
        x_scales = x_scales,
        degenerate = degenerate,
        column_names = raw.column_names
    )
