from __future__ import annotations
from dataclasses import dataclass, field
import numpy as np
from errors import InputError

@dataclass(frozen = True)
class RawDataset:
    """RawDataset represents a response and its predictors in original units.

    RawDataset holds the observations exactly as they were read or 
    generated. Nothing is centered or scaled yet; see 
    dataset.dataset.standardize for that.

    Attributes:
        y (np.ndarray): The length-n response vector.
        X (np.ndarray): The n x p predictor matrix.
        column_names (list[str] | None): Optional names of the p 
        predictor columns.
    """

    y: np.ndarray
    X: np.ndarray
    column_names: list[str] | None = field(default = None)

    def __post_init__(self) -> None:
        """Validates shapes and entries and freezes the arrays.

        Raises:
            InputError: A shape is wrong, n < 2, p < 1, an entry is not
            finite, or the column names do not match the columns.
        """
        y = np.array(self.y, dtype = float)
        X = np.array(self.X, dtype = float)

        if X.ndim == 1:
            X = X.reshape(-1, 1)
        if y.ndim != 1 or X.ndim != 2:
            raise InputError('y must be a vector and X a matrix')
        if X.shape[0] != y.shape[0]:
            raise InputError(f'y has {y.shape[0]} rows but X has {X.shape[0]}')
        if y.shape[0] < 2:
            raise InputError(f'at least 2 observations are needed, got {y.shape[0]}')
        if X.shape[1] < 1:
            raise InputError('at least 1 predictor column is needed')
        if not np.isfinite(y).all():
            raise InputError(f'response has a non-finite entry at row {int(np.flatnonzero(~np.isfinite(y))[0]) + 1}')
        if not np.isfinite(X).all():
            row, column = np.argwhere(~np.isfinite(X))[0]
            raise InputError(f'predictor matrix has a non-finite entry at row {row + 1}, column {column + 1}')

        if self.column_names is not None:
            names = list(self.column_names)
            if len(names) != X.shape[1]:
                raise InputError(f'{len(names)} column names given for {X.shape[1]} columns')
            if len(set(names)) != len(names):
                raise InputError('column names must be unique')
            object.__setattr__(self, 'column_names', names)

        y.setflags(write = False)
        X.setflags(write = False)
        object.__setattr__(self, 'y', y)
        object.__setattr__(self, 'X', X)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def p(self) -> int:
        return self.X.shape[1]

    def take(self, rows: np.ndarray) -> RawDataset:
        """Returns a RawDataset made of the given rows.

        Args:
            rows (np.ndarray): 0-based row indices.

        Returns:
            A new RawDataset with the selected rows, same columns.
        """
        rows = np.asarray(rows, dtype = int)
        return RawDataset(self.y[rows], self.X[rows], self.column_names)

    def permute_columns(self, order: np.ndarray) -> RawDataset:
        """Returns a RawDataset whose column j is column order[j] of this one."""
        order = np.asarray(order, dtype = int)
        names = None if self.column_names is None else [self.column_names[j] for j in order]
        return RawDataset(self.y, self.X[:, order], names)

    def label(self, index: int) -> str:
        """Returns the user-facing label of a 0-based column index.

        Args:
            index (int): The 0-based column index.

        Returns:
            The column name when names are known, otherwise the 
            1-based position written as x<j>.
        """
        if self.column_names is not None:
            return self.column_names[index]
        return f'x{index + 1}'
