from __future__ import annotations
import math
from dataclasses import dataclass, field
import numpy as np
from dataset.dataset import Dataset
from errors import InternalError

#a residualized column whose mean square falls to this share of its
#original mean square is treated as degenerate
DEGENERATE_NORM = 1e-12

@dataclass
class PathState:
    """PathState represents the incremental Gram-Schmidt state of a selection path.

    PathState carries everything a forward-selection step needs: the
    current fit and residual of y, every candidate column with the 
    already selected directions projected out, and the mean squares 
    of those residualized columns. Advancing the state by one column
    is the only way it changes.

    Attributes:
        data (Dataset): The standardized data being fitted.
        residual (np.ndarray): U^(m) = y - fitted.
        fitted (np.ndarray): The current fitted values.
        xperp (np.ndarray): The n x p residualized columns.
        sq_norms (np.ndarray): n^-1 sum_t xperp[t, j] ** 2.
        col_norms (np.ndarray): n^-1 sum_t x[t, j] ** 2 of the original
        columns (OGA's constant denominators).
        active (np.ndarray): False once a column is selected or 
        degenerate.
        step (int): The number of selected columns m.
        selected (list[int]): The selected indices in order.
        betas (list[float]): The coefficient of each selected direction.
        unique_values (list[float]): The unadjusted unique contribution
        |n^-1 sum U x_perp| / (n^-1 sum x_perp ** 2) ** 0.5 of each 
        selected column at its selection time.
        sigma2 (list[float]): The residual mean squares, starting 
        with the empty model.
        deactivated (list[int]): Columns switched off as degenerate.
    """

    data: Dataset
    residual: np.ndarray = field(init = False)
    fitted: np.ndarray = field(init = False)
    xperp: np.ndarray = field(init = False)
    sq_norms: np.ndarray = field(init = False)
    col_norms: np.ndarray = field(init = False)
    active: np.ndarray = field(init = False)
    step: int = field(init = False, default = 0)
    selected: list[int] = field(init = False)
    betas: list[float] = field(init = False)
    unique_values: list[float] = field(init = False)
    sigma2: list[float] = field(init = False)
    deactivated: list[int] = field(init = False)

    def __post_init__(self) -> None:
        """Sets the state of the empty model (J = {}).
        """
        n = self.data.n

        self.fitted = np.zeros(n)
        self.residual = np.array(self.data.y, dtype = float)
        self.xperp = np.array(self.data.X, dtype = float)
        self.col_norms = np.mean(self.xperp ** 2, axis = 0)
        self.sq_norms = self.col_norms.copy()
        self.active = ~np.asarray(self.data.degenerate, dtype = bool)

        self.selected = []
        self.betas = []
        self.unique_values = []
        self.sigma2 = [float(np.mean(self.residual ** 2))]
        self.deactivated = []

        self.deactivate(np.flatnonzero(self.active & self.exhausted()))

    def rss(self) -> float:
        return float(self.residual @ self.residual)

    def exhausted(self) -> np.ndarray:
        """Flags columns left with (almost) nothing outside the selected span."""
        return self.sq_norms <= DEGENERATE_NORM * self.col_norms

    def deactivate(self, indices: np.ndarray) -> None:
        """Switches off columns that can no longer be selected.

        Args:
            indices (np.ndarray): The columns to switch off.
        """
        for index in indices:
            if self.active[index]:
                self.active[index] = False
                self.deactivated.append(int(index))

    def advance(self, j_sel: int) -> PathState:
        """Adds column j_sel to the model and updates every candidate.

        The fit gains beta * x_perp[:, j_sel] with beta the regression
        coefficient of the residual on that direction. Each column then
        loses its component along the direction (one Gram-Schmidt
        sweep), the mean squares are refreshed and columns whose 
        residualized mean square falls to the degeneracy floor are 
        switched off.

        Args:
            j_sel (int): The column to add.

        Raises:
            InternalError: j_sel is not active or is degenerate.

        Returns:
            This PathState object.
        """
        if not self.active[j_sel] or self.exhausted()[j_sel]:
            raise InternalError(f'column {j_sel} cannot be selected (active={bool(self.active[j_sel])}, '
                                f'sq_norm={self.sq_norms[j_sel]:.3e})')

        n = self.data.n
        direction = self.xperp[:, j_sel].copy()
        norm2 = float(direction @ direction)
        gain = float(self.residual @ direction)
        beta = gain / norm2

        #prediction and residuals
        self.fitted = self.fitted + beta * direction
        self.residual = self.data.y - self.fitted

        #orthogonalization; alpha uses the residualized columns, which equals
        #the original-column form because direction is orthogonal to all earlier ones
        alphas = (direction @ self.xperp) / norm2
        self.xperp -= direction[:, np.newaxis] * alphas
        self.xperp[:, j_sel] = 0.0
        self.sq_norms = np.minimum(self.sq_norms, np.mean(self.xperp ** 2, axis = 0))

        self.active[j_sel] = False
        self.deactivate(np.flatnonzero(self.active & self.exhausted()))

        self.step += 1
        self.selected.append(int(j_sel))
        self.betas.append(beta)
        self.unique_values.append(abs(gain) / n / math.sqrt(norm2 / n))
        self.sigma2.append(min(self.sigma2[-1], float(np.mean(self.residual ** 2))))

        return self
