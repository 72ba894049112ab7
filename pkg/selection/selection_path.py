from __future__ import annotations
from json import dumps, loads
from dataclasses import dataclass, field
from errors import InputError
from selection.method import Method, StopReason

@dataclass(frozen = True)
class SelectionPath:
    """SelectionPath represents the outcome of one forward-selection run.

    Attributes:
        method (Method): The engine that produced the path.
        selected (tuple[int, ...]): The selected indices in order.
        crit_values (tuple[float, ...]): The winning criterion magnitude
        at each step (rho1-adjusted for GSFR).
        unique_values (tuple[float, ...]): The unadjusted unique 
        contribution of each winner, the quantity the ratio rule uses.
        sigma2 (tuple[float, ...]): Residual mean squares of the nested
        models, K + 1 entries starting with the empty model.
        step_betas (tuple[float, ...]): The coefficient of each selected
        direction.
        rho1 (float): The GSFR denominator adjustment used.
        kn (int): The iteration budget after clipping.
        tie_rule (str): How ties were broken.
        n (int): The number of observations.
        p (int): The number of predictors.
        stop_reason (StopReason): Why the path ended.
        warnings (tuple[str, ...]): Warning records raised by the run.
        deactivated (tuple[int, ...]): Columns switched off as degenerate.
    """

    method: Method
    selected: tuple[int, ...]
    crit_values: tuple[float, ...]
    unique_values: tuple[float, ...]
    sigma2: tuple[float, ...]
    step_betas: tuple[float, ...]
    rho1: float
    kn: int
    n: int
    p: int
    stop_reason: StopReason = field(default = StopReason.BUDGET)
    tie_rule: str = field(default = 'lowest-index')
    warnings: tuple[str, ...] = field(default = ())
    deactivated: tuple[int, ...] = field(default = ())

    def __post_init__(self) -> None:
        for name in ('selected', 'crit_values', 'unique_values', 'sigma2', 'step_betas', 'warnings', 'deactivated'):
            object.__setattr__(self, name, tuple(getattr(self, name)))

        if len(set(self.selected)) != len(self.selected):
            raise InputError(f'selection path repeats an index: {self.selected}')
        if len(self.sigma2) != len(self.selected) + 1:
            raise InputError(f'sigma2 has {len(self.sigma2)} entries for {len(self.selected)} steps')

    @property
    def K(self) -> int:
        return len(self.selected)

    def prefix(self, k: int) -> tuple[int, ...]:
        """Returns the first k selected indices (the nested model J_k)."""
        return self.selected[:k]

    def to_dict(self) -> dict:
        return {
            'method': self.method.name,
            'selected': list(self.selected),
            'crit_values': list(self.crit_values),
            'unique_values': list(self.unique_values),
            'sigma2': list(self.sigma2),
            'step_betas': list(self.step_betas),
            'config': {'rho1': self.rho1, 'kn': self.kn, 'tie_rule': self.tie_rule},
            'n': self.n,
            'p': self.p,
            'stop_reason': self.stop_reason.name,
            'warnings': list(self.warnings),
            'deactivated': list(self.deactivated)
        }

    @staticmethod
    def from_dict(data: dict) -> SelectionPath:
        return SelectionPath(
            method = Method[data['method']],
            selected = data['selected'],
            crit_values = data['crit_values'],
            unique_values = data['unique_values'],
            sigma2 = data['sigma2'],
            step_betas = data['step_betas'],
            rho1 = data['config']['rho1'],
            kn = data['config']['kn'],
            tie_rule = data['config']['tie_rule'],
            n = data['n'],
            p = data['p'],
            stop_reason = StopReason[data['stop_reason']],
            warnings = data['warnings'],
            deactivated = data['deactivated']
        )

    def save(self, file_name: str) -> None:
        """Saves this SelectionPath to a JSON file.

        Args:
            file_name (str): The file name to save in 
            (should end with .json).
        """
        with open(file_name, 'w') as file:
            file.write(dumps(self.to_dict(), indent = 2))

    @staticmethod
    def load(file_name: str) -> SelectionPath:
        """Loads a SelectionPath saved with save().

        Args:
            file_name (str): The file name of the desired JSON file.

        Returns:
            The loaded SelectionPath.
        """
        with open(file_name, 'r') as file:
            return SelectionPath.from_dict(loads(file.read()))
