from __future__ import annotations
import os
from argparse import Namespace
from dataclasses import asdict, dataclass, field
from errors import ConfigError
from selection.selector_config import SelectorConfig
from simbench.dgp import DgpSpec, Example
from simbench.monte_carlo import Contender, parse_contenders
from stopping.stop_config import StopConfig
from stopping.stop_decision import StopRule

#environment variable read when --threads is not given
THREADS_ENV = 'GSFR_THREADS'

COMMANDS = ('fit', 'simulate', 'bench', 'population')

def resolve_threads(threads: int | None) -> int:
    """Resolves the worker count: the flag, else GSFR_THREADS, else every core.

    Raises:
        ConfigError: The resolved count is not a positive integer.
    """
    if threads is None:
        text = os.environ.get(THREADS_ENV)
        if text is None:
            return os.cpu_count() or 1
        try:
            threads = int(text)
        except ValueError:
            raise ConfigError(f'{THREADS_ENV} must be an integer, got {text!r}')

    if threads < 1:
        raise ConfigError(f'threads must be >= 1, got {threads}')
    return threads

@dataclass(frozen = True)
class RunConfig:
    """RunConfig holds every setting of one command-line run.

    Every default is resolved before a run starts, and the whole
    object is written as the header of the run's report so that the
    report can be reproduced from it.

    Attributes:
        command (str): fit, simulate, bench or population.
        methods (tuple[str, ...]): Contender names (oga, fr, gsfrn, gsfr).
        stop (str | None): A stop rule overriding each contender's own.
        kn_mult (float): Multiplier of the iteration budget.
        Defaults to 5.
        rho1 (float): GSFR denominator adjustment. Defaults to 1e-6.
        rho2_term (float): Ratio rule adjustment. Defaults to 1e-6.
        seed (int): Base seed. Defaults to 0.
        T (int): Monte Carlo replications. Defaults to 100.
        input (str | None): CSV path (fit).
        response (str | None): Response column name or 0-based position (fit).
        out (str | None): Report file path.
        save_paths (str | None): Directory receiving the selection path
        of each method as JSON (fit).
        fr_timeout_s (float): Wall-clock cap of the FR baseline.
        Defaults to 300.
        threads (int): Worker processes for simulate.
        example (int | None): Design number (3, 4, 5) or population
        example (1, 2).
        n (int | None): Training rows (simulate, bench).
        p (int | None): Predictors (simulate, bench).
        theta (float): Design correlation parameter. Defaults to 0.
        scale_columns (bool): Standardize columns to unit variance.
        holdout (int | None): Held-out rows per split (fit).
        splits (int): Random splits (fit). Defaults to 1.
        b (float): Example 1 loading parameter. Defaults to 1.
        beta (float): Example 1 coefficient of x1. Defaults to 2.
        eta (float): Example 2 loading parameter. Defaults to 0.5.
    """

    command: str
    methods: tuple[str, ...] = field(default = ('oga', 'fr', 'gsfrn', 'gsfr'))
    stop: str | None = None
    kn_mult: float = 5.0
    rho1: float = 1e-6
    rho2_term: float = 1e-6
    seed: int = 0
    T: int = 100
    input: str | None = None
    response: str | None = None
    out: str | None = None
    save_paths: str | None = None
    fr_timeout_s: float = 300.0
    threads: int = 1
    example: int | None = None
    n: int | None = None
    p: int | None = None
    theta: float = 0.0
    scale_columns: bool = False
    holdout: int | None = None
    splits: int = 1
    b: float = 1.0
    beta: float = 2.0
    eta: float = 0.5

    def __post_init__(self) -> None:
        object.__setattr__(self, 'methods', tuple(self.methods))

        if self.command not in COMMANDS:
            raise ConfigError(f'unknown command {self.command!r}')
        if not self.kn_mult > 0:
            raise ConfigError(f'kn_mult must be > 0, got {self.kn_mult}')
        if self.T < 1:
            raise ConfigError(f'T must be >= 1, got {self.T}')
        if self.command == 'fit' and (self.input is None or self.response is None):
            raise ConfigError('fit needs --input and --response')
        if self.command in ('simulate', 'bench') and None in (self.example, self.n, self.p):
            raise ConfigError(f'{self.command} needs --example, --n and --p')
        if self.command == 'population' and self.example not in (1, 2):
            raise ConfigError(f'population needs --example 1 or 2, got {self.example}')

        #fail on unknown names and bad designs before any work starts
        self.contenders()
        if self.command in ('simulate', 'bench'):
            self.dgp_spec()

    @staticmethod
    def from_args(args: Namespace) -> RunConfig:
        """Builds a RunConfig from parsed arguments, resolving every default."""
        values = {key: value for key, value in vars(args).items() if key in RunConfig.__dataclass_fields__ and value is not None}

        if args.command == 'fit':
            values.setdefault('methods', ('gsfr',))
            values['scale_columns'] = not getattr(args, 'no_scale', False)
        if args.command in ('simulate', 'bench'):
            values['threads'] = resolve_threads(getattr(args, 'threads', None))

        return RunConfig(**values)

    def contenders(self) -> tuple[Contender, ...]:
        rule = StopRule.parse(self.stop) if self.stop is not None else None
        return parse_contenders(list(self.methods), rule)

    def selector_config(self) -> SelectorConfig:
        return SelectorConfig(rho1 = self.rho1, kn_mult = self.kn_mult, time_limit_s = self.fr_timeout_s)

    def stop_config(self) -> StopConfig:
        return StopConfig(rho2_term = self.rho2_term)

    def dgp_spec(self) -> DgpSpec:
        return DgpSpec(Example.parse(self.example), self.n, self.p, self.theta, self.seed, scale_columns = self.scale_columns)

    def to_dict(self) -> dict:
        output = asdict(self)
        output['methods'] = list(self.methods)
        return output
