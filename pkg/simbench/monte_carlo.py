from __future__ import annotations
import math
import logging
import multiprocessing as mp
from dataclasses import asdict, dataclass, field
from functools import partial
from time import perf_counter
import numpy as np
from dataset.dataset import Dataset, standardize
from errors import ConfigError, ReplicationError
from selection.method import Method, StopReason
from selection.run import run_path
from selection.selection_path import SelectionPath
from selection.selector_config import SelectorConfig
from simbench.dgp import PRNG_ALGORITHM, DgpSpec, generate
from simbench.metrics import ReplicationMetrics, evaluate
from stopping.rules import select_size
from stopping.stop_config import StopConfig
from stopping.stop_decision import StopDecision, StopRule

logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class Contender:
    """Contender represents one column of a comparison: an engine plus a stop rule.

    Attributes:
        label (str): The name shown in tables.
        method (Method): The forward-selection engine.
        rule (StopRule): The model-size rule.
        full_path (bool): True to run min(n - 1, p) steps instead of 
        K_n (the GSFRn variant).
    """

    label: str
    method: Method
    rule: StopRule
    full_path: bool = False

    def selector_config(self, cfg: SelectorConfig, n: int, p: int) -> SelectorConfig:
        if self.full_path:
            return cfg.with_kn(max(1, min(n - 1, p)))
        return cfg

CONTENDERS = {
    'oga': Contender('OGA', Method.OGA, StopRule.HDBIC),
    'fr': Contender('FR', Method.FR, StopRule.BIC),
    'gsfrn': Contender('GSFRn', Method.GSFR, StopRule.RATIO, full_path = True),
    'gsfr': Contender('GSFR', Method.GSFR, StopRule.RATIO)
}

def parse_contenders(names: list[str], rule: StopRule | None = None) -> tuple[Contender, ...]:
    """Looks up contenders by name, optionally overriding their stop rule.

    Raises:
        ConfigError: A name is unknown.
    """
    contenders = []
    for name in names:
        key = name.strip().lower()
        if key not in CONTENDERS:
            raise ConfigError(f'unknown method {name!r}; expected one of {", ".join(CONTENDERS)}')
        contender = CONTENDERS[key]
        if rule is not None:
            contender = Contender(contender.label, contender.method, rule, contender.full_path)
        contenders.append(contender)

    return tuple(contenders)

def fit_and_stop(data: Dataset, contender: Contender, selector_cfg: SelectorConfig, stop_cfg: StopConfig) -> tuple[SelectionPath, StopDecision, float]:
    """Runs one contender on one dataset and times it.

    Returns:
        The path, the stop decision and the wall-clock seconds spent.
    """
    cfg = contender.selector_config(selector_cfg, data.n, data.p)

    start = perf_counter()
    path = run_path(data, contender.method, cfg)
    decision = select_size(path, data, contender.rule, stop_cfg)
    seconds = perf_counter() - start

    return path, decision, seconds

@dataclass(frozen = True)
class MethodSummary:
    """MethodSummary aggregates one contender's metrics over T replications.

    Size means are taken over the replications whose chosen model 
    covers the truth (NaN when there are none); the other means are 
    over all replications. Percentages are in [0, 100].
    """

    coverage_pct: float
    fn_pct: float
    fp_pct: float
    best_size_mean: float
    selected_size_mean: float
    runtime_mean_s: float
    rss_mean: float
    mspe_mean: float
    screening_pct: float
    agreement_pct: float
    T: int
    capped_runs: int = 0

    @staticmethod
    def of(metrics: list[ReplicationMetrics], capped_runs: int = 0) -> MethodSummary:
        covered = [m for m in metrics if m.covered]

        def mean(values: list[float]) -> float:
            return float(np.mean(values)) if values else math.nan

        return MethodSummary(
            coverage_pct = 100 * len(covered) / len(metrics),
            fn_pct = 100 * mean([m.fn for m in metrics]),
            fp_pct = 100 * mean([m.fp for m in metrics]),
            best_size_mean = mean([m.best_size for m in covered]),
            selected_size_mean = mean([m.selected_size for m in covered]),
            runtime_mean_s = mean([m.runtime_s for m in metrics]),
            rss_mean = mean([m.rss for m in metrics]),
            mspe_mean = mean([m.mspe for m in metrics]),
            screening_pct = 100 * mean([float(m.screened) for m in metrics]),
            agreement_pct = 100 * len([m for m in covered if m.agrees]) / len(covered) if covered else math.nan,
            T = len(metrics),
            capped_runs = capped_runs
        )

@dataclass(frozen = True)
class SimReport:
    """SimReport holds the outcome of a Monte Carlo run.

    Attributes:
        config (dict): The fully resolved run configuration.
        summaries (dict[str, MethodSummary]): Aggregates per contender 
        label, in contender order.
        replications (dict[str, list[ReplicationMetrics]]): The raw 
        per-replication metrics per contender label.
    """

    config: dict
    summaries: dict[str, MethodSummary]
    replications: dict[str, list[ReplicationMetrics]] = field(repr = False)

    def to_dict(self, include_replications: bool = False) -> dict:
        output = {
            'summaries': {label: asdict(summary) for label, summary in self.summaries.items()}
        }
        if include_replications:
            output['replications'] = {label: [m.to_dict() for m in metrics] for label, metrics in self.replications.items()}
        return output

@dataclass(frozen = True)
class ReplicationTask:
    """Everything a worker process needs to run one replication."""

    spec: DgpSpec
    contenders: tuple[Contender, ...]
    selector_cfg: SelectorConfig
    stop_cfg: StopConfig

def run_replication(task: ReplicationTask, index: int) -> list[tuple[ReplicationMetrics, bool]]:
    """Generates, fits and scores replication number index.

    Raises:
        ReplicationError: Anything failed; the error carries the 
        replication index and base seed for replay.

    Returns:
        One (metrics, capped) pair per contender.
    """
    spec = task.spec.replication(index)

    try:
        raw, truth = generate(spec)
        data = standardize(raw, spec.scale_columns)

        results = []
        for contender in task.contenders:
            path, decision, seconds = fit_and_stop(data, contender, task.selector_cfg, task.stop_cfg)
            results.append((evaluate(path, decision, truth, data, seconds), path.stop_reason is StopReason.TIME_LIMIT))
        return results
    except Exception as error:
        raise ReplicationError(index, task.spec.seed, f'{type(error).__name__}: {error}') from error

def resolve_kn(spec: DgpSpec, cfg: SelectorConfig) -> int:
    return cfg.budget(spec.n, spec.p)[0]

def run_monte_carlo(spec: DgpSpec, contenders: tuple[Contender, ...], T: int, base_seed: int,
                    selector_cfg: SelectorConfig | None = None, stop_cfg: StopConfig | None = None, threads: int = 1) -> SimReport:
    """Runs T seeded replications of a design for every contender.

    Replication r draws from the substream (base_seed, r), so any 
    replication can be replayed alone. Replications run in a process
    pool when threads > 1; results are reduced in replication order.

    Args:
        spec (DgpSpec): The design (its seed and stream are replaced).
        contenders (tuple[Contender, ...]): The methods to compare.
        T (int): The number of replications (>= 1).
        base_seed (int): The base seed.
        selector_cfg (SelectorConfig, optional): Shared tuning.
        stop_cfg (StopConfig, optional): Ratio rule adjustment.
        threads (int, optional): Worker processes. Defaults to 1.

    Raises:
        ConfigError: T < 1 or no contenders.
        ReplicationError: A replication failed.

    Returns:
        The SimReport.
    """
    if T < 1:
        raise ConfigError(f'T must be >= 1, got {T}')
    if not contenders:
        raise ConfigError('at least one method is needed')

    selector_cfg = selector_cfg or SelectorConfig()
    stop_cfg = stop_cfg or StopConfig()
    spec = DgpSpec(spec.example, spec.n, spec.p, spec.theta, base_seed, 0, spec.q, spec.scale_columns)
    task = ReplicationTask(spec, tuple(contenders), selector_cfg, stop_cfg)
    kn = resolve_kn(spec, selector_cfg)

    logger.info('example %d, (n, p) = (%d, %d), theta = %g, K_n = %d, T = %d', spec.example.value, spec.n, spec.p, spec.theta, kn, T)

    outcomes = []
    if threads > 1 and T > 1:
        with mp.Pool(min(threads, T)) as pool:
            for index, outcome in enumerate(pool.imap(partial(run_replication, task), range(T))):
                outcomes.append(outcome)
                logger.info(f'{index + 1}/{T} replications compiled for example {spec.example.value}')
    else:
        for index in range(T):
            outcomes.append(run_replication(task, index))
            logger.info(f'{index + 1}/{T} replications compiled for example {spec.example.value}')

    replications = {}
    summaries = {}
    for position, contender in enumerate(contenders):
        metrics = [outcome[position][0] for outcome in outcomes]
        capped = sum(outcome[position][1] for outcome in outcomes)
        replications[contender.label] = metrics
        summaries[contender.label] = MethodSummary.of(metrics, capped)

    config = {
        'example': spec.example.value,
        'n': spec.n,
        'p': spec.p,
        'theta': spec.theta,
        'q': spec.support_size(),
        'scale_columns': spec.scale_columns,
        'T': T,
        'base_seed': base_seed,
        'prng': PRNG_ALGORITHM,
        'numpy_version': np.__version__,
        'kn': kn,
        'kn_mult': selector_cfg.kn_mult,
        'rho1': selector_cfg.rho1,
        'rho2_term': stop_cfg.rho2_term,
        'fr_timeout_s': selector_cfg.time_limit_s,
        'methods': [{'label': c.label, 'method': c.method.name, 'stop': c.rule.name.lower(), 'full_path': c.full_path} for c in contenders]
    }

    return SimReport(config, summaries, replications)

@dataclass(frozen = True)
class RuntimeRow:
    """RuntimeRow holds the timing of one contender.

    Attributes:
        mean_s (float): Mean wall-clock seconds per fit and stop.
        runs (int): The number of timed runs.
        capped_runs (int): Runs that hit the wall-clock cap.
        cap_s (float | None): The cap in seconds.
    """

    mean_s: float
    runs: int
    capped_runs: int
    cap_s: float | None

    def display(self) -> str:
        if self.capped_runs and self.cap_s is not None:
            return f'> {self.cap_s:g}'
        return f'{self.mean_s:.4f}'

def bench_runtime(spec: DgpSpec, contenders: tuple[Contender, ...], T: int,
                  selector_cfg: SelectorConfig | None = None, stop_cfg: StopConfig | None = None) -> dict[str, RuntimeRow]:
    """Times every contender on T replications, one process, in sequence.

    Args:
        spec (DgpSpec): The design; replication r uses stream r.
        contenders (tuple[Contender, ...]): The methods to time.
        T (int): The number of replications (>= 1).
        selector_cfg (SelectorConfig, optional): Shared tuning; its 
        time_limit_s caps the FR baseline.
        stop_cfg (StopConfig, optional): Ratio rule adjustment.

    Raises:
        ConfigError: T < 1.

    Returns:
        A RuntimeRow per contender label.
    """
    if T < 1:
        raise ConfigError(f'T must be >= 1, got {T}')

    selector_cfg = selector_cfg or SelectorConfig()
    stop_cfg = stop_cfg or StopConfig()
    seconds = {contender.label: [] for contender in contenders}
    capped = {contender.label: 0 for contender in contenders}

    for index in range(T):
        raw, _ = generate(spec.replication(index))
        data = standardize(raw, spec.scale_columns)

        for contender in contenders:
            path, _, elapsed = fit_and_stop(data, contender, selector_cfg, stop_cfg)
            seconds[contender.label].append(elapsed)
            capped[contender.label] += path.stop_reason is StopReason.TIME_LIMIT

        logger.info(f'{index + 1}/{T} timing runs finished')

    cap = selector_cfg.time_limit_s
    return {label: RuntimeRow(float(np.mean(values)), len(values), capped[label], cap) for label, values in seconds.items()}
