from __future__ import annotations
import os
import sys
import logging
import argparse
from json import dumps
from dataclasses import asdict
import numpy as np
from dataset.csv_reader import ingest_csv
from dataset.dataset import Dataset, standardize
from dataset.support_set import SupportSet
from errors import GsfrError, InputError
from population.examples import example1_model, example2_model
from population.population_model import pop_path, pop_scores
from run_config import RunConfig
from selection.method import Method
from selection.refit import refit_ols
from selection.selection_path import SelectionPath
from simbench.monte_carlo import Contender, bench_runtime, fit_and_stop, resolve_kn, run_monte_carlo
from simbench.real_data import run_real_data_splits
from simbench.report import envelope, format_fits, format_runtime, format_scores, format_splits, format_table, write_report
from stopping.ratio import delta_sequence
from stopping.stop_decision import StopDecision

logger = logging.getLogger('gsfr')

def describe_fit(data: Dataset, contender: Contender, path: SelectionPath, decision: StopDecision, runtime_s: float, cfg: RunConfig) -> dict:
    """Collects what the fit command reports for one method."""
    model = refit_ols(data, decision.model(path))

    try:
        deltas = [float(delta) for delta in delta_sequence(path, cfg.stop_config())]
    except InputError:
        deltas = []

    return {
        'method': contender.method.name,
        'stop': decision.rule.name.lower(),
        'k_hat': decision.k_hat,
        'selected': [data.label(j) for j in decision.model(path)],
        'selected_indices': SupportSet.of(decision.model(path)).check(data.p).one_based(),
        'coefficients': {data.label(j): float(value) for j, value in zip(model.support, model.coef)},
        'intercept': model.intercept,
        'rss': model.rss,
        'path': [data.label(j) for j in path.selected],
        'sigma2': list(path.sigma2),
        'deltas': deltas,
        'criterion': list(decision.criterion),
        'stop_reason': path.stop_reason.name,
        'kn': path.kn,
        'warnings': list(path.warnings),
        'runtime_s': runtime_s
    }

def cmd_fit(cfg: RunConfig) -> dict:
    """Selects, stops and refits on a CSV file, optionally scoring random splits."""
    raw = ingest_csv(cfg.input, cfg.response)
    data = standardize(raw, cfg.scale_columns)
    contenders = cfg.contenders()

    fits = {}
    for contender in contenders:
        path, decision, runtime_s = fit_and_stop(data, contender, cfg.selector_config(), cfg.stop_config())
        fits[contender.label] = describe_fit(data, contender, path, decision, runtime_s, cfg)
        if cfg.save_paths is not None:
            path.save(os.path.join(cfg.save_paths, f'{contender.label}.path.json'))
        logger.info('%s selected %s', contender.label, ', '.join(fits[contender.label]['selected']))

    body = {'n': raw.n, 'p': raw.p, 'fits': fits}
    print(format_fits(fits))

    if cfg.holdout is not None:
        summaries = run_real_data_splits(raw, contenders, cfg.holdout, cfg.splits, cfg.seed,
                                         cfg.selector_config(), cfg.stop_config(), cfg.scale_columns)
        body['splits'] = {label: asdict(summary) for label, summary in summaries.items()}
        print(format_splits(summaries))

    return envelope('fit', cfg.to_dict(), body)

def cmd_simulate(cfg: RunConfig) -> dict:
    """Runs the Monte Carlo comparison of a simulation design."""
    report = run_monte_carlo(cfg.dgp_spec(), cfg.contenders(), cfg.T, cfg.seed,
                             cfg.selector_config(), cfg.stop_config(), cfg.threads)

    config = report.config
    print(f'example {config["example"]}, (n, p) = ({config["n"]}, {config["p"]}), theta = {config["theta"]:g}, '
          f'K_n = {config["kn"]}, T = {config["T"]}, seed = {config["base_seed"]}')
    print(format_table(report))

    return envelope('simulate', {**cfg.to_dict(), **config}, report.to_dict(include_replications = True))

def cmd_bench(cfg: RunConfig) -> dict:
    """Times every method on the replications of a simulation design."""
    spec = cfg.dgp_spec()
    rows = bench_runtime(spec, cfg.contenders(), cfg.T, cfg.selector_config(), cfg.stop_config())

    print(format_runtime(rows))

    return envelope('bench', {**cfg.to_dict(), 'kn': resolve_kn(spec, cfg.selector_config())},
                    {'runtime': {label: {**asdict(row), 'display': row.display()} for label, row in rows.items()}})

def cmd_population(cfg: RunConfig) -> dict:
    """Prints the population criterion of the first two iterations for OGA and GSFR."""
    if cfg.example == 1:
        model = example1_model(cfg.b, cfg.beta)
    else:
        model = example2_model(cfg.eta)

    labels = [f'x{i + 1}' for i in range(model.p)]
    iterations = [{}, {}]
    paths = {}

    for method in (Method.OGA, Method.GSFR):
        first = np.abs(pop_scores(model, [], method))
        winner = int(np.argmax(first))
        second = np.abs(pop_scores(model, [winner], method))

        iterations[0][method.name] = [float(value) for value in first]
        iterations[1][method.name] = [float(value) for value in second]
        paths[method.name] = [labels[j] for j in pop_path(model, model.p, method)]

    for number, scores in enumerate(iterations, 1):
        print(f'iteration {number}')
        print(format_scores(labels, scores))
    for method, path in paths.items():
        print(f'{method} path: {", ".join(path)}')

    return envelope('population', cfg.to_dict(), {'iterations': iterations, 'paths': paths})

COMMANDS = {
    'fit': cmd_fit,
    'simulate': cmd_simulate,
    'bench': cmd_bench,
    'population': cmd_population
}

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description = 'Gram-Schmidt forward regression: fit, simulate and compare')
    parser.add_argument('--verbose', action = 'store_true', help = 'more logging')
    commands = parser.add_subparsers(dest = 'command', required = True)

    tuning = argparse.ArgumentParser(add_help = False)
    tuning.add_argument('--methods', '--method', nargs = '+', help = 'oga, fr, gsfrn and/or gsfr')
    tuning.add_argument('--stop', help = 'ratio, hdbic, bic or none (overrides each method\'s own rule)')
    tuning.add_argument('--kn-mult', type = float, help = 'multiplier of (n / log p) ** 0.5 for K_n (default 5)')
    tuning.add_argument('--rho1', type = float, help = 'GSFR denominator adjustment (default 1e-6)')
    tuning.add_argument('--rho2', dest = 'rho2_term', type = float, help = 'ratio rule adjustment (default 1e-6)')
    tuning.add_argument('--fr-timeout', dest = 'fr_timeout_s', type = float, help = 'wall-clock cap of FR in seconds (default 300)')
    tuning.add_argument('--seed', type = int, help = 'base seed (default 0)')
    tuning.add_argument('--out', help = 'JSON report file')

    fit = commands.add_parser('fit', parents = [tuning], help = 'select variables on a CSV file')
    fit.add_argument('--input', required = True, help = 'CSV file with a header row')
    fit.add_argument('--response', required = True, help = 'response column name or 0-based position')
    fit.add_argument('--holdout', type = int, help = 'rows held out per random split')
    fit.add_argument('--splits', type = int, help = 'number of random splits (default 1)')
    fit.add_argument('--no-scale', action = 'store_true', help = 'center columns without scaling')
    fit.add_argument('--save-paths', help = 'directory receiving one <method>.path.json per method')

    design = argparse.ArgumentParser(add_help = False)
    design.add_argument('--example', type = int, required = True, help = 'simulation design: 3, 4 or 5')
    design.add_argument('--n', type = int, required = True, help = 'training rows')
    design.add_argument('--p', type = int, required = True, help = 'predictors')
    design.add_argument('--theta', type = float, help = 'design correlation parameter (default 0)')
    design.add_argument('--T', type = int, help = 'replications (default 100)')
    design.add_argument('--scale-columns', action = 'store_true', default = None, help = 'scale simulated columns to unit variance')
    design.add_argument('--threads', type = int, help = 'worker processes (default $GSFR_THREADS or every core)')

    commands.add_parser('simulate', parents = [tuning, design], help = 'run a Monte Carlo comparison')
    commands.add_parser('bench', parents = [tuning, design], help = 'time every method')

    population = commands.add_parser('population', help = 'print population criterion tables')
    population.add_argument('--example', type = int, required = True, choices = (1, 2), help = 'population example: 1 or 2')
    population.add_argument('--b', type = float, help = 'example 1 loading parameter (default 1)')
    population.add_argument('--beta', type = float, help = 'example 1 coefficient of x1 (default 2)')
    population.add_argument('--eta', type = float, help = 'example 2 loading parameter (default 0.5)')
    population.add_argument('--out', help = 'JSON report file')

    return parser

def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.verbose:
        logging.basicConfig(format = '%(asctime)s %(levelname)s %(message)s', level = logging.DEBUG)
    else:
        logging.basicConfig(format = '%(asctime)s %(levelname)s %(message)s', level = logging.INFO)

    try:
        cfg = RunConfig.from_args(args)
        logger.info('config: %s', dumps(cfg.to_dict()))

        report = COMMANDS[cfg.command](cfg)

        if cfg.out is not None:
            write_report(report, cfg.out)
            logger.info('report written to %s', cfg.out)
    except GsfrError as error:
        logger.error(str(error))
        return error.exit_code
    except OSError as error:
        logger.error(str(error))
        return InputError.exit_code

    return 0

if __name__ == '__main__':
    sys.exit(main())
