from __future__ import annotations
import math
from json import dumps
import pandas as pd
from simbench.monte_carlo import RuntimeRow, SimReport
from simbench.real_data import SplitSummary

REPORT_SCHEMA = 'gsfr-report/1'

#result table columns, in the order the comparison tables print them
TABLE_COLUMNS = {
    'coverage_pct': 'Coverage (%)',
    'fn_pct': 'FN (%)',
    'fp_pct': 'FP (%)',
    'best_size_mean': 'Best size',
    'selected_size_mean': 'Selected size',
    'runtime_mean_s': 'Time (s)',
    'rss_mean': 'RSS',
    'mspe_mean': 'MSPE'
}

def _finite(value: object) -> object:
    """Maps NaN and infinities to None so the file stays strict JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(item) for item in value]
    return value

def envelope(command: str, config: dict, body: dict) -> dict:
    """Wraps a report body with the schema tag and the resolved config."""
    return {'schema': REPORT_SCHEMA, 'command': command, 'config': config, **body}

def write_report(report: dict, file_name: str) -> None:
    """Writes a report to a JSON file.

    The report is serialized in full before the file is opened, so a
    failure never leaves a partial file behind.

    Args:
        report (dict): The report, usually built with envelope().
        file_name (str): The file name to save in 
        (should end with .json).
    """
    text = dumps(_finite(report), indent = 2)

    with open(file_name, 'w') as file:
        file.write(text)

def summary_frame(report: SimReport) -> pd.DataFrame:
    rows = {label: [getattr(summary, key) for key in TABLE_COLUMNS] for label, summary in report.summaries.items()}
    return pd.DataFrame.from_dict(rows, orient = 'index', columns = list(TABLE_COLUMNS.values()))

def format_table(report: SimReport) -> str:
    """Renders a SimReport as a text table, one row per method."""
    frame = summary_frame(report)
    return frame.to_string(float_format = lambda value: f'{value:.4f}', na_rep = '-')

def format_runtime(rows: dict[str, RuntimeRow]) -> str:
    frame = pd.DataFrame({
        'Time (s)': [row.display() for row in rows.values()],
        'Runs': [row.runs for row in rows.values()],
        'Capped': [row.capped_runs for row in rows.values()]
    }, index = list(rows))
    return frame.to_string()

def format_splits(summaries: dict[str, SplitSummary]) -> str:
    frame = pd.DataFrame({
        'Selected size': [summary.selected_size_mean for summary in summaries.values()],
        'MSPE': [summary.mspe_mean for summary in summaries.values()],
        'Time (s)': [summary.runtime_mean_s for summary in summaries.values()]
    }, index = list(summaries))
    return frame.to_string(float_format = lambda value: f'{value:.4f}')

def format_fits(fits: dict[str, dict]) -> str:
    """Renders the fits of the fit command, one row per method."""
    frame = pd.DataFrame({
        'k_hat': [fit['k_hat'] for fit in fits.values()],
        'K': [len(fit['path']) for fit in fits.values()],
        'Selected': [', '.join(fit['selected']) for fit in fits.values()],
        'Time (s)': [fit['runtime_s'] for fit in fits.values()]
    }, index = list(fits))
    return frame.to_string(float_format = lambda value: f'{value:.4f}')

def format_scores(labels: list[str], scores: dict[str, list[float]]) -> str:
    """Renders population scores side by side, starring each column's winner.

    Args:
        labels (list[str]): The variable names, one per row.
        scores (dict[str, list[float]]): Score magnitudes per method.
    """
    columns = {}
    for method, values in scores.items():
        winner = max(range(len(values)), key = lambda i: (values[i], -i))
        columns[method] = [f'{value:.5f}' + ('*' if i == winner and value > 0 else '') for i, value in enumerate(values)]

    return pd.DataFrame(columns, index = labels).to_string()
