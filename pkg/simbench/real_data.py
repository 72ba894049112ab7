from __future__ import annotations
import logging
from dataclasses import dataclass
import numpy as np
from dataset.dataset import standardize
from dataset.raw_dataset import RawDataset
from errors import ConfigError
from selection.refit import predict, refit_ols
from selection.selector_config import SelectorConfig
from simbench.monte_carlo import Contender, fit_and_stop
from stopping.stop_config import StopConfig

logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class SplitSummary:
    """SplitSummary averages one contender over random train/test splits.

    Attributes:
        selected_size_mean (float): Mean chosen model size.
        mspe_mean (float): Mean over splits of the held-out mean 
        squared prediction error.
        runtime_mean_s (float): Mean seconds of selection plus stopping.
        splits (int): The number of splits.
    """

    selected_size_mean: float
    mspe_mean: float
    runtime_mean_s: float
    splits: int

def split_rows(n: int, holdout: int, seed: int, split: int) -> tuple[np.ndarray, np.ndarray]:
    """Draws a uniform random holdout of rows without replacement.

    Split s draws from the substream (seed, s).

    Returns:
        The sorted training rows and the sorted held-out rows.
    """
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy = seed, spawn_key = (split,))))
    test = np.sort(rng.choice(n, size = holdout, replace = False))
    train = np.setdiff1d(np.arange(n), test)

    return train, test

def run_real_data_splits(raw: RawDataset, contenders: tuple[Contender, ...], holdout: int, splits: int, seed: int = 0,
                         selector_cfg: SelectorConfig | None = None, stop_cfg: StopConfig | None = None,
                         scale_columns: bool = True) -> dict[str, SplitSummary]:
    """Scores contenders on repeated random train/test splits of real data.

    Each split standardizes with training statistics only, selects 
    and stops on the training rows, refits the chosen model and 
    predicts the held-out rows.

    Args:
        raw (RawDataset): The full data.
        contenders (tuple[Contender, ...]): The methods to compare.
        holdout (int): Rows held out per split (1 <= holdout <= n - 2).
        splits (int): The number of splits (>= 1).
        seed (int, optional): The base seed. Defaults to 0.
        selector_cfg (SelectorConfig, optional): Shared tuning.
        stop_cfg (StopConfig, optional): Ratio rule adjustment.
        scale_columns (bool, optional): True to scale columns to unit
        variance. Defaults to True.

    Raises:
        ConfigError: holdout or splits out of range.

    Returns:
        A SplitSummary per contender label.
    """
    if not 1 <= holdout <= raw.n - 2:
        raise ConfigError(f'holdout must be in [1, {raw.n - 2}], got {holdout}')
    if splits < 1:
        raise ConfigError(f'splits must be >= 1, got {splits}')

    selector_cfg = selector_cfg or SelectorConfig()
    stop_cfg = stop_cfg or StopConfig()
    sizes = {contender.label: [] for contender in contenders}
    errors = {contender.label: [] for contender in contenders}
    seconds = {contender.label: [] for contender in contenders}

    for split in range(splits):
        train, test = split_rows(raw.n, holdout, seed, split)
        data = standardize(raw.take(train), scale_columns)

        for contender in contenders:
            path, decision, elapsed = fit_and_stop(data, contender, selector_cfg, stop_cfg)
            model = refit_ols(data, decision.model(path), allow_rank_deficient = True)
            residuals = [raw.y[row] - predict(model, raw.X[row]) for row in test]

            sizes[contender.label].append(decision.k_hat)
            errors[contender.label].append(float(np.mean(np.square(residuals))))
            seconds[contender.label].append(elapsed)

        if (split + 1) % 100 == 0 or split + 1 == splits:
            logger.info(f'{split + 1}/{splits} splits compiled')

    return {
        label: SplitSummary(float(np.mean(sizes[label])), float(np.mean(errors[label])), float(np.mean(seconds[label])), splits)
        for label in sizes
    }
