from __future__ import annotations
import logging
import numpy as np
import pandas as pd
from dataset.raw_dataset import RawDataset
from errors import ConfigError, InputError, ParseError

logger = logging.getLogger(__name__)

def resolve_response(header: list[str], response_selector: str | int) -> int:
    """Finds the position of the response column in the header.

    A selector matching a header name wins. Otherwise an integer (or
    a string of digits) is read as a 0-based column position.

    Args:
        header (list[str]): The column names from the first row.
        response_selector (str | int): A column name or position.

    Raises:
        ConfigError: No column matches the selector.

    Returns:
        The 0-based position of the response column.
    """
    selector = str(response_selector).strip()

    if selector in header:
        return header.index(selector)
    if selector.isdigit() and int(selector) < len(header):
        return int(selector)

    raise ConfigError(f'response column {selector!r} not found; available columns: {", ".join(header)}')

def ingest_csv(path: str, response_selector: str | int) -> RawDataset:
    """Reads a numeric CSV file into a RawDataset.

    The first row is the header. The response column becomes y and 
    every other column becomes a predictor, in file order. Every 
    other cell must hold a finite number written with a '.' decimal
    separator.

    Args:
        path (str): The CSV file to read (UTF-8).
        response_selector (str | int): Name or 0-based position of 
        the response column.

    Raises:
        InputError: The file is empty or has no data rows.
        ConfigError: The response column does not exist.
        ParseError: A cell is missing, non-numeric or not finite. The
        message names the file row (header is row 1) and column.

    Returns:
        The RawDataset read from the file.
    """
    try:
        table = pd.read_csv(path, header = None, dtype = str, keep_default_na = False, encoding = 'utf-8', skipinitialspace = True)
    except pd.errors.EmptyDataError:
        raise InputError(f'{path} is empty')
    except pd.errors.ParserError as error:
        raise InputError(f'{path}: {error}')

    if table.shape[0] < 2:
        raise InputError(f'{path} has a header but no data rows')

    header = [str(name).strip() for name in table.iloc[0]]
    cells = table.iloc[1:].reset_index(drop = True)
    cells.columns = range(len(header))

    response = resolve_response(header, response_selector)

    values = np.empty(cells.shape, dtype = float)
    for column in range(len(header)):
        text = cells[column].str.strip()
        numbers = pd.to_numeric(text, errors = 'coerce').to_numpy(dtype = float)
        bad = ~np.isfinite(numbers)
        if bad.any():
            row = int(np.flatnonzero(bad)[0])
            raise ParseError(row + 2, header[column], text.iloc[row])
        values[:, column] = numbers

    predictors = [column for column in range(len(header)) if column != response]
    logger.info('read %d rows and %d predictors from %s (response %s)', values.shape[0], len(predictors), path, header[response])

    return RawDataset(
        y = values[:, response],
        X = values[:, predictors],
        column_names = [header[column] for column in predictors]
    )
