from __future__ import annotations

class GsfrError(Exception):
    """GsfrError is the base of every error raised by this project.

    Attributes:
        exit_code (int): The process exit code the command line uses
        when this error ends a run.
    """
    exit_code = 1

class ConfigError(GsfrError, ValueError):
    """ConfigError represents an invalid parameter or selector."""
    exit_code = 2

class InputError(GsfrError, ValueError):
    """InputError represents data that cannot be used as given."""
    exit_code = 3

class ParseError(InputError):
    """ParseError represents a malformed cell in an input file.

    Attributes:
        row (int): The file line of the bad cell (the header is row 1).
        column (str): The name of the column holding the bad cell.
    """

    def __init__(self, row: int, column: str, value: str):
        super(ParseError, self).__init__(f'row {row}, column {column}: cannot read {value!r} as a finite number')

        self.row = row
        self.column = column

class RankDeficientError(InputError):
    """RankDeficientError is raised when a refit design is numerically singular.

    Attributes:
        columns (list[int]): The 0-based indices of the columns that 
        are (near) linear combinations of the others.
    """

    def __init__(self, columns: list[int]):
        super(RankDeficientError, self).__init__(
            'design is rank deficient; offending columns (1-based): '
            + ', '.join(str(column + 1) for column in columns))

        self.columns = list(columns)

class PathTooShortError(InputError):
    """PathTooShortError is raised when no ratio can be formed from a path."""

class InternalError(GsfrError, RuntimeError):
    """InternalError represents a broken invariant inside the library."""
    exit_code = 4

class ReplicationError(GsfrError):
    """ReplicationError wraps a failure inside one Monte Carlo replication.

    The replication index and seed are kept so that the failing 
    replication can be replayed on its own.

    Attributes:
        index (int): The replication index.
        seed (int): The base seed of the run.
        reason (str): The message of the original error.
    """
    exit_code = 4

    def __init__(self, index: int, seed: int, reason: str):
        super(ReplicationError, self).__init__(index, seed, reason)

        self.index = index
        self.seed = seed
        self.reason = reason

    def __str__(self) -> str:
        return f'replication {self.index} (base seed {self.seed}, stream {self.index}) failed: {self.reason}'
