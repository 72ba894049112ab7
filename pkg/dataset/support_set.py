from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Iterator
from errors import InputError

@dataclass(frozen = True)
class SupportSet:
    """SupportSet represents a set of column indices.

    Indices are stored 0-based and sorted. Reports convert them to 
    1-based positions with one_based().

    Attributes:
        indices (tuple[int, ...]): Sorted, distinct, 0-based indices.
    """

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        indices = tuple(sorted(int(index) for index in self.indices))

        if len(set(indices)) != len(indices):
            raise InputError(f'duplicate indices in support set: {indices}')
        if indices and indices[0] < 0:
            raise InputError(f'negative index in support set: {indices[0]}')

        object.__setattr__(self, 'indices', indices)

    @staticmethod
    def of(indices: Iterable[int]) -> SupportSet:
        return SupportSet(tuple(indices))

    def check(self, p: int) -> SupportSet:
        """Ensures every index addresses one of p columns.

        Raises:
            InputError: An index is p or larger.

        Returns:
            This SupportSet object.
        """
        if self.indices and self.indices[-1] >= p:
            raise InputError(f'index {self.indices[-1]} out of range for {p} columns')
        return self

    def one_based(self) -> list[int]:
        return [index + 1 for index in self.indices]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: object) -> bool:
        return index in self.indices

    def issubset(self, other: Iterable[int]) -> bool:
        return set(self.indices).issubset(other)
