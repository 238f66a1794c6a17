"""The value algebra used to fold invariants along a filtration.

A regularity-like invariant of a graded module takes values in Z together
with -inf (the value of the zero module), and on a filtered module it is
bounded by the fold of its values on the successive quotients, which for a
single grading is a maximum.  Invariants graded by a group of rank two or
more take finite subsets of a declared universe as values instead, and the
same fold becomes an intersection.  Only the value algebra lives here; the
bound engine folds the rank-one instance.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Union


class MixedRanks(ValueError):
    """Raised when a fold mixes values of different ranks."""


@functools.total_ordering
class NegativeInfinity:
    """Bottom element of Z with -inf adjoined; compares below every integer."""

    _instance = None

    def __new__(cls) -> "NegativeInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("NegativeInfinity")

    def __repr__(self) -> str:
        return "-inf"


NEG_INF = NegativeInfinity()

ExtendedInt = Union[int, NegativeInfinity]


@dataclass(frozen=True)
class UltrametricValue:
    """A single invariant value: extended integer at rank 1, subset above."""

    rank: int
    payload: Union[ExtendedInt, FrozenSet]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.rank == 1:
            if not (self.payload is NEG_INF or isinstance(self.payload, int)):
                raise TypeError("rank-1 payload must be an integer or -inf")
        elif not isinstance(self.payload, frozenset):
            raise TypeError("higher-rank payload must be a frozenset")


def zero_value(rank: int, universe: Iterable | None = None) -> UltrametricValue:
    """Value attached to the zero module: -inf at rank 1, the full universe above."""
    if rank == 1:
        return UltrametricValue(1, NEG_INF)
    if universe is None:
        raise ValueError("a rank >= 2 zero value needs an explicit universe")
    return UltrametricValue(rank, frozenset(universe))


def filtration_fold(layers: Sequence[UltrametricValue]) -> UltrametricValue:
    """Bound guaranteed across a filtration: max at rank 1, intersection above."""
    if not layers:
        raise ValueError("cannot fold an empty filtration")
    ranks = {v.rank for v in layers}
    if len(ranks) != 1:
        raise MixedRanks(f"cannot fold values of ranks {sorted(ranks)}")
    r = ranks.pop()
    if r == 1:
        return UltrametricValue(1, max(v.payload for v in layers))
    payloads = [v.payload for v in layers]
    return UltrametricValue(r, frozenset.intersection(*payloads))
