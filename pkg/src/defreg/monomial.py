"""Squarefree monomial ideals and their poset of component sums.

A squarefree generator is recorded as its set of variables.  The minimal
primes of such an ideal are exactly the inclusion-minimal vertex covers of
the generator hypergraph, each read as the face prime on the covering
variables.  Face primes are closed under sums (the sum is the prime on the
union of the variables), so the closure needs no decomposition step and the
poset of sums embeds in the boolean lattice on the variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .posets import (
    DEFAULT_MAX_ELEMENTS,
    AnalysisPoset,
    IdealNode,
    RingContext,
    join_closure,
)


class ZeroIdeal(ValueError):
    """The zero ideal has no primary decomposition to analyze."""


@dataclass(frozen=True)
class FacePrime:
    """The prime generated by a subset of the variables."""

    variables: frozenset[str]

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.variables))

    @property
    def height(self) -> int:
        return len(self.variables)

    def dim_in(self, ring: RingContext) -> int:
        return ring.nvars - len(self.variables)


@dataclass(frozen=True)
class SquarefreeIdeal:
    """A nonzero squarefree monomial ideal with a minimal generating set."""

    ring: RingContext
    generators: tuple[frozenset[str], ...]

    @classmethod
    def create(
        cls, ring: RingContext, generators: Iterable[Iterable[str]]
    ) -> "SquarefreeIdeal":
        known = set(ring.var_names)
        gens: list[frozenset[str]] = []
        for g in generators:
            gset = frozenset(g)
            if not gset:
                raise ValueError("a generator must mention at least one variable")
            extra = gset - known
            if extra:
                raise ValueError(f"unknown variables {sorted(extra)}")
            gens.append(gset)
        if not gens:
            raise ZeroIdeal("no generators given")
        minimal = _inclusion_minimal(gens)
        return cls(ring, tuple(minimal))


def _inclusion_minimal(sets: Sequence[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=lambda s: (len(s), tuple(sorted(s))))
    keep: list[frozenset] = []
    for s in uniq:
        if not any(k <= s for k in keep):
            keep.append(s)
    return keep


def minimal_primes(ideal: SquarefreeIdeal) -> list[FacePrime]:
    """Minimal primes, as the inclusion-minimal covers of the generators.

    Standard cover expansion: carry the current minimal covers and branch
    every cover that misses the next generator over that generator's
    variables, pruning non-minimal results after each step.
    """
    if not ideal.generators:
        raise ZeroIdeal("the zero ideal has no minimal primes here")
    covers: list[frozenset] = [frozenset()]
    for gen in ideal.generators:
        grown: list[frozenset] = []
        for c in covers:
            if c & gen:
                grown.append(c)
            else:
                grown.extend(c | {v} for v in sorted(gen))
        covers = _inclusion_minimal(grown)
    ordered = sorted(covers, key=lambda c: (len(c), tuple(sorted(c))))
    return [FacePrime(c) for c in ordered]


def face_sum(a: FacePrime, b: FacePrime) -> FacePrime:
    """The sum of two face primes: the face prime on the union."""
    return FacePrime(a.variables | b.variables)


def build_monomial_poset(
    ideal: SquarefreeIdeal, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> AnalysisPoset:
    """Poset of all sums of the minimal primes, under reverse inclusion."""
    ring = ideal.ring

    def build_node(fp: FacePrime, node_id: str) -> IdealNode:
        return IdealNode(
            id=node_id, ideal=fp, dim=fp.dim_in(ring), height=fp.height
        )

    return join_closure(
        minimal_primes(ideal),
        sum_op=face_sum,
        contains_op=lambda a, b: a.variables >= b.variables,
        canonical_key=lambda fp: fp.key(),
        generator_key=lambda fp: (fp.height, fp.key()),
        node_builder=build_node,
        ring=ring,
        provenance="monomial",
        max_elements=max_elements,
    )
