"""Binomial edge ideals handled through their combinatorics.

The ideal of a graph G on vertices 1..n lives in a polynomial ring with one
pair of variables per vertex.  Every prime this package touches is
determined by a set of killed vertices together with the partition of the
remaining vertices into cliques: such a prime collects both variables over
each killed vertex and, for each block, the 2x2 minors of the generic
2-row matrix on the block's columns.  A block with c vertices contributes
height c - 1, so

    height = 2 * #killed + sum(block size - 1)
    dim    = (n - #killed) + #blocks

and the two are complementary in the 2n ambient variables.

The minimal primes of the graph itself come from cut sets: keep S exactly
when every vertex of S raises the component count of what is left.  A sum
of two primes kills the union of the killed sets and overlays the residual
cliques; the overlay is prime precisely when each of its connected
components is a complete graph, and otherwise decomposes by the same cut
set rule applied to the overlay graph.
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


class AlreadyPrime(ValueError):
    """decompose() was handed an overlay that is already prime."""


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..n."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) out of range or misordered")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def complete_bipartite(cls, left: int, right: int) -> "Graph":
        n = left + right
        return cls.from_edges(
            n, ((i, j) for i in range(1, left + 1) for j in range(left + 1, n + 1))
        )


def ring_for(graph: Graph) -> RingContext:
    """The ambient ring: x_i and y_i for each vertex, 2n variables in all."""
    names = tuple(f"x_{i}" for i in range(1, graph.n + 1)) + tuple(
        f"y_{i}" for i in range(1, graph.n + 1)
    )
    return RingContext(names)


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    return tuple(
        sorted((frozenset(b) for b in blocks), key=lambda b: tuple(sorted(b)))
    )


@dataclass(frozen=True)
class CliquePrime:
    """A prime: killed vertices plus a partition of the rest into cliques."""

    n: int
    killed: frozenset[int]
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "killed", frozenset(self.killed))
        object.__setattr__(self, "blocks", _canonical_blocks(self.blocks))
        rest = set(range(1, self.n + 1)) - self.killed
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if b & seen:
                raise ValueError("blocks are not disjoint")
            seen |= b
        if seen != rest:
            raise ValueError("blocks must partition the unkilled vertices")
        assert self.dim + self.height == 2 * self.n

    @property
    def height(self) -> int:
        return 2 * len(self.killed) + sum(len(b) - 1 for b in self.blocks)

    @property
    def dim(self) -> int:
        return (self.n - len(self.killed)) + len(self.blocks)

    def key(self) -> tuple:
        return (
            tuple(sorted(self.killed)),
            tuple(tuple(sorted(b)) for b in self.blocks),
        )


@dataclass(frozen=True)
class CliqueUnionIdeal:
    """A sum of primes: killed vertices plus a covering family of cliques.

    Unlike the blocks of a prime, the cliques may overlap; canonicalization
    only drops cliques contained in others, so equality means equality of
    the generated ideals.
    """

    n: int
    killed: frozenset[int]
    cliques: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        killed = frozenset(self.killed)
        object.__setattr__(self, "killed", killed)
        cleaned = sorted(
            {frozenset(c) for c in self.cliques}, key=len, reverse=True
        )
        kept: list[frozenset[int]] = []
        for c in cleaned:
            if not c:
                raise ValueError("empty clique")
            if c & killed:
                raise ValueError("cliques must avoid killed vertices")
            if not any(c <= k for k in kept):
                kept.append(c)
        object.__setattr__(
            self, "cliques", _canonical_blocks(kept)
        )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _vertex_set(mask: int) -> frozenset[int]:
    return frozenset(b + 1 for b in _bits(mask))


def _adjacency(graph: Graph) -> list[int]:
    adj = [0] * graph.n
    for u, v in graph.edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return adj


def _mask_components(adj: Sequence[int], present: int) -> tuple[int, ...]:
    comps = []
    rest = present
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= adj[v]
            grown &= present & ~comp
            comp |= grown
            frontier = grown
        comps.append(comp)
        rest &= ~comp
    return tuple(comps)


def _prime_from_masks(n: int, kill_mask: int, comps: Iterable[int]) -> CliquePrime:
    return CliquePrime(
        n, _vertex_set(kill_mask), tuple(_vertex_set(c) for c in comps)
    )


def _admissible_primes(
    n: int, base_kill: int, adj: Sequence[int], present: int
) -> list[CliquePrime]:
    """All primes from cut sets T of the graph (adj, present), over base_kill.

    T qualifies when removing any single vertex of T gives strictly fewer
    components than removing all of T; the empty set always qualifies.
    """
    cache: dict[int, tuple[int, ...]] = {}

    def components(mask: int) -> tuple[int, ...]:
        got = cache.get(mask)
        if got is None:
            got = _mask_components(adj, mask)
            cache[mask] = got
        return got

    found = []
    t = present
    while True:
        rest = present & ~t
        base = len(components(rest))
        if all(len(components(rest | (1 << i))) < base for i in _bits(t)):
            found.append(_prime_from_masks(n, base_kill | t, components(rest)))
        if t == 0:
            break
        t = (t - 1) & present
    found.sort(key=lambda p: (p.height, p.key()))
    return found


def minimal_primes_graph(graph: Graph) -> list[CliquePrime]:
    """Minimal primes of the binomial edge ideal of the graph."""
    full = (1 << graph.n) - 1
    return _admissible_primes(graph.n, 0, _adjacency(graph), full)


def contains(a: CliquePrime, b: CliquePrime) -> bool:
    """Whether ideal(a) contains ideal(b).

    Both variables of a killed vertex of b must be killed in a, and any two
    surviving vertices sharing a block of b must share a block of a;
    equivalently each block of b, less a's killed set, fits in one block.
    """
    if a.n != b.n:
        raise ValueError("primes live over different vertex counts")
    if not b.killed <= a.killed:
        return False
    owner: dict[int, frozenset[int]] = {}
    for blk in a.blocks:
        for v in blk:
            owner[v] = blk
    for blk in b.blocks:
        rest = blk - a.killed
        if len(rest) <= 1:
            continue
        it = iter(rest)
        home = owner[next(it)]
        if not all(v in home for v in it):
            return False
    return True


def sum_ideals(a: CliquePrime, b: CliquePrime) -> CliqueUnionIdeal:
    """The sum of two primes: union of the kills, overlay of the blocks."""
    if a.n != b.n:
        raise ValueError("primes live over different vertex counts")
    killed = a.killed | b.killed
    residual = (blk - killed for blk in a.blocks + b.blocks)
    return CliqueUnionIdeal(a.n, killed, tuple(c for c in residual if c))


def _overlay(c: CliqueUnionIdeal) -> tuple[list[int], int]:
    adj = [0] * c.n
    for clique in c.cliques:
        cmask = _mask(clique)
        for v in clique:
            adj[v - 1] |= cmask & ~(1 << (v - 1))
    present = ((1 << c.n) - 1) & ~_mask(c.killed)
    return adj, present


def is_prime(c: CliqueUnionIdeal) -> bool:
    """Prime exactly when every overlay component is a complete graph."""
    adj, present = _overlay(c)
    for comp in _mask_components(adj, present):
        for v in _bits(comp):
            if adj[v] & comp != comp ^ (1 << v):
                return False
    return True


def as_prime(c: CliqueUnionIdeal) -> CliquePrime:
    """Canonical prime form of a prime overlay: components become blocks."""
    if not is_prime(c):
        raise ValueError("the overlay is not prime")
    adj, present = _overlay(c)
    return _prime_from_masks(c.n, _mask(c.killed), _mask_components(adj, present))


def decompose(c: CliqueUnionIdeal) -> list[CliquePrime]:
    """Minimal primes of a non-prime overlay, by the cut set rule on it."""
    if is_prime(c):
        raise AlreadyPrime("decompose() expects a non-prime overlay")
    adj, present = _overlay(c)
    return _admissible_primes(c.n, _mask(c.killed), adj, present)


def build_Q_poset(
    graph: Graph, *, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> AnalysisPoset:
    """Poset of iterated sums of the minimal primes, under reverse inclusion.

    Every accumulated prime is summed with every other; non-prime sums are
    decomposed and their minimal primes join the pool, so the result is
    closed under the whole sum-then-decompose loop.
    """
    ring = ring_for(graph)

    def build_node(cp: CliquePrime, node_id: str) -> IdealNode:
        return IdealNode(id=node_id, ideal=cp, dim=cp.dim, height=cp.height)

    return join_closure(
        minimal_primes_graph(graph),
        sum_op=sum_ideals,
        is_prime_op=is_prime,
        to_prime_op=as_prime,
        decompose_op=decompose,
        contains_op=contains,
        canonical_key=lambda cp: cp.key(),
        generator_key=lambda cp: (cp.height, cp.key()),
        node_builder=build_node,
        ring=ring,
        provenance="binomial-edge",
        max_elements=max_elements,
    )
