"""Finite posets of ideal components ordered by reverse inclusion.

Throughout, p <= q means ideal(p) contains ideal(q).  Under this convention
the minimal primes are the maximal elements of the poset, sitting just below
a virtual top element that is never stored; all homology happens on the open
intervals (p, top), which are simply the strict up-sets.

Sums of components are accumulated by a worklist closure: every pair of
known primes is summed, a sum that fails the primality test is replaced by
its minimal primes, and the process repeats on the enlarged set until a
fixpoint.  Labels p_1, p_2, ... follow first-appearance order, with the
generators fed in one at a time so that sums of early generators are
labelled before later generators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .complexes import DEFAULT_MAX_FACES, FaceBudgetExceeded, SimplicialComplex

DEFAULT_MAX_ELEMENTS = 10_000


class ClosureBudgetExceeded(RuntimeError):
    """Raised when the sum closure would exceed the element budget."""


class MissingDecomposer(RuntimeError):
    """A non-prime sum arose but no decomposition routine was supplied."""


class UnknownElement(KeyError):
    """Lookup of a poset element id that does not exist."""


@dataclass(frozen=True)
class RingContext:
    """The ambient standard-graded polynomial ring, described by its variables."""

    var_names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be unique")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def twist(self) -> int:
        """Twist of the graded canonical module of the ring itself."""
        return -self.nvars


@dataclass(frozen=True)
class AbstractIdeal:
    """Stand-in for a component described only by an external label."""

    label: str


@dataclass(frozen=True)
class IdealNode:
    """One poset element: a prime component together with its numeric data.

    height is optional because abstract inputs may omit it; dim never is,
    since every bound in the engine is a maximum of dims.
    """

    id: str
    ideal: object
    dim: int
    height: Optional[int] = None
    is_prime: bool = True
    is_cm: bool = True

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError(f"node {self.id}: dim must be nonnegative")
        if self.height is not None and self.height < 0:
            raise ValueError(f"node {self.id}: height must be nonnegative")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class AnalysisPoset:
    """A finite poset of IdealNodes with a verified partial order.

    The order relation is handed in already reflexive and transitive; the
    constructor verifies both together with antisymmetry, using bitmask
    up-sets so that verification stays cheap on posets of realistic size.
    """

    __slots__ = ("_nodes", "_index", "_up", "_down", "ring", "provenance")

    def __init__(
        self,
        nodes: Sequence[IdealNode],
        leq_pairs: Iterable[tuple[str, str]],
        *,
        ring: RingContext | None = None,
        provenance: str = "abstract",
    ) -> None:
        self._nodes = tuple(nodes)
        ids = [nd.id for nd in self._nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node ids")
        self._index = {pid: k for k, pid in enumerate(ids)}
        n = len(self._nodes)
        up = [1 << k for k in range(n)]
        for a, b in leq_pairs:
            ia = self._index.get(a)
            ib = self._index.get(b)
            if ia is None or ib is None:
                raise ValueError(f"order relation mentions unknown id in ({a}, {b})")
            up[ia] |= 1 << ib
        for i in range(n):
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise ValueError(
                        f"order relation has a cycle through {ids[i]} and {ids[j]}"
                    )
        for i in range(n):
            acc = up[i]
            for j in _bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                raise ValueError("order relation is not transitively closed")
        down = [1 << k for k in range(n)]
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self._up = up
        self._down = down
        self.ring = ring
        self.provenance = provenance
        if ring is not None:
            for nd in self._nodes:
                if nd.height is not None and nd.height + nd.dim != ring.nvars:
                    raise ValueError(
                        f"node {nd.id}: height {nd.height} + dim {nd.dim} "
                        f"differs from the ambient {ring.nvars}"
                    )

    @property
    def nodes(self) -> tuple[IdealNode, ...]:
        return self._nodes

    def ids(self) -> tuple[str, ...]:
        return tuple(nd.id for nd in self._nodes)

    def __len__(self) -> int:
        return len(self._nodes)

    def node(self, pid: str) -> IdealNode:
        k = self._index.get(pid)
        if k is None:
            raise UnknownElement(pid)
        return self._nodes[k]

    def _pos(self, pid: str) -> int:
        k = self._index.get(pid)
        if k is None:
            raise UnknownElement(pid)
        return k

    def leq(self, a: str, b: str) -> bool:
        return self._up[self._pos(a)] >> self._pos(b) & 1 == 1

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def maximal_ids(self) -> tuple[str, ...]:
        """Elements with nothing strictly above: the minimal primes."""
        return tuple(
            nd.id for k, nd in enumerate(self._nodes) if self._up[k] == 1 << k
        )

    def is_maximal(self, pid: str) -> bool:
        k = self._pos(pid)
        return self._up[k] == 1 << k

    def restrict(self, keep: Iterable[str]) -> "AnalysisPoset":
        keep_set = set(keep)
        unknown = keep_set - set(self._index)
        if unknown:
            raise UnknownElement(sorted(unknown)[0])
        nodes = [nd for nd in self._nodes if nd.id in keep_set]
        pairs = [
            (a.id, b.id) for a in nodes for b in nodes if self.leq(a.id, b.id)
        ]
        return AnalysisPoset(nodes, pairs, ring=self.ring, provenance=self.provenance)

    def open_interval_above(self, pid: str) -> "AnalysisPoset":
        """The strict up-set of pid, i.e. the open interval toward the top."""
        k = self._pos(pid)
        above = [self._nodes[j].id for j in _bits(self._up[k]) if j != k]
        return self.restrict(above)

    def hasse(self) -> list[tuple[str, str]]:
        """Cover pairs (lower, upper) of the transitive reduction."""
        n = len(self._nodes)
        covers = []
        for i in range(n):
            strict_up = self._up[i] & ~(1 << i)
            for j in _bits(strict_up):
                between = strict_up & self._down[j] & ~(1 << j)
                if between == 0:
                    covers.append((self._nodes[i].id, self._nodes[j].id))
        return covers


def order_complex(
    poset: AnalysisPoset, *, max_faces: int = DEFAULT_MAX_FACES
) -> SimplicialComplex:
    """Complex of all chains of the poset, empty chain included.

    The empty poset maps to the empty complex (just the empty face), so an
    empty interval is detected downstream by its homology in degree -1.
    """
    ids = poset.ids()
    above = {a: [b for b in ids if poset.lt(a, b)] for a in ids}
    chains: list[tuple] = [()]
    stack = [(a,) for a in reversed(ids)]
    while stack:
        chain = stack.pop()
        chains.append(chain)
        if len(chains) > max_faces:
            raise FaceBudgetExceeded(
                f"chain enumeration passed the face budget of {max_faces}"
            )
        for b in reversed(above[chain[-1]]):
            stack.append(chain + (b,))
    return SimplicialComplex(map(frozenset, chains), max_faces=max_faces)


def join_closure(
    generators: Sequence,
    *,
    sum_op: Callable,
    contains_op: Callable,
    canonical_key: Callable,
    node_builder: Callable,
    generator_key: Callable | None = None,
    is_prime_op: Callable | None = None,
    to_prime_op: Callable | None = None,
    decompose_op: Callable | None = None,
    ring: RingContext | None = None,
    provenance: str,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> AnalysisPoset:
    """Close a family of prime components under pairwise sums.

    sum_op combines two prime representations; is_prime_op (when given)
    tests the result, to_prime_op converts a prime sum to its canonical
    prime representation, and decompose_op replaces a non-prime sum by its
    minimal primes.  Omitting is_prime_op asserts that sums are always
    prime, as for face primes; a non-prime sum without decompose_op raises
    MissingDecomposer.  Every accumulated prime is summed with every other,
    decomposition output included, until nothing new appears.
    """
    if not generators:
        raise ValueError("closure needs at least one generator")
    gens = sorted(generators, key=generator_key or canonical_key)

    reps: list = []
    index: dict = {}
    pending: deque[tuple[int, int]] = deque()

    def insert(rep) -> None:
        key = canonical_key(rep)
        if key in index:
            return
        if len(reps) >= max_elements:
            raise ClosureBudgetExceeded(
                f"sum closure passed the element budget of {max_elements}"
            )
        idx = len(reps)
        reps.append(rep)
        index[key] = idx
        for other in range(idx):
            pending.append((other, idx))

    seen_sums: set = set()

    def settle() -> None:
        while pending:
            i, j = pending.popleft()
            s = sum_op(reps[i], reps[j])
            if s in seen_sums:
                continue
            seen_sums.add(s)
            if is_prime_op is None or is_prime_op(s):
                insert(to_prime_op(s) if to_prime_op is not None else s)
            elif decompose_op is None:
                raise MissingDecomposer(
                    "a non-prime sum arose and no decomposer was provided"
                )
            else:
                for piece in decompose_op(s):
                    insert(piece)

    for g in gens:
        insert(g)
        settle()

    nodes = tuple(
        node_builder(rep, f"p_{k + 1}") for k, rep in enumerate(reps)
    )
    pairs = [
        (nodes[i].id, nodes[j].id)
        for i in range(len(reps))
        for j in range(len(reps))
        if contains_op(reps[i], reps[j])
    ]
    return AnalysisPoset(nodes, pairs, ring=ring, provenance=provenance)
