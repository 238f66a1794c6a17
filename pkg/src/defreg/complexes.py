"""Finite abstract simplicial complexes and their reduced homology.

Complexes are stored by explicit face enumeration rather than by facets:
everything in this package comes from chains of small posets, where full
enumeration keeps boundary matrices trivial to assemble.  The augmented
chain complex is used throughout, so the empty face is a genuine face of
dimension -1.

Two degenerate objects stay distinct on purpose.  The void complex has no
faces at all and all of its reduced homology vanishes.  The empty complex
has exactly the empty face, and its only reduced homology is a single
class in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping

from .exactfield import ExactMatrix, FieldSpec, rank

DEFAULT_MAX_FACES = 200_000


class FaceBudgetExceeded(RuntimeError):
    """Raised when a complex would exceed the configured face budget."""


class SimplicialComplex:
    """An abstract simplicial complex with mutually orderable vertex labels."""

    __slots__ = ("_faces", "_by_dim", "_vertices")

    def __init__(
        self,
        faces: Iterable[Iterable[Hashable]] = (),
        *,
        max_faces: int = DEFAULT_MAX_FACES,
    ) -> None:
        face_set = {frozenset(f) for f in faces}
        if len(face_set) > max_faces:
            raise FaceBudgetExceeded(
                f"{len(face_set)} faces exceed the budget of {max_faces}"
            )
        for f in face_set:
            for v in f:
                if f - {v} not in face_set:
                    raise ValueError("faces are not closed under taking subsets")
        self._faces = frozenset(face_set)
        vertices: set = set()
        for f in face_set:
            vertices |= f
        self._vertices = tuple(sorted(vertices))
        order = {v: k for k, v in enumerate(self._vertices)}
        by_dim: Dict[int, list] = {}
        for f in face_set:
            key = tuple(sorted(f, key=order.__getitem__))
            by_dim.setdefault(len(f) - 1, []).append(key)
        for bucket in by_dim.values():
            bucket.sort(key=lambda face: tuple(order[v] for v in face))
        self._by_dim = by_dim

    @classmethod
    def from_faces(
        cls,
        generating: Iterable[Iterable[Hashable]],
        *,
        max_faces: int = DEFAULT_MAX_FACES,
    ) -> "SimplicialComplex":
        """Downward closure of the given generating faces."""
        closed: set = set()
        for g in generating:
            top = frozenset(g)
            if top in closed:
                continue
            stack = [top]
            while stack:
                f = stack.pop()
                if f in closed:
                    continue
                closed.add(f)
                if len(closed) > max_faces:
                    raise FaceBudgetExceeded(
                        f"closure passed the face budget of {max_faces}"
                    )
                for v in f:
                    sub = f - {v}
                    if sub not in closed:
                        stack.append(sub)
        return cls(closed, max_faces=max_faces)

    @property
    def faces(self) -> frozenset:
        return self._faces

    @property
    def is_void(self) -> bool:
        return not self._faces

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def dimension(self) -> int | None:
        """Largest face dimension; -1 for the empty complex, None for the void one."""
        if not self._faces:
            return None
        return max(self._by_dim)

    def faces_of_dim(self, i: int) -> list:
        return list(self._by_dim.get(i, ()))

    def n_faces(self, i: int) -> int:
        return len(self._by_dim.get(i, ()))

    def __len__(self) -> int:
        return len(self._faces)


def boundary_matrix(complex: SimplicialComplex, i: int) -> ExactMatrix:
    """Matrix of the i-th boundary map of the augmented chain complex.

    Columns are indexed by the i-faces and rows by the (i-1)-faces, both in
    lexicographic order on the fixed vertex order; entries are 0 or +-1 with
    the usual alternating signs.  The target of the 0-th map is spanned by
    the empty face, which is what makes the homology reduced.
    """
    if i < 0:
        raise ValueError("boundary maps are indexed by i >= 0")
    cols = complex.faces_of_dim(i)
    rows = complex.faces_of_dim(i - 1)
    row_index = {f: k for k, f in enumerate(rows)}
    zero = Fraction(0)
    body = [[zero] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for k in range(len(face)):
            sub = face[:k] + face[k + 1:]
            body[row_index[sub]][j] = Fraction(1 if k % 2 == 0 else -1)
    return ExactMatrix(len(rows), len(cols), tuple(tuple(r) for r in body))


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology dimensions by degree, over a fixed field.

    Degrees outside the recorded range are zero; dim() hides that detail.
    """

    field: FieldSpec
    dims: Mapping[int, int]

    def dim(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def nonzero(self) -> Dict[int, int]:
        return {d: v for d, v in sorted(self.dims.items()) if v}


def reduced_homology(complex: SimplicialComplex, field: FieldSpec) -> HomologyProfile:
    """dim H~_i = (#i-faces) - rank d_i - rank d_{i+1}, in the augmented complex."""
    if complex.is_void:
        return HomologyProfile(field, {})
    top = complex.dimension
    assert top is not None
    ranks = {i: rank(boundary_matrix(complex, i), field) for i in range(0, top + 1)}
    ranks[top + 1] = 0
    dims: Dict[int, int] = {}
    for i in range(-1, top + 1):
        value = complex.n_faces(i) - ranks.get(i, 0) - ranks[i + 1]
        assert value >= 0
        dims[i] = value
    return HomologyProfile(field, dims)
