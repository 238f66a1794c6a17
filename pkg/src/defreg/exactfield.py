"""Exact linear algebra over the rationals and over prime fields GF(p).

Reduced homology dimensions are alternating differences of boundary-matrix
ranks, so rank is the only operation needed here.  The matrices involved
are boundaries of order complexes of small posets (a few hundred rows at
most), which makes plain Gaussian elimination over exact scalars the right
tool.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class DenominatorDividesP(ArithmeticError):
    """A rational entry has no reduction mod p (denominator divisible by p)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field for homology: characteristic 0 is Q, p is GF(p)."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def label(self) -> str:
        return "rational" if self.is_rationals else f"gf({self.characteristic})"


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of arbitrary-precision rationals.

    Fraction keeps every entry in lowest terms automatically, so no separate
    normalization step is needed.  Zero-row and zero-column shapes are legal
    and show up constantly as boundaries of extreme degrees.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(
        cls,
        data: Sequence[Sequence[int | Fraction]],
        *,
        cols: int | None = None,
    ) -> "ExactMatrix":
        body = tuple(tuple(Fraction(x) for x in row) for row in data)
        if body:
            width = len(body[0])
        else:
            width = 0 if cols is None else cols
        return cls(len(body), width, body)


def rank(matrix: ExactMatrix, field: FieldSpec) -> int:
    """Rank over the requested field, by Gaussian elimination."""
    if field.is_rationals:
        return _rank_rational(matrix)
    return _rank_mod_p(matrix, field.characteristic)


def _rank_rational(matrix: ExactMatrix) -> int:
    work = [list(row) for row in matrix.entries]
    nrows = matrix.rows
    r = 0
    for c in range(matrix.cols):
        pivot = None
        for i in range(r, nrows):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        head = work[r][c]
        for i in range(r + 1, nrows):
            f = work[i][c]
            if f != 0:
                scale = f / head
                work[i] = [a - scale * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r


def _residue(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise DenominatorDividesP(f"{x} has no image modulo {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


def _rank_mod_p(matrix: ExactMatrix, p: int) -> int:
    work = [[_residue(x, p) for x in row] for row in matrix.entries]
    nrows = matrix.rows
    r = 0
    for c in range(matrix.cols):
        pivot = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], -1, p)
        for i in range(r + 1, nrows):
            f = work[i][c]
            if f:
                scale = f * inv % p
                work[i] = [(a - scale * b) % p for a, b in zip(work[i], work[r])]
        r += 1
        if r == nrows:
            break
    return r
