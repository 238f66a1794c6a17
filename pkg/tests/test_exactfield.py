import itertools
import random
from fractions import Fraction

import pytest

from defreg.exactfield import (
    DenominatorDividesP,
    ExactMatrix,
    FieldSpec,
    rank,
)

QQ = FieldSpec.rationals()
GF2 = FieldSpec.prime_field(2)
GF3 = FieldSpec.prime_field(3)


def minor_rank(data):
    """Oracle: the largest k with a nonzero k x k minor."""

    def det(rows, cols):
        if not rows:
            return Fraction(0)
        if len(rows) == 1:
            return data[rows[0]][cols[0]]
        total = Fraction(0)
        for k, c in enumerate(cols):
            sign = 1 if k % 2 == 0 else -1
            total += sign * data[rows[0]][c] * det(rows[1:], cols[:k] + cols[k + 1:])
        return total

    m, n = len(data), len(data[0]) if data else 0
    for k in range(min(m, n), 0, -1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                if det(rows, cols) != 0:
                    return k
    return 0


def test_field_spec_validation():
    assert QQ.is_rationals
    assert QQ.label() == "rational"
    assert GF3.label() == "gf(3)"
    with pytest.raises(ValueError):
        FieldSpec(4)
    with pytest.raises(ValueError):
        FieldSpec(1)
    with pytest.raises(ValueError):
        FieldSpec.prime_field(6)
    assert FieldSpec.prime_field(97).characteristic == 97


def test_matrix_validation():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, ((Fraction(1), Fraction(0)),))
    with pytest.raises(ValueError):
        ExactMatrix(1, 2, ((Fraction(1),),))
    m = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert (m.rows, m.cols) == (2, 2)
    empty = ExactMatrix.from_rows([], cols=5)
    assert (empty.rows, empty.cols) == (0, 5)
    assert rank(empty, QQ) == 0


def test_known_ranks():
    ident = ExactMatrix.from_rows([[1, 0], [0, 1]])
    assert rank(ident, QQ) == 2
    singular = ExactMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(singular, QQ) == 1
    zeros = ExactMatrix.from_rows([[0, 0], [0, 0]])
    assert rank(zeros, QQ) == 0
    wide = ExactMatrix.from_rows([[1, 1, 1], [1, 1, 2]])
    assert rank(wide, QQ) == 2


def test_rank_depends_on_characteristic():
    two = ExactMatrix.from_rows([[2]])
    assert rank(two, QQ) == 1
    assert rank(two, GF2) == 0
    assert rank(two, GF3) == 1
    # determinant 3, so the matrix drops rank exactly at p = 3
    m = ExactMatrix.from_rows([[1, 2], [2, 1]])
    assert rank(m, QQ) == 2
    assert rank(m, GF3) == 1
    assert rank(m, GF2) == 2


def test_fraction_entries_mod_p():
    half = ExactMatrix.from_rows([[Fraction(1, 2)]])
    assert rank(half, QQ) == 1
    assert rank(half, GF3) == 1
    with pytest.raises(DenominatorDividesP):
        rank(half, GF2)


def test_random_ranks_match_minor_oracle():
    rng = random.Random(20240901)
    for _ in range(120):
        m = rng.randint(0, 4)
        n = rng.randint(0, 4)
        data = [
            [Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)
        ]
        mat = ExactMatrix.from_rows(data, cols=n)
        got = rank(mat, QQ)
        assert got == minor_rank(data)
        # rank never exceeds either dimension, and mod p never exceeds rank over Q
        assert got <= min(m, n)
        assert rank(mat, GF2) <= got
        assert rank(mat, GF3) <= got


def test_transpose_has_equal_rank():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        data = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m)]
        mat = ExactMatrix.from_rows(data)
        tr = ExactMatrix.from_rows(list(map(list, zip(*data))), cols=m)
        assert rank(mat, QQ) == rank(tr, QQ)
        assert rank(mat, GF3) == rank(tr, GF3)
