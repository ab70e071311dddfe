"""Hermite normal form and Diophantine solving, with independent oracles.

The HNF post-conditions are recomputed here from scratch: a local matrix
product checks H = U A, and an exact fraction Gaussian determinant checks
that U is unimodular.
"""

import random
from fractions import Fraction

import pytest

from chordcalc.intlinalg import IntMatrix, det, hnf, solve_diophantine


# --- oracles ---------------------------------------------------------------


def matmul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def fraction_det(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            factor = m[i][c] * inv
            if factor:
                m[i] = [x - factor * y for x, y in zip(m[i], m[c])]
    return result


def is_hnf_shape(h):
    pivots = []
    seen_zero_row = False
    for row in h.entries:
        p = next((j for j, x in enumerate(row) if x != 0), None)
        if p is None:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False  # nonzero row under a zero row
        if pivots and p <= pivots[-1]:
            return False  # pivot columns must strictly increase
        if row[p] <= 0:
            return False
        pivots.append(p)
    for i, p in enumerate(pivots):
        pivot = h.entries[i][p]
        for j in range(i):
            if not 0 <= h.entries[j][p] < pivot:
                return False  # entries above a pivot reduced mod the pivot
    return True


# --- IntMatrix basics --------------------------------------------------------


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
    with pytest.raises(ValueError):
        IntMatrix([])
    assert IntMatrix([], cols=4).rows == 0


def test_matmul_and_transpose():
    a = IntMatrix([[1, 2], [3, 4]])
    b = IntMatrix([[0, 1], [1, 0]])
    assert (a @ b).entries == [[2, 1], [4, 3]]
    assert a.transpose().entries == [[1, 3], [2, 4]]


# --- hnf ---------------------------------------------------------------------


def test_hnf_identity():
    a = IntMatrix.identity(3)
    h, u = hnf(a)
    assert h == a
    assert u == a


def test_hnf_single_row_already_reduced():
    a = IntMatrix([[2, 4]])
    h, _u = hnf(a)
    assert h.entries == [[2, 4]]


def test_hnf_properties_random():
    rng = random.Random(20240817)
    for trial in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 7)
        a = IntMatrix([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        h, u = hnf(a)
        assert matmul(u.entries, a.entries) == h.entries
        assert abs(fraction_det(u.entries)) == 1
        assert is_hnf_shape(h)


def test_hnf_derived_example():
    rng = random.Random(5)
    a = IntMatrix([[rng.randint(-9, 9) for _ in range(7)] for _ in range(5)])
    h, u = hnf(a)
    assert matmul(u.entries, a.entries) == h.entries
    assert abs(fraction_det(u.entries)) == 1


def test_det_matches_fraction_oracle():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert det(IntMatrix(rows)) == fraction_det(rows)


# --- solve_diophantine ---------------------------------------------------------


def apply(a, x):
    return [sum(row[j] * x[j] for j in range(len(x))) for row in a.entries]


def test_solve_identity():
    a = IntMatrix.identity(4)
    b = [3, -1, 0, 7]
    assert solve_diophantine(a, b) == b


def test_solve_parity_obstruction():
    assert solve_diophantine(IntMatrix([[2]]), [3]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_diophantine(IntMatrix([[1, 2]]), [1, 2])


def test_solve_plant_and_recover():
    rng = random.Random(424242)
    for _ in range(50):
        rows = rng.randint(2, 6)
        cols = rng.randint(2, 4)
        a = IntMatrix([[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)])
        planted = [rng.randint(-4, 4) for _ in range(cols)]
        b = apply(a, planted)
        x = solve_diophantine(a, b)
        assert x is not None
        assert apply(a, x) == b


def test_solve_rational_but_not_integer():
    # (1/2, 0) solves over Q; no integer point exists
    a = IntMatrix([[2, 0], [0, 2]])
    assert solve_diophantine(a, [1, 0]) is None
    assert solve_diophantine(a, [2, -4]) == [1, -2]


def test_solve_outside_column_span():
    a = IntMatrix([[1, 0], [0, 0]])
    assert solve_diophantine(a, [0, 1]) is None


def test_solve_zero_matrix():
    a = IntMatrix.zeros(3, 2)
    assert solve_diophantine(a, [0, 0, 0]) == [0, 0]
    assert solve_diophantine(a, [1, 0, 0]) is None
