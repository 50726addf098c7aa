import random
from fractions import Fraction

import pytest

from hecke_strip.linalg import (
    NoSolution,
    QMatrix,
    fraction_rank,
    hstack,
    nullspace,
    rref,
    solve_linear,
    vstack,
)
from hecke_strip.ratfun import LaurentPoly, RationalFunction

A = RationalFunction(LaurentPoly.monomial(1))
ONE = RationalFunction.one()
ZERO = RationalFunction.zero()


def rand_matrix(rng, rows, cols, density=0.7):
    entries = [
        [
            RationalFunction(
                LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
                if rng.random() < density
                else 0
            )
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]
    return QMatrix(rows, cols, entries)


def test_rref_identity_and_zero():
    ident = QMatrix.identity(3)
    reduced, pivots = rref(ident)
    assert reduced == ident
    assert pivots == [0, 1, 2]
    z = QMatrix.zeros(2, 2)
    reduced, pivots = rref(z)
    assert reduced == z
    assert pivots == []


def test_rref_rank_one_example():
    # second row is a times the first, so the rank is 1
    m = QMatrix(2, 2, [[A, ONE], [A * A, A]])
    _, pivots = rref(m)
    assert len(pivots) == 1


def test_rref_idempotent_random():
    rng = random.Random(3)
    for _ in range(25):
        m = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        reduced, _ = rref(m)
        again, _ = rref(reduced)
        assert again == reduced


def test_nullspace_examples():
    assert nullspace(QMatrix.identity(4)) == []
    z = QMatrix.zeros(1, 2)
    basis = nullspace(z)
    assert len(basis) == 2
    m = QMatrix(1, 2, [[A, -A]])
    basis = nullspace(m)
    assert len(basis) == 1
    assert basis[0] == QMatrix.column([ONE, ONE])


def test_nullspace_vectors_are_exact_kernel_random():
    rng = random.Random(5)
    for _ in range(25):
        m = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        basis = nullspace(m)
        _, pivots = rref(m)
        assert len(pivots) + len(basis) == m.cols
        for v in basis:
            assert (m * v).is_zero()


def test_solve_examples():
    b = QMatrix.column([A, ONE])
    assert solve_linear(QMatrix.identity(2), b) == b
    x = solve_linear(QMatrix(1, 1, [[A]]), QMatrix(1, 1, [[ONE]]))
    assert x == QMatrix(1, 1, [[A.inverse()]])
    with pytest.raises(NoSolution):
        solve_linear(QMatrix(1, 1, [[ZERO]]), QMatrix(1, 1, [[ONE]]))


def test_solve_random_consistent_systems():
    rng = random.Random(9)
    for _ in range(20):
        a = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        x = rand_matrix(rng, a.cols, 1)
        b = a * x
        solved = solve_linear(a, b)
        assert a * solved == b


def test_matrix_algebra_random():
    rng = random.Random(13)
    for _ in range(15):
        n = rng.randint(1, 3)
        m1 = rand_matrix(rng, n, n)
        m2 = rand_matrix(rng, n, n)
        m3 = rand_matrix(rng, n, n)
        assert (m1 * m2) * m3 == m1 * (m2 * m3)
        ident = QMatrix.identity(n)
        assert m1 * ident == m1 and ident * m1 == m1
        assert m1 + m2 == m2 + m1
        assert (m1 - m1).is_zero()
        assert m1.transpose().transpose() == m1
        assert (m1 * m2).transpose() == m2.transpose() * m1.transpose()


def test_scale_and_stack():
    m = QMatrix(2, 2, [[ONE, A], [ZERO, ONE]])
    assert m.scale(A) == QMatrix(2, 2, [[A, A * A], [ZERO, A]])
    assert m * 2 == m + m
    h = hstack([m, QMatrix.identity(2)])
    assert (h.rows, h.cols) == (2, 4)
    v = vstack([m, QMatrix.identity(2)])
    assert (v.rows, v.cols) == (4, 2)
    assert h.column_vector(2) == QMatrix.column([ONE, ZERO])


def test_dimension_mismatch_errors():
    with pytest.raises(ValueError):
        QMatrix.identity(2) * QMatrix.identity(3)
    with pytest.raises(ValueError):
        QMatrix.identity(2) + QMatrix.identity(3)
    with pytest.raises(ValueError):
        solve_linear(QMatrix.identity(2), QMatrix.column([ONE]))


def test_evaluate_matrix():
    m = QMatrix(2, 2, [[A, ONE], [ZERO, A.inverse()]])
    assert m.evaluate(Fraction(2)) == [
        [Fraction(2), Fraction(1)],
        [Fraction(0), Fraction(1, 2)],
    ]


def test_fraction_rank():
    assert fraction_rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert fraction_rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]) == 2
    assert fraction_rank([]) == 0
    assert fraction_rank([[Fraction(0), Fraction(0)]]) == 0


def test_json_round_trip():
    m = QMatrix(2, 2, [[A, ONE], [ZERO, A.inverse()]])
    obj = m.to_json()
    assert obj["rows"] == 2 and obj["cols"] == 2
    assert QMatrix.from_json(obj) == m
