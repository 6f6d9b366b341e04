"""Exact linear algebra layer: frozen small oracles plus seeded properties."""

import random
from fractions import Fraction

import pytest

from lietrace.ratlin import (DegreeOutOfRange, JordanParts, Matrix, NonSquare,
                             NotInSpan, determinant, exterior_power,
                             format_rational, inverse, is_nilpotent_matrix,
                             is_squarefree, jordan_chevalley, kernel_basis,
                             minimal_polynomial, parse_rational, rank, rref,
                             solve_in_span, squarefree_part)

from helpers import random_invertible, random_matrix


def test_parse_and_format_rational():
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_rational("7") == Fraction(7)
    assert parse_rational("4/6") == Fraction(2, 3)   # canonicalized
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(14, 2)) == "7"
    for bad in ("1.5", "1e3", " 1", "1/ 2", "1/-2", "--1", "", "a", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_rational_canonical_form_is_stable():
    # products/sums of Fractions stay in lowest terms with positive denominator
    rng = random.Random(5)
    m = random_matrix(rng, 4) * random_matrix(rng, 4) + random_matrix(rng, 4)
    for row in m.entries:
        for x in row:
            assert x.denominator > 0
            assert Fraction(x.numerator, x.denominator) == x
            assert parse_rational(format_rational(x)) == x


def test_rref_frozen_example():
    reduced, pivots, r = rref(Matrix([[1, 2], [2, 4]]))
    assert reduced == Matrix([[1, 2], [0, 0]])
    assert pivots == (0,)
    assert r == 1
    assert rref(Matrix.identity(2)) == (Matrix.identity(2), (0, 1), 2)
    assert rref(Matrix.zero(3, 3)) == (Matrix.zero(3, 3), (), 0)


def test_rref_is_idempotent_and_deterministic():
    rng = random.Random(11)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 5))
        reduced, pivots, r = rref(m)
        again, pivots2, r2 = rref(reduced)
        assert again == reduced and pivots2 == pivots and r2 == r


def test_kernel_frozen_example():
    assert kernel_basis(Matrix([[1, 1]])) == [(Fraction(-1), Fraction(1))]
    assert kernel_basis(Matrix.zero(2, 2)) == [(Fraction(1), Fraction(0)),
                                               (Fraction(0), Fraction(1))]
    assert kernel_basis(Matrix.identity(3)) == []


def test_kernel_vectors_annihilate_and_count():
    rng = random.Random(23)
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix([[Fraction(rng.randint(-2, 2)) for _ in range(cols)]
                    for _ in range(rows)])
        basis = kernel_basis(m)
        assert len(basis) == cols - rank(m)
        for v in basis:
            assert all(x == 0 for x in m.apply(v))


def test_determinant_frozen_examples():
    # hand cofactor expansion: 0*(-1) - (-1)*(-1) = -1
    assert determinant(Matrix([[-1, -1], [-1, 0]])) == -1
    assert determinant(Matrix.identity(3)) == 1
    assert determinant(Matrix([[2, 0], [0, 3]])) == 6
    assert determinant(Matrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(NonSquare):
        determinant(Matrix([[1, 2, 3]]))


def test_determinant_multiplicative():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 5)
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        assert determinant(a * b) == determinant(a) * determinant(b)


def test_inverse_round_trip():
    rng = random.Random(37)
    for _ in range(15):
        n = rng.randint(1, 4)
        m = random_invertible(rng, n)
        assert m * inverse(m) == Matrix.identity(n)


def test_solve_in_span_frozen_examples():
    e0 = (Fraction(1), Fraction(0))
    e1 = (Fraction(0), Fraction(1))
    assert solve_in_span([(Fraction(1),)], (Fraction(3),)) == [Fraction(3)]
    with pytest.raises(NotInSpan):
        solve_in_span([e0], e1)
    # basis {e0+e1, e1}, target e0 -> [1, -1]
    assert solve_in_span([(Fraction(1), Fraction(1)), e1], e0) == \
        [Fraction(1), Fraction(-1)]
    with pytest.raises(NotInSpan):  # dependent basis is refused
        solve_in_span([e0, e0], e0)


def test_exterior_power_frozen_examples():
    m = Matrix.diagonal([2, 3, 6])
    assert exterior_power(m, 0) == Matrix([[1]])
    assert exterior_power(m, 1) == m
    assert exterior_power(m, 2) == Matrix.diagonal([6, 12, 18])
    assert exterior_power(m, 3) == Matrix([[36]])
    with pytest.raises(DegreeOutOfRange):
        exterior_power(m, 4)
    with pytest.raises(DegreeOutOfRange):
        exterior_power(m, -1)


def test_exterior_power_multiplicative():
    # Cauchy-Binet: Lambda^p(AB) = Lambda^p(A) Lambda^p(B)
    rng = random.Random(41)
    for _ in range(10):
        n = rng.randint(2, 4)
        a, b = random_matrix(rng, n), random_matrix(rng, n)
        for p in range(n + 1):
            assert exterior_power(a * b, p) == \
                exterior_power(a, p) * exterior_power(b, p)
    assert exterior_power(Matrix.identity(4), 2) == Matrix.identity(6)


def test_characteristic_identity_small():
    # by hand for [[2,1],[1,1]]: 1 - 3 + 1 = -1 = det(I - m)
    m = Matrix([[2, 1], [1, 1]])
    total = sum((-1) ** p * exterior_power(m, p).trace() for p in range(3))
    assert total == Fraction(-1)
    assert determinant(Matrix.identity(2) - m) == Fraction(-1)


def test_characteristic_identity_random():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = random_matrix(rng, n)
        lhs = sum((-1) ** p * exterior_power(m, p).trace()
                  for p in range(n + 1))
        assert lhs == determinant(Matrix.identity(n) - m)


def test_minimal_polynomial_frozen():
    # swap: x^2 - 1; scalar 5 on dim 3: x - 5; Jordan block: (x-1)^2
    assert minimal_polynomial(Matrix([[0, 1], [1, 0]])) == \
        [Fraction(-1), Fraction(0), Fraction(1)]
    assert minimal_polynomial(5 * Matrix.identity(3)) == \
        [Fraction(-5), Fraction(1)]
    assert minimal_polynomial(Matrix([[1, 1], [0, 1]])) == \
        [Fraction(1), Fraction(-2), Fraction(1)]
    assert squarefree_part([Fraction(1), Fraction(-2), Fraction(1)]) == \
        [Fraction(-1), Fraction(1)]


def test_jordan_chevalley_frozen_examples():
    parts = jordan_chevalley(Matrix([[1, 1], [0, 1]]))
    assert parts.semisimple == Matrix.identity(2)
    assert parts.nilpotent == Matrix([[0, 1], [0, 0]])
    parts = jordan_chevalley(Matrix([[0, 1], [1, 0]]))  # already semisimple
    assert parts.semisimple == Matrix([[0, 1], [1, 0]])
    assert parts.nilpotent.is_zero()
    parts = jordan_chevalley(Matrix.diagonal([1, -1]))
    assert parts.semisimple == Matrix.diagonal([1, -1])
    assert parts.nilpotent.is_zero()


def _check_jordan_parts(m: Matrix, parts: JordanParts):
    s, n = parts.semisimple, parts.nilpotent
    assert s + n == m
    assert s * n == n * s
    assert is_nilpotent_matrix(n)
    assert is_squarefree(minimal_polynomial(s))


def test_jordan_chevalley_constructive_oracle():
    # build m = P (D + N0) P^-1 with commuting diagonal D and strictly upper
    # N0 supported inside equal-eigenvalue blocks; uniqueness of the
    # decomposition forces S = P D P^-1 and N = P N0 P^-1.
    rng = random.Random(47)
    for _ in range(15):
        n = rng.randint(2, 4)
        eigen = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
        eigen.sort()
        d = Matrix.diagonal(eigen)
        n0_rows = [[Fraction(rng.randint(-2, 2))
                    if i < j and eigen[i] == eigen[j] else Fraction(0)
                    for j in range(n)] for i in range(n)]
        n0 = Matrix(n0_rows)
        p = random_invertible(rng, n)
        p_inv = inverse(p)
        m = p * (d + n0) * p_inv
        parts = jordan_chevalley(m)
        _check_jordan_parts(m, parts)
        assert parts.semisimple == p * d * p_inv
        assert parts.nilpotent == p * n0 * p_inv


def test_jordan_chevalley_invariants_random():
    rng = random.Random(53)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 4))
        _check_jordan_parts(m, jordan_chevalley(m))
