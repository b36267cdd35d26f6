"""Exact polynomial arithmetic and determinant tests.

The determinant is cross-checked against a direct permutation expansion,
which is independent of the fraction-free elimination under test.
"""

import itertools
import random

import pytest

from exactmatch.polynomials import Polynomial, determinant


def perm_sign(perm):
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm))
        if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def determinant_oracle(matrix):
    n = len(matrix)
    total = Polynomial.zero()
    for perm in itertools.permutations(range(n)):
        term = Polynomial.constant(perm_sign(perm))
        for i in range(n):
            term = term * matrix[i][perm[i]]
        total = total + term
    return total


def rand_poly(rng, max_deg=2, lo=-3, hi=3):
    return Polynomial([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg + 1))])


def test_construction_trims_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0, 0]) == Polynomial.zero()
    assert Polynomial([]).degree == -1


def test_degree_and_coeff():
    p = Polynomial([5, 0, 7])
    assert p.degree == 2
    assert p.coeff(0) == 5
    assert p.coeff(1) == 0
    assert p.coeff(2) == 7
    assert p.coeff(9) == 0


def test_monomial_and_constant():
    assert Polynomial.monomial(3, 2) == Polynomial([0, 0, 3])
    assert Polynomial.monomial(0, 5) == Polynomial.zero()
    assert Polynomial.constant(4).degree == 0
    assert Polynomial.one() == Polynomial([1])
    with pytest.raises(ValueError):
        Polynomial.monomial(1, -1)


def test_evaluate():
    p = Polynomial([1, 2, 3])  # 1 + 2y + 3y^2
    assert p.evaluate(0) == 1
    assert p.evaluate(2) == 17
    assert Polynomial.zero().evaluate(10) == 0


def test_ring_ops():
    a = Polynomial([1, 1])        # 1 + y
    b = Polynomial([-1, 1])       # y - 1
    assert a * b == Polynomial([-1, 0, 1])
    assert a + b == Polynomial([0, 2])
    assert a - a == Polynomial.zero()
    assert -a == Polynomial([-1, -1])
    assert a * Polynomial.zero() == Polynomial.zero()


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_int_coercion_in_eq():
    assert Polynomial([7]) == 7
    assert Polynomial.zero() == 0
    assert Polynomial([0, 1]) != 1


def test_exact_div_round_trip():
    rng = random.Random(12)
    for _ in range(100):
        a = rand_poly(rng, max_deg=3)
        b = rand_poly(rng, max_deg=2)
        if b == Polynomial.zero():
            continue
        assert (a * b).exact_div(b) == a


def test_exact_div_errors():
    with pytest.raises(ZeroDivisionError):
        Polynomial([1]).exact_div(Polynomial.zero())
    with pytest.raises(ValueError):
        Polynomial([1, 1]).exact_div(Polynomial([0, 0, 1]))
    with pytest.raises(ValueError):
        Polynomial([1, 1, 1]).exact_div(Polynomial([2, 1]))


def test_determinant_small_known():
    ident = [[Polynomial.one(), Polynomial.zero()],
             [Polynomial.zero(), Polynomial.one()]]
    assert determinant(ident) == Polynomial.one()
    swap = [[Polynomial.zero(), Polynomial.one()],
            [Polynomial.one(), Polynomial.zero()]]
    assert determinant(swap) == Polynomial([-1])
    assert determinant([]) == Polynomial.one()
    assert determinant([[Polynomial([0, 2])]]) == Polynomial([0, 2])


def test_determinant_requires_square():
    with pytest.raises(ValueError, match="square"):
        determinant([[Polynomial.one(), Polynomial.zero()]])


def test_determinant_zero_pivot_column():
    # first column identically zero forces the pivoting path
    z = Polynomial.zero()
    mat = [[z, Polynomial.one()], [z, Polynomial.one()]]
    assert determinant(mat) == Polynomial.zero()


def test_determinant_needs_row_swap():
    z = Polynomial.zero()
    mat = [
        [z, Polynomial.one(), z],
        [Polynomial.one(), z, z],
        [z, z, Polynomial([2])],
    ]
    assert determinant(mat) == determinant_oracle(mat)
    assert determinant(mat) == Polynomial([-2])


def test_determinant_matches_oracle_random():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(0, 4)
        mat = [[rand_poly(rng) for _ in range(n)] for _ in range(n)]
        assert determinant(mat) == determinant_oracle(mat)


def test_determinant_singular_integer_matrix():
    c = Polynomial.constant
    mat = [[c(1), c(2)], [c(2), c(4)]]
    assert determinant(mat) == Polynomial.zero()


def test_determinant_multilinearity_spot():
    rng = random.Random(14)
    for _ in range(20):
        n = 3
        base = [[rand_poly(rng) for _ in range(n)] for _ in range(n)]
        scaled = [row[:] for row in base]
        scaled[1] = [p * Polynomial([2]) for p in scaled[1]]
        assert determinant(scaled) == determinant(base) * Polynomial([2])
