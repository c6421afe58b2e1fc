"""Exact quadratic / Gaussian-quadratic field arithmetic tests."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from balkit import (
    BALANCING,
    LUCAS_BALANCING,
    CancellationError,
    GaussQuad,
    QuadRat,
    binet_pair,
    certified_fraction,
    certified_int,
    sqrt_of,
    term,
)

ALPHA = QuadRat.of(3, 2, 2)
BETA = QuadRat.of(3, -2, 2)


def rand_quad(rng, d):
    return QuadRat.of(
        Fraction(rng.randrange(-30, 31), rng.randrange(1, 12)),
        Fraction(rng.randrange(-30, 31), rng.randrange(1, 12)),
        d,
    )


def rand_gauss(rng, d):
    return GaussQuad(rand_quad(rng, d), rand_quad(rng, d))


def test_unit_products():
    assert ALPHA * BETA == 1
    assert ALPHA + BETA == 6
    x = QuadRat.of(Fraction(5, 3), Fraction(-7, 2), 2)
    assert x * 1 == x


def test_inverse_examples():
    assert ALPHA.inverse() == BETA
    one = QuadRat.of(1, 0, 2)
    assert one.inverse() == one
    assert QuadRat.of(2, 1, 2).inverse() == QuadRat.of(1, Fraction(-1, 2), 2)
    assert 1 / ALPHA == BETA
    g = GaussQuad.of(QuadRat.of(0, 2, 2), QuadRat.of(1, 0, 2))
    assert 9 / g == g.conjugate()


def test_sqrt_squares_to_radicand():
    for d in (2, 5):
        assert sqrt_of(d) * sqrt_of(d) == d
        assert sqrt_of(d) ** 2 == d


def test_field_axioms_random():
    rng = random.Random(41)
    for d in (2, 5):
        for _ in range(150):
            x, y, z = (rand_quad(rng, d) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + y == y + x and x * y == y * x
            if x != 0:
                assert x * x.inverse() == 1
                assert x / x == 1


def test_norm_multiplicative():
    rng = random.Random(42)
    for d in (2, 5):
        for _ in range(200):
            x, y = rand_quad(rng, d), rand_quad(rng, d)
            assert (x * y).norm() == x.norm() * y.norm()


def test_gauss_axioms_random():
    rng = random.Random(43)
    for d in (2, 5):
        for _ in range(100):
            x, y, z = (rand_gauss(rng, d) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x * y).norm() == x.norm() * y.norm()
            if x.norm() != QuadRat.of(0, 0, d):
                assert x * x.inverse() == 1


def test_gauss_examples():
    two_r2 = QuadRat.of(0, 2, 2)
    plus = GaussQuad.of(two_r2, QuadRat.of(1, 0, 2))
    minus = GaussQuad.of(two_r2, QuadRat.of(-1, 0, 2))
    assert plus * minus == 9
    assert plus ** 0 == 1
    assert plus.inverse() + minus.inverse() == GaussQuad.of(
        QuadRat.of(0, Fraction(4, 9), 2), QuadRat.of(0, 0, 2)
    )


def test_gauss_power_negative():
    rng = random.Random(44)
    for _ in range(40):
        x = rand_gauss(rng, 5)
        if x.norm() == QuadRat.of(0, 0, 5):
            continue
        assert x ** -3 == (x ** 3).inverse()
        assert x ** -3 * x ** 3 == 1


@pytest.mark.parametrize("n, pair", [(2, (6, 17)), (0, (0, 1)), (-3, (-35, 99))])
def test_binet_examples(n, pair):
    assert binet_pair(n) == pair


def test_binet_matches_kernel():
    for n in range(-20, 61):
        assert binet_pair(n) == (term(BALANCING, n), term(LUCAS_BALANCING, n))


def test_certified_extraction():
    assert certified_int(Fraction(7)) == 7
    assert certified_int(QuadRat.of(-4, 0, 2)) == -4
    assert certified_fraction(GaussQuad.of(QuadRat.of(Fraction(3, 2), 0, 5),
                                           QuadRat.of(0, 0, 5))) == Fraction(3, 2)
    with pytest.raises(CancellationError):
        certified_int(QuadRat.of(1, Fraction(1, 10 ** 9), 2))
    with pytest.raises(CancellationError):
        certified_int(GaussQuad.of(QuadRat.of(1, 0, 2), QuadRat.of(1, 0, 2)))
    with pytest.raises(CancellationError):
        certified_int(Fraction(1, 2))


def test_hash_consistent_with_equality():
    q = QuadRat.of(Fraction(7, 3), 0, 2)
    assert hash(q) == hash(Fraction(7, 3))
    g = GaussQuad.of(q, QuadRat.of(0, 0, 2))
    assert g == q and hash(g) == hash(q)
    assert QuadRat.of(4, 0, 2) == QuadRat.of(4, 0, 5)
    assert hash(QuadRat.of(4, 0, 2)) == hash(QuadRat.of(4, 0, 5)) == hash(4)


def test_domain_errors():
    with pytest.raises(ValueError):
        QuadRat.of(1, 1, 2) + QuadRat.of(1, 1, 5)
    with pytest.raises(ValueError):
        QuadRat.of(1, 1, 2) * QuadRat.of(1, 1, 5)
    with pytest.raises(ValueError):
        QuadRat.of(0, 1, 4)  # not squarefree
    with pytest.raises(ValueError):
        QuadRat.of(0, 1, 1)
    with pytest.raises(ValueError):
        QuadRat.of(0, 1, 12)
    with pytest.raises(ZeroDivisionError):
        QuadRat.of(0, 0, 2).inverse()
    with pytest.raises(ZeroDivisionError):
        GaussQuad.of(QuadRat.of(0, 0, 5), QuadRat.of(0, 0, 5)) ** -1
    with pytest.raises(ValueError):
        GaussQuad(QuadRat.of(1, 0, 2), QuadRat.of(1, 0, 5))
