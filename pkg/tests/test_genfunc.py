"""Generating-function closed forms and exact series expansion tests."""

from __future__ import annotations

import pytest

from balkit import (
    BALANCING,
    FIBONACCI,
    LUCAS,
    LUCAS_BALANCING,
    RationalGF,
    brute_conv,
    expand,
    gen_fibonacci,
    gf,
    series_mul,
    term,
)

FAMILIES = (BALANCING, LUCAS_BALANCING, FIBONACCI, LUCAS)


def test_balancing_gf_instance():
    g = gf(BALANCING, 1, 0)
    assert g.numer == (0, 1) and g.denom == (1, -6, 1)


def test_lucas_balancing_gf_instance():
    g = gf(LUCAS_BALANCING, 1, 0)
    assert g.numer == (1, -3) and g.denom == (1, -6, 1)


def test_fibonacci_stride_two_gf():
    # Expansion oracle: coefficients must be F(2n+1) = 1, 2, 5, 13, ...
    g = gf(FIBONACCI, 2, 1)
    assert g.denom == (1, -3, 1)
    assert expand(g, 6) == [term(FIBONACCI, 2 * i + 1) for i in range(6)]
    assert g.numer == (1, -1)


def test_lucas_gf_instance():
    g = gf(LUCAS, 1, 0)
    assert g.numer == (2, -1) and g.denom == (1, -1, -1)
    assert expand(g, 6) == [2, 1, 3, 4, 7, 11]


def test_expand_examples():
    assert expand(gf(BALANCING, 1, 0), 5) == [0, 1, 6, 35, 204]
    assert expand(gf(BALANCING, 2, 1), 4) == [1, 35, 1189, 40391]
    assert expand(RationalGF((1,), (1, -1)), 3) == [1, 1, 1]


def test_coefficients_match_terms_all_families():
    for family in FAMILIES:
        for k in range(1, 7):
            for r in range(k):
                got = expand(gf(family, k, r), 30)
                assert got == [term(family, k * i + r) for i in range(30)], (family.key, k, r)


def test_squared_gf_matches_brute_convolution():
    for family in FAMILIES:
        for k, r in ((1, 0), (2, 0), (2, 1), (3, 2)):
            prefix = expand(gf(family, k, r), 15)
            squared = series_mul(prefix, prefix, 15)
            for n in range(15):
                assert squared[n] == brute_conv(family, k, r, n)


def test_series_mul_geometric_square():
    ones = [1] * 10
    assert series_mul(ones, ones, 10) == list(range(1, 11))
    with pytest.raises(ValueError):
        series_mul(ones, ones, 11)


def test_expand_rejects_fractional_coefficients():
    with pytest.raises(ArithmeticError):
        expand(RationalGF((1,), (2, 1)), 3)


def test_parameter_errors():
    with pytest.raises(ValueError):
        gf(BALANCING, 1, 1)
    with pytest.raises(ValueError):
        gf(BALANCING, 0, 0)
    with pytest.raises(ValueError):
        gf(gen_fibonacci(2), 2, 0)
    with pytest.raises(ValueError):
        RationalGF((1,), (0, 1))
    with pytest.raises(ValueError):
        expand(gf(BALANCING, 1, 0), 0)


def test_gf_str_is_readable():
    assert str(gf(BALANCING, 1, 0)) == "(t) / (1 - 6*t + t^2)"
    assert str(gf(LUCAS_BALANCING, 1, 0)) == "(1 - 3*t) / (1 - 6*t + t^2)"
