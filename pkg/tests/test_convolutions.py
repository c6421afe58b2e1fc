"""Convolution tests: in-test brute oracle, closed-form equivalence, and
rationality certificates of the field-valued evaluations."""

from __future__ import annotations

from fractions import Fraction

import pytest

from balkit import (
    BALANCING,
    FIBONACCI,
    LUCAS,
    LUCAS_BALANCING,
    GaussQuad,
    QuadRat,
    brute_conv,
    closed_form_raw,
    conv_balancing_closed,
    conv_balancing_r0,
    conv_closed,
    conv_fibonacci_closed,
    conv_lucas_balancing_closed,
    conv_lucas_closed,
)

FAMILIES = (BALANCING, LUCAS_BALANCING, FIBONACCI, LUCAS)


def oracle_conv(seq, k, r, n):
    """Independent oracle: iterate the recurrence, then the literal double sum."""
    upto = k * n + r
    vals = [seq.seed0, seq.seed1]
    while len(vals) <= upto + 1:
        vals.append(seq.mult * vals[-1] + seq.add * vals[-2])
    return sum(vals[k * m + r] * vals[k * (n - m) + r] for m in range(n + 1))


def test_brute_examples():
    assert brute_conv(BALANCING, 1, 0, 3) == 12
    assert brute_conv(BALANCING, 2, 1, 1) == 70
    assert brute_conv(LUCAS_BALANCING, 1, 0, 0) == 1
    assert brute_conv(LUCAS, 3, 1, 2) == 107


def test_brute_matches_oracle():
    for seq in FAMILIES:
        for k in range(1, 5):
            for r in range(k):
                for n in range(0, 9):
                    assert brute_conv(seq, k, r, n) == oracle_conv(seq, k, r, n)


def test_closed_balancing_examples():
    assert conv_balancing_closed(2, 1, 1) == 70
    assert conv_balancing_closed(1, 0, 3) == 12
    assert conv_balancing_closed(3, 0, 0) == 0


def test_closed_lucas_balancing_examples():
    assert conv_lucas_balancing_closed(1, 0, 0) == 1
    assert conv_lucas_balancing_closed(1, 0, 1) == 6


def test_closed_fibonacci_examples():
    assert conv_fibonacci_closed(2, 0, 1) == 0
    assert conv_fibonacci_closed(2, 1, 1) == 4
    assert conv_fibonacci_closed(1, 0, 0) == 0


def test_closed_lucas_examples():
    assert conv_lucas_closed(1, 0, 1) == 4
    assert conv_lucas_closed(2, 0, 0) == 4
    assert conv_lucas_closed(3, 1, 2) == 107


def test_closed_matches_brute_smoke_grid():
    for seq in FAMILIES:
        for k in range(1, 4):
            for r in range(k):
                for n in range(0, 11):
                    assert conv_closed(seq, k, r, n) == brute_conv(seq, k, r, n), \
                        (seq.key, k, r, n)


def test_balancing_r0_examples():
    assert conv_balancing_r0(1, 3) == 12
    assert conv_balancing_r0(1, 2) == 1
    assert conv_balancing_r0(4, 0) == 0


def test_balancing_r0_matches_closed_form():
    for k in range(1, 6):
        for n in range(0, 41):
            assert conv_balancing_r0(k, n) == conv_balancing_closed(k, 0, n)


def test_raw_totals_have_zero_residue():
    # The Gaussian/quadratic evaluations must cancel exactly, not approximately.
    for k, r, n in ((1, 0, 4), (2, 1, 6), (3, 2, 5), (4, 1, 7)):
        raw_c = closed_form_raw(LUCAS_BALANCING, k, r, n)
        assert isinstance(raw_c, GaussQuad) and raw_c.d == 2
        assert raw_c.im == QuadRat.of(0, 0, 2)
        assert raw_c.re.b == 0
        assert raw_c.re.a.denominator == 1

        raw_l = closed_form_raw(LUCAS, k, r, n)
        if isinstance(raw_l, GaussQuad):
            assert raw_l.im == QuadRat.of(0, 0, 5)
            assert raw_l.re.b == 0
        else:
            assert isinstance(raw_l, QuadRat) and raw_l.b == 0

        raw_f = closed_form_raw(FIBONACCI, k, r, n)
        if isinstance(raw_f, GaussQuad):
            assert raw_f.im == QuadRat.of(0, 0, 5)
        else:
            assert isinstance(raw_f, Fraction) and raw_f.denominator == 1


def test_parity_dispatch():
    # Fibonacci: rational when k - r is even, Gaussian when odd.
    assert isinstance(closed_form_raw(FIBONACCI, 3, 1, 2), Fraction)
    assert isinstance(closed_form_raw(FIBONACCI, 2, 1, 2), GaussQuad)
    # Lucas: the parity roles swap fields, not rationality: even k - r is the
    # Gaussian case, odd stays inside Q(sqrt 5).
    assert isinstance(closed_form_raw(LUCAS, 3, 2, 2), QuadRat)
    assert isinstance(closed_form_raw(LUCAS, 2, 0, 2), GaussQuad)


def test_parameter_errors():
    with pytest.raises(ValueError):
        brute_conv(BALANCING, 1, 1, 0)
    with pytest.raises(ValueError):
        conv_closed(BALANCING, 2, 2, 1)
    with pytest.raises(ValueError):
        conv_closed(BALANCING, 1, 0, -1)
    with pytest.raises(ValueError):
        conv_balancing_r0(0, 3)
    with pytest.raises(ValueError):
        conv_balancing_r0(2, -1)
    from balkit import gen_fibonacci

    with pytest.raises(ValueError):
        conv_closed(gen_fibonacci(2), 1, 0, 1)
