"""Convolution sums of strided subsequences, evaluated two independent ways.

brute_conv sums the n+1 products directly.  The closed forms rewrite the sum
through the derivative of the subsequence generating function; their inner
weights are conjugate-pair expressions over Q(sqrt 2)(i), Q(sqrt 5)(i), or
plain rationals, whose irrational and imaginary parts must cancel identically.
Both conjugate powers are computed independently (no conjugation shortcut), so
the final certified extraction doubles as a self-check of the whole evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .quadfield import GaussQuad, QuadRat, certified_int
from .sequences import BALANCING, FIBONACCI, LUCAS, LUCAS_BALANCING, Sequence, term


def _validate(k: int, r: int, n: int) -> None:
    if not k > r >= 0:
        raise ValueError(f"need k > r >= 0, got k={k}, r={r}")
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")


def brute_conv(seq: Sequence, k: int, r: int, n: int) -> int:
    """sum over m = 0..n of term(k*m + r) * term(k*(n-m) + r)."""
    _validate(k, r, n)
    sub = _strided(seq.key, k, r, n)
    return sum(sub[m] * sub[n - m] for m in range(n + 1))


_FAMILIES = {s.key: s for s in (BALANCING, LUCAS_BALANCING, FIBONACCI, LUCAS)}


@lru_cache(maxsize=None)
def _t(key: str, n: int) -> int:
    return term(_FAMILIES[key], n)


def _strided(key: str, k: int, r: int, n: int) -> list[int]:
    return [_t(key, k * m + r) for m in range(n + 1)]


# -- inner weights -----------------------------------------------------------
#
# Weight w(j) multiplies (n - j + 1) * term(k*(n-j+1) + r) inside each closed
# form; it depends on (family, k, r, j) only, so powers of the conjugate bases
# are built incrementally and shared across every n of a sweep.


@lru_cache(maxsize=None)
def _invpow(base, j: int):
    """(1/base)^(j+1), built incrementally; base is a Fraction, QuadRat, or
    GaussQuad (all hashable)."""
    if j == 0:
        return base.inverse() if isinstance(base, (QuadRat, GaussQuad)) else 1 / base
    return _invpow(base, j - 1) * _invpow(base, 0)


@lru_cache(maxsize=None)
def _weight_balancing(k: int, r: int, j: int) -> Fraction:
    bk, br, bkr = _t("balancing", k), _t("balancing", r), _t("balancing", k - r)
    plus = _invpow(Fraction(bk + br), j)
    minus = _invpow(Fraction(bk - br), j)
    return Fraction(bk * bkr ** j, 2) * ((-1) ** j * plus + minus)


@lru_cache(maxsize=None)
def _weight_lucas_balancing(k: int, r: int, j: int) -> GaussQuad:
    bk = _t("balancing", k)
    cr, ckr = _t("lucas-balancing", r), _t("lucas-balancing", k - r)
    x = QuadRat.of(0, 2 * bk, 2)  # 2 sqrt(2) B(k)
    plus = _invpow(GaussQuad.of(x, QuadRat.of(cr, 0, 2)), j)
    minus = _invpow(GaussQuad.of(x, QuadRat.of(-cr, 0, 2)), j)
    rot = GaussQuad.of(QuadRat.of(0, 0, 2), QuadRat.of(ckr, 0, 2)) ** j  # (C(k-r) i)^j
    return rot * x * Fraction(1, 2) * (plus + (-1) ** j * minus)


@lru_cache(maxsize=None)
def _weight_fibonacci(k: int, r: int, j: int):
    fk, fr, fkr = _t("fibonacci", k), _t("fibonacci", r), _t("fibonacci", k - r)
    sign = (-1) ** (k * j)
    if (k - r) % 2 == 0:
        plus = _invpow(Fraction(fk + fr), j)
        minus = _invpow(Fraction(fk - fr), j)
        return sign * Fraction(fk * fkr ** j, 2) * ((-1) ** j * plus + minus)
    plus = _invpow(GaussQuad.of(Fraction(fk), Fraction(fr), 5), j)
    minus = _invpow(GaussQuad.of(Fraction(fk), Fraction(-fr), 5), j)
    rot = GaussQuad.of(Fraction(0), Fraction(fkr), 5) ** j  # (F(k-r) i)^j
    return rot * Fraction(sign * fk, 2) * (plus + (-1) ** j * minus)


@lru_cache(maxsize=None)
def _weight_lucas(k: int, r: int, j: int):
    fk = _t("fibonacci", k)
    lr, lkr = _t("lucas", r), _t("lucas", k - r)
    sign = (-1) ** ((r + 1) * j)
    x = QuadRat.of(0, fk, 5)  # sqrt(5) F(k)
    if (k - r) % 2 == 0:
        plus = _invpow(GaussQuad.of(x, QuadRat.of(lr, 0, 5)), j)
        minus = _invpow(GaussQuad.of(x, QuadRat.of(-lr, 0, 5)), j)
        rot = GaussQuad.of(QuadRat.of(0, 0, 5), QuadRat.of(lkr, 0, 5)) ** j
        return rot * x * Fraction(sign, 2) * ((-1) ** j * plus + minus)
    plus_base = x + lr
    minus_base = x - lr
    if minus_base.norm() == 0:
        raise ValueError(f"vanishing conjugate denominator at k={k}, r={r}")
    plus = _invpow(plus_base, j)
    minus = _invpow(minus_base, j)
    return x * Fraction(sign * lkr ** j, 2) * ((-1) ** j * plus + minus)


_WEIGHTS = {
    "balancing": _weight_balancing,
    "lucas-balancing": _weight_lucas_balancing,
    "fibonacci": _weight_fibonacci,
    "lucas": _weight_lucas,
}

# Families whose weighted sum is subtracted from +(n+1)*term(k(n+1)+r) rather
# than added to its negative; Fibonacci dispatches on the parity of k - r.
def _subtract_form(key: str, k: int, r: int) -> bool:
    if key == "lucas-balancing":
        return True
    odd = (k - r) % 2 == 1
    if key == "fibonacci":
        return odd
    if key == "lucas":
        return not odd
    return False


def closed_form_raw(seq: Sequence, k: int, r: int, n: int):
    """The closed-form total before rationality extraction: a Fraction,
    QuadRat, or GaussQuad whose irrational parts must vanish identically."""
    _validate(k, r, n)
    if seq.key not in _WEIGHTS:
        raise ValueError(f"no convolution closed form for {seq}")
    weight = _WEIGHTS[seq.key]
    edge = (n + 1) * _t(seq.key, k * (n + 1) + r)
    inner = sum(
        weight(k, r, j) * ((n - j + 1) * _t(seq.key, k * (n - j + 1) + r))
        for j in range(n + 1)
    )
    outer = _t(seq.key, k - r)
    if _subtract_form(seq.key, k, r):
        return outer * (edge - inner)
    return outer * (-edge + inner)


def conv_closed(seq: Sequence, k: int, r: int, n: int) -> int:
    """Closed-form convolution value, certified free of irrational residue."""
    return certified_int(closed_form_raw(seq, k, r, n))


def conv_balancing_closed(k: int, r: int, n: int) -> int:
    return conv_closed(BALANCING, k, r, n)


def conv_lucas_balancing_closed(k: int, r: int, n: int) -> int:
    return conv_closed(LUCAS_BALANCING, k, r, n)


def conv_fibonacci_closed(k: int, r: int, n: int) -> int:
    return conv_closed(FIBONACCI, k, r, n)


def conv_lucas_closed(k: int, r: int, n: int) -> int:
    return conv_closed(LUCAS, k, r, n)


def conv_balancing_r0(k: int, n: int) -> int:
    """Simplified r = 0 balancing form:
    B(k) * sum over l = 1..floor((n+1)/2) of (n - 2l + 1) B(k(n - 2l + 1))."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    total = sum(
        (n - 2 * l + 1) * _t("balancing", k * (n - 2 * l + 1))
        for l in range(1, (n + 1) // 2 + 1)
    )
    return _t("balancing", k) * total
