"""Rational generating functions of the strided subsequences S(k*n + r) and
their exact power-series expansion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import LUCAS, LUCAS_BALANCING, Sequence, term


@dataclass(frozen=True)
class RationalGF:
    """numer(t) / denom(t) with integer coefficients, ascending powers,
    denom(0) != 0."""

    numer: tuple[int, ...]
    denom: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.denom or self.denom[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def __str__(self) -> str:
        return f"({_poly_str(self.numer)}) / ({_poly_str(self.denom)})"


def _poly_str(coeffs: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            body = t if abs(c) == 1 else f"{abs(c)}*{t}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def gf(seq: Sequence, k: int, r: int) -> RationalGF:
    """Closed-form generating function of n |-> term(seq, k*n + r), k > r >= 0.

    Balancing-type families share the denominator 1 - 2*C(k)*t + t^2; the
    Fibonacci/Lucas pair uses 1 - L(k)*t + (-1)^k t^2 with sign-twisted
    numerators.
    """
    if not k > r >= 0:
        raise ValueError(f"need k > r >= 0, got k={k}, r={r}")
    if seq.key == "balancing":
        ck = term(LUCAS_BALANCING, k)
        return RationalGF((term(seq, r), term(seq, k - r)), (1, -2 * ck, 1))
    if seq.key == "lucas-balancing":
        return RationalGF((term(seq, r), -term(seq, k - r)), (1, -2 * term(seq, k), 1))
    if seq.key in ("fibonacci", "lucas"):
        # The strided subsequence obeys x(n) = L(k) x(n-1) - (-1)^k x(n-2);
        # the degree-one numerator coefficient is x(1) - L(k) x(0), which is
        # +(-1)^r F(k-r) for Fibonacci but -(-1)^r L(k-r) for Lucas.
        lk = term(LUCAS, k)
        sign = -1 if r % 2 else 1
        if seq.key == "lucas":
            sign = -sign
        return RationalGF(
            (term(seq, r), sign * term(seq, k - r)),
            (1, -lk, -1 if k % 2 else 1),
        )
    raise ValueError(f"no generating function catalog for {seq}")


def expand(g: RationalGF, count: int) -> list[int]:
    """First `count` Taylor coefficients of g, via the recurrence the
    denominator induces: d0*c[n] = numer[n] - sum(d[i]*c[n-i], i >= 1).
    Each coefficient is certified to be an integer."""
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    d0 = Fraction(g.denom[0])
    coeffs: list[int] = []
    exact: list[Fraction] = []
    for n in range(count):
        acc = Fraction(g.numer[n]) if n < len(g.numer) else Fraction(0)
        for i in range(1, min(n, len(g.denom) - 1) + 1):
            acc -= g.denom[i] * exact[n - i]
        c = acc / d0
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer series coefficient at t^{n}: {c}")
        exact.append(c)
        coeffs.append(int(c))
    return coeffs


def series_mul(xs: list[int], ys: list[int], count: int) -> list[int]:
    """First `count` coefficients of the Cauchy product of two coefficient
    prefixes (both must supply at least `count` entries)."""
    if len(xs) < count or len(ys) < count:
        raise ValueError("operand prefixes shorter than requested product")
    return [sum(xs[m] * ys[n - m] for m in range(n + 1)) for n in range(count)]
