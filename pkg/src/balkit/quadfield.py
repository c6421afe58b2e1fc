"""Exact arithmetic in Q(sqrt(d)) and its Gaussian extension Q(sqrt(d))(i).

Elements are immutable; all coordinates are `fractions.Fraction`, so every
operation is exact.  Only the two-step tower rationals < quadratic < Gaussian
quadratic is supported, which is all the closed forms downstream need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Scalar = Union[int, Fraction]


class CancellationError(ArithmeticError):
    """An exact value expected to be a rational integer carried a nonzero
    irrational or imaginary residue (or a fractional part)."""


def _is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class QuadRat:
    """a + b*sqrt(d) with rational a, b and squarefree d >= 2."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        if not _is_squarefree(self.d) or self.d < 2:
            raise ValueError(f"d must be squarefree and >= 2, got {self.d}")

    @classmethod
    def of(cls, a: Scalar, b: Scalar, d: int) -> QuadRat:
        return cls(Fraction(a), Fraction(b), d)

    def _coerce(self, other) -> QuadRat:
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRat(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other) -> QuadRat:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadRat(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.a, -self.b, self.d)

    def __sub__(self, other) -> QuadRat:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadRat:
        return (-self) + other

    def __mul__(self, other) -> QuadRat:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadRat(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadRat:
        return QuadRat(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """a^2 - d b^2, the product with the sqrt(d)-conjugate."""
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadRat:
        # 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - d b^2); the norm vanishes
        # only at zero because sqrt(d) is irrational for squarefree d >= 2.
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        return QuadRat(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other) -> QuadRat:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int) -> QuadRat:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadRat(Fraction(1), Fraction(0), self.d)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRat):
            if other.d != self.d:
                return self.b == 0 == other.b and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b)) if self.b else hash(self.a)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"QuadRat({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.d})"


def sqrt_of(d: int) -> QuadRat:
    """The element sqrt(d) itself."""
    return QuadRat.of(0, 1, d)


@dataclass(frozen=True)
class GaussQuad:
    """re + im*i with re, im in the same Q(sqrt(d))."""

    re: QuadRat
    im: QuadRat

    def __post_init__(self) -> None:
        if self.re.d != self.im.d:
            raise ValueError("re and im must share the radicand")

    @classmethod
    def of(cls, re, im, d: int | None = None) -> GaussQuad:
        if not isinstance(re, QuadRat):
            re = QuadRat.of(re, 0, d)
        if not isinstance(im, QuadRat):
            im = QuadRat.of(im, 0, re.d)
        return cls(re, im)

    @property
    def d(self) -> int:
        return self.re.d

    def _coerce(self, other) -> GaussQuad:
        if isinstance(other, GaussQuad):
            if other.d != self.d:
                raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, QuadRat):
            return GaussQuad(self.re._coerce(other), QuadRat.of(0, 0, self.d))
        if isinstance(other, (int, Fraction)):
            return GaussQuad(QuadRat.of(other, 0, self.d), QuadRat.of(0, 0, self.d))
        return NotImplemented

    def __add__(self, other) -> GaussQuad:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussQuad(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussQuad:
        return GaussQuad(-self.re, -self.im)

    def __sub__(self, other) -> GaussQuad:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> GaussQuad:
        return (-self) + other

    def __mul__(self, other) -> GaussQuad:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussQuad(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussQuad:
        return GaussQuad(self.re, -self.im)

    def norm(self) -> QuadRat:
        """re^2 + im^2, the product with the complex conjugate (a QuadRat)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussQuad:
        nrm = self.norm()
        if nrm == QuadRat.of(0, 0, self.d):
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))(i)")
        inv = nrm.inverse()
        return GaussQuad(self.re * inv, -self.im * inv)

    def __truediv__(self, other) -> GaussQuad:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int) -> GaussQuad:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussQuad.of(1, 0, self.d)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussQuad):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (QuadRat, int, Fraction)):
            zero = QuadRat.of(0, 0, self.d)
            return self.im == zero and self.re == other
        return NotImplemented

    def __hash__(self):
        # Purely real values hash like their QuadRat (and, transitively,
        # rational) counterparts, matching the equality relation.
        if self.im.a == 0 and self.im.b == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussQuad({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return f"({self.re}) + ({self.im})*i"


def certified_fraction(x: Fraction | QuadRat | GaussQuad) -> Fraction:
    """Collapse x to a plain rational, raising CancellationError if any
    sqrt(d) or imaginary component survives."""
    if isinstance(x, GaussQuad):
        if x.im.a != 0 or x.im.b != 0:
            raise CancellationError(f"imaginary residue: {x}")
        x = x.re
    if isinstance(x, QuadRat):
        if x.b != 0:
            raise CancellationError(f"sqrt({x.d}) residue: {x}")
        x = x.a
    return x


def certified_int(x: Fraction | QuadRat | GaussQuad) -> int:
    """Collapse x to a rational integer, raising CancellationError on any residue."""
    f = certified_fraction(x)
    if f.denominator != 1:
        raise CancellationError(f"non-integer value: {f}")
    return int(f)


def binet_pair(n: int) -> tuple[int, int]:
    """(balancing, Lucas-balancing) pair at any integer index, evaluated from the
    closed forms over Q(sqrt(2)) with the two unit powers computed independently:
    B(n) = (u^n - v^n)/(4 sqrt 2), C(n) = (u^n + v^n)/2 for u = 3 + 2 sqrt 2,
    v = 3 - 2 sqrt 2.  The rationality of both results is certified, not assumed.
    """
    u = QuadRat.of(3, 2, 2)
    v = QuadRat.of(3, -2, 2)
    un, vn = u ** n, v ** n
    b = certified_int((un - vn) / QuadRat.of(0, 4, 2))
    c = certified_int((un + vn) / 2)
    return b, c
