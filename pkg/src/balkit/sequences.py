"""Integer linear-recurrence kernels: balancing, Lucas-balancing, Fibonacci,
Lucas, and generalized Fibonacci terms at arbitrary (including negative)
indices, plus a logarithmic-time pair algorithm for the balancing couple."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple


class IndexedTerm(NamedTuple):
    n: int
    value: int


@dataclass(frozen=True)
class Sequence:
    """Two-term recurrence S(n) = mult*S(n-1) + add*S(n-2) with fixed seeds.

    `key` selects the negative-index extension: balancing terms reflect as
    -S(n), their companions as +S(n), Fibonacci as (-1)^(n+1) S(n), Lucas as
    (-1)^n S(n).  Generalized Fibonacci sequences reject negative indices.
    """

    key: str
    mult: int
    add: int
    seed0: int
    seed1: int
    param: int | None = None

    def __str__(self) -> str:
        if self.key == "gen-fibonacci":
            return f"{self.key}({self.param})"
        return self.key


BALANCING = Sequence("balancing", 6, -1, 0, 1)
LUCAS_BALANCING = Sequence("lucas-balancing", 6, -1, 1, 3)
FIBONACCI = Sequence("fibonacci", 1, 1, 0, 1)
LUCAS = Sequence("lucas", 1, 1, 2, 1)


def gen_fibonacci(a: int) -> Sequence:
    """Sequence G(n) = a*G(n-1) + G(n-2), G(0)=0, G(1)=1, for integer a >= 1."""
    if a < 1:
        raise ValueError(f"gen-fibonacci parameter must be >= 1, got {a}")
    return Sequence("gen-fibonacci", a, 1, 0, 1, param=a)


def term(seq: Sequence, n: int) -> int:
    """Exact term of `seq` at index n, iterating the recurrence from the seeds."""
    if n < 0:
        return _reflect(seq, n)
    prev, cur = seq.seed0, seq.seed1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, seq.mult * cur + seq.add * prev
    return cur


def _reflect(seq: Sequence, n: int) -> int:
    v = term(seq, -n)
    if seq.key == "balancing":
        return -v
    if seq.key == "lucas-balancing":
        return v
    if seq.key == "fibonacci":
        return v if n % 2 else -v
    if seq.key == "lucas":
        return -v if n % 2 else v
    raise ValueError(f"negative index {n} not defined for {seq}")


def stream(seq: Sequence, start: int, stop: int) -> list[IndexedTerm]:
    """Terms for start <= n <= stop (inclusive) in one linear recurrence pass."""
    if start > stop:
        raise ValueError(f"empty range: start {start} > stop {stop}")
    prev, cur = term(seq, start), term(seq, start + 1)
    out = [IndexedTerm(start, prev)]
    for n in range(start + 1, stop + 1):
        out.append(IndexedTerm(n, cur))
        prev, cur = cur, seq.mult * cur + seq.add * prev
    return out


def values(seq: Sequence, start: int, stop: int) -> list[int]:
    """Bare values of stream(), for callers that index arithmetically."""
    return [t.value for t in stream(seq, start, stop)]


def pair_fast(n: int) -> tuple[int, int]:
    """(balancing, Lucas-balancing) pair at index n >= 0 in O(log n) multiplications.

    Doubling laws: B(2m) = 2 B(m) C(m), C(2m) = 2 C(m)^2 - 1, and for odd
    targets B(2m+1) = B(m) C(m+1) + B(m+1) C(m), C(2m+1) = C(m) C(m+1)
    + 8 B(m) B(m+1), with the neighbor pair B(m+1) = 3 B(m) + C(m),
    C(m+1) = 8 B(m) + 3 C(m).
    """
    if n < 0:
        raise ValueError(f"pair_fast requires n >= 0, got {n}")
    b, c = 0, 1
    for bit in bin(n)[2:]:
        if bit == "1":
            b1, c1 = 3 * b + c, 8 * b + 3 * c
            b, c = b * c1 + b1 * c, c * c1 + 8 * b * b1
        else:
            b, c = 2 * b * c, 2 * c * c - 1
    return b, c


def pair_mod(n: int, modulus: int) -> tuple[int, int]:
    """pair_fast(n) reduced mod `modulus` at every step."""
    if n < 0:
        raise ValueError(f"pair_mod requires n >= 0, got {n}")
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    b, c = 0, 1 % modulus
    for bit in bin(n)[2:]:
        if bit == "1":
            b1, c1 = (3 * b + c) % modulus, (8 * b + 3 * c) % modulus
            b, c = (b * c1 + b1 * c) % modulus, (c * c1 + 8 * b * b1) % modulus
        else:
            b, c = (2 * b * c) % modulus, (2 * c * c - 1) % modulus
    return b, c


def is_balancing(x: int) -> bool:
    """True iff x >= 1 occurs in the balancing sequence: 8x^2 + 1 is a perfect square."""
    if x < 1:
        raise ValueError(f"is_balancing requires x >= 1, got {x}")
    y = 8 * x * x + 1
    r = isqrt(y)
    return r * r == y
