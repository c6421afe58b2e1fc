"""Executable instance checks for the balancing-number identity catalog.

Every checker evaluates both sides of its identity in exact integer
arithmetic over caller-supplied parameters and returns a Verdict; a failing
Verdict carries the first counterexample as (label, params, lhs, rhs).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd

from .sequences import BALANCING, LUCAS_BALANCING, pair_mod, term


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def _verdict(equalities) -> Verdict:
    """Fold (label, params, lhs, rhs) equalities into a Verdict."""
    for label, params, lhs, rhs in equalities:
        if lhs != rhs:
            return Verdict(False, (label, params, lhs, rhs))
    return Verdict(True)


@lru_cache(maxsize=None)
def _B(n: int) -> int:
    return term(BALANCING, n)


@lru_cache(maxsize=None)
def _C(n: int) -> int:
    return term(LUCAS_BALANCING, n)


def check_catalan(n: int, r: int) -> Verdict:
    """B(n-r)B(n+r) = B(n)^2 - B(r)^2 and C(n-r)C(n+r) = C(n)^2 + C(r)^2 - 1."""
    if not n >= r >= 0:
        raise ValueError(f"need n >= r >= 0, got n={n}, r={r}")
    return _verdict([
        ("B", (n, r), _B(n - r) * _B(n + r), _B(n) ** 2 - _B(r) ** 2),
        ("C", (n, r), _C(n - r) * _C(n + r), _C(n) ** 2 + _C(r) ** 2 - 1),
    ])


def check_odd_index_sum(n: int) -> Verdict:
    """B(1) + B(3) + ... + B(2n-1) = B(n)^2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = sum(_B(2 * i - 1) for i in range(1, n + 1))
    return _verdict([("sum", (n,), total, _B(n) ** 2)])


def check_shifted_product(a: int, b: int) -> Verdict:
    """B(a+b+1) = B(a+1)B(b+1) - B(a)B(b)."""
    if a < 0 or b < 0:
        raise ValueError(f"need a, b >= 0, got a={a}, b={b}")
    return _verdict([
        ("B", (a, b), _B(a + b + 1), _B(a + 1) * _B(b + 1) - _B(a) * _B(b)),
    ])


def check_addition(m: int, n: int) -> Verdict:
    """All four index addition/subtraction laws:
    B(n±m) = B(n)C(m) ± B(m)C(n), C(n±m) = C(n)C(m) ± 8 B(m)B(n)."""
    if not n >= m >= 0:
        raise ValueError(f"need n >= m >= 0, got m={m}, n={n}")
    bm, bn, cm, cn = _B(m), _B(n), _C(m), _C(n)
    return _verdict([
        ("B+", (m, n), _B(n + m), bn * cm + bm * cn),
        ("B-", (m, n), _B(n - m), bn * cm - bm * cn),
        ("C+", (m, n), _C(n + m), cn * cm + 8 * bm * bn),
        ("C-", (m, n), _C(n - m), cn * cm - 8 * bm * bn),
    ])


def check_combination(m: int, n: int) -> Verdict:
    """Case-split double-product laws: B(n+m) - 2 B(n)C(m) is -B(n-m) when
    n >= m and +B(m-n) otherwise; C(n+m) - 2 C(n)C(m) = -C(|n-m|)."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    b_rhs = -_B(n - m) if n >= m else _B(m - n)
    return _verdict([
        ("B", (m, n), _B(n + m) - 2 * _B(n) * _C(m), b_rhs),
        ("C", (m, n), _C(n + m) - 2 * _C(n) * _C(m), -_C(abs(n - m))),
    ])


def check_gcd(m: int, n: int) -> Verdict:
    """gcd(B(m), B(n)) = B(gcd(m, n))."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    return _verdict([("gcd", (m, n), gcd(_B(m), _B(n)), _B(gcd(m, n)))])


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed base set is exact below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray((limit - p * p) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def kronecker_p8(p: int) -> int:
    """The mod-8 quadratic character of an odd prime: +1 when p = +-1 (mod 8),
    -1 when p = +-3 (mod 8)."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"need an odd prime, got {p}")
    return 1 if p % 8 in (1, 7) else -1


def check_prime_congruences(p: int) -> Verdict:
    """C(p) = 3 (mod p) and B(p) = kronecker_p8(p) (mod p) for odd primes."""
    sign = kronecker_p8(p)
    bp, cp = pair_mod(p, p)
    return _verdict([
        ("C", (p,), cp % p, 3 % p),
        ("B", (p,), bp % p, sign % p),
    ])


def check_mod_companion(m: int) -> Verdict:
    """B(2m) = 0 and B(2m-1) = 1 modulo the companion term C(m)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    cm = _C(m)
    return _verdict([
        ("B2m", (m,), _B(2 * m) % cm, 0),
        ("B2m-1", (m,), _B(2 * m - 1) % cm, 1 % cm),
    ])


def check_binomial_3pow(n: int) -> Verdict:
    """Parity-cased binomial transforms with weight (-1)^(n-k) 3^k:
    the B-weighted sum gives 2^(3n/2) B(n) (n even) or 2^(3(n-1)/2) C(n)
    (n odd); the C-weighted sum gives 2^(3n/2) C(n) or 2^(3(n+1)/2) B(n)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    sb = sum(comb(n, k) * (-1) ** (n - k) * 3 ** k * _B(k) for k in range(n + 1))
    sc = sum(comb(n, k) * (-1) ** (n - k) * 3 ** k * _C(k) for k in range(n + 1))
    if n % 2 == 0:
        rb = 2 ** (3 * n // 2) * _B(n)
        rc = 2 ** (3 * n // 2) * _C(n)
    else:
        rb = 2 ** (3 * (n - 1) // 2) * _C(n)
        rc = 2 ** (3 * (n + 1) // 2) * _B(n)
    return _verdict([("B", (n,), sb, rb), ("C", (n,), sc, rc)])


def check_binomial_plain(n: int) -> Verdict:
    """Row-2n binomial sums: plain weights give 8^n B(n) / 8^n C(n),
    alternating weights give 4^n B(n) / 4^n C(n)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    eqs = []
    for label, f in (("B", _B), ("C", _C)):
        plain = sum(comb(2 * n, k) * f(k) for k in range(2 * n + 1))
        alt = sum(comb(2 * n, k) * (-1) ** k * f(k) for k in range(2 * n + 1))
        eqs.append((label + "+", (n,), plain, 8 ** n * f(n)))
        eqs.append((label + "-", (n,), alt, 4 ** n * f(n)))
    return _verdict(eqs)


def check_second_order_product(n: int) -> Verdict:
    """B(n)B(n-4) - B(n-1)B(n-3) = -35 for n >= 4."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return _verdict([
        ("B", (n,), _B(n) * _B(n - 4) - _B(n - 1) * _B(n - 3), -35),
    ])
