"""Integer and rational helpers shared by every other module.

Rationals are plain :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator on construction.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd
from math import isqrt

__all__ = [
    "Fraction",
    "gcd",
    "isqrt",
    "is_square",
    "iroot",
    "is_prime",
    "primes_up_to",
    "factorize",
    "is_squarefree",
    "v2",
    "rat_sqrt",
    "as_rat",
    "rat_str",
    "parse_rat",
]

# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


def gcd(a: int, b: int) -> int:
    return _gcd(a, b)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k + 1)
    # Newton correction; float seed may be off by a few units for large n.
    while r ** k > n:
        r = ((k - 1) * r + n // r ** (k - 1)) // k
    while (r + 1) ** k <= n:
        r += 1
    return r


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return (n & -n).bit_length() - 1


def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return all(_miller_rabin(n, a) for a in _MR_BASES)
    # Beyond the proven range; nothing in this package gets here.
    from sympy import isprime

    return bool(isprime(n))


def primes_up_to(x: int) -> list[int]:
    """All primes p <= x in increasing order (sieve of Eratosthenes)."""
    if x < 2:
        return []
    sieve = bytearray([1]) * (x + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(x) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, x + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; factorize(1) == {}."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f, step = 7, 4
    # wheel mod 6: 7, 11, 13, 17, ...
    while f * f <= n and f <= 10**6:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += step
        step = 6 - step
    if n > 1:
        for p, e in _factor_large(n).items():
            out[p] = out.get(p, 0) + e
    return dict(sorted(out.items()))


def _factor_large(n: int) -> dict[int, int]:
    if n == 1:
        return {}
    if is_prime(n):
        return {n: 1}
    d = _pollard_rho(n)
    left = _factor_large(d)
    for p, e in _factor_large(n // d).items():
        left[p] = left.get(p, 0) + e
    return left


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def as_rat(v) -> Fraction:
    """Coerce int / Fraction / 'p/q' string to Fraction."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(v)


def rat_sqrt(q) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    q = as_rat(q)
    if q < 0:
        raise ValueError("rat_sqrt of a negative rational")
    # numerator and denominator are coprime, so both must be squares
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def rat_str(q) -> str:
    """Always 'num/den', including integers ('3/1')."""
    q = as_rat(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s: str) -> Fraction:
    return Fraction(s)
