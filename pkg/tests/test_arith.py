from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from trapcong.arith import (
    as_rat, factorize, iroot, is_prime, is_square, is_squarefree, parse_rat, primes_up_to,
    rat_sqrt, rat_str, v2,
)


def test_primes_up_to_matches_sympy():
    assert primes_up_to(10_000) == list(sympy.primerange(2, 10_001))
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]


@given(st.integers(min_value=-5, max_value=10**30))
@settings(max_examples=300)
def test_is_prime_matches_sympy(n):
    assert is_prime(n) == sympy.isprime(n)


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


@given(st.integers(min_value=1, max_value=10**18))
@settings(max_examples=200)
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, e in f.items():
        assert is_prime(p)
        prod *= p**e
    assert prod == n


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=6))
def test_iroot_is_floor(n, k):
    r = iroot(n, k)
    assert r**k <= n < (r + 1) ** k


def test_small_predicates():
    assert [n for n in range(30) if is_square(n)] == [0, 1, 4, 9, 16, 25]
    assert not is_square(-4)
    assert v2(96) == 5 and v2(7) == 0
    assert is_squarefree(30) and not is_squarefree(12) and is_squarefree(1)


def test_rationals():
    assert as_rat("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_rat(0.5)
    assert rat_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rat_sqrt(2) is None
    assert rat_str(3) == "3/1"
    assert rat_str(Fraction(-4, 6)) == "-2/3"
    assert parse_rat(rat_str(Fraction(22, 7))) == Fraction(22, 7)
