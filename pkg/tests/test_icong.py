import math

import pytest

from trapcong import icong
from trapcong.arith import is_prime
from trapcong.model import TrapezoidI


def brute_witnesses(n):
    """Every integer i-trapezoid of area n, by direct search over b and d."""
    out = set()
    for b in range(1, 2 * n + 1):
        if (2 * n) % b:
            continue
        s = 2 * n // b  # a + d
        for d in range(0, (s + 1) // 2):
            a = s - d
            c2 = (a - d) ** 2 + b * b
            c = math.isqrt(c2)
            if c * c == c2 and math.gcd(b, c) == 1:
                out.add(TrapezoidI(a, b, c, d))
    return sorted(out)


@pytest.mark.parametrize("n", range(1, 301))
def test_oracle_matches_brute_force(n):
    assert icong.witness_oracle(n) == brute_witnesses(n)


def test_oracle_examples():
    assert set(icong.witness_oracle(6)) == {TrapezoidI(4, 3, 5, 0), TrapezoidI(3, 4, 5, 0)}
    assert icong.witness_oracle(77) == []
    assert TrapezoidI(16, 4, 5, 13) in icong.witness_oracle(58)
    assert TrapezoidI(25, 7, 25, 1) in icong.witness_oracle(91)


def test_classifier_certificates():
    kinds = {(c.branch, c.base, c.cofactor) for c in icong.decompositions(6)}
    assert kinds == {("odd_prime", 3, 2), ("two_power", 2, 3)}
    assert icong.classify_prop11(7) is None
    cert = icong.classify_prop11(91)
    assert cert.base * cert.cofactor == 91


def test_classifier_agrees_with_oracle_small():
    for n in range(1, 3001):
        assert icong.is_i_congruent(n) == bool(icong.oracle_witnesses(n)) == bool(icong.classify_prop11(n)), n


def test_star_forms_up_to_100():
    forms = icong.enumerate_star_forms(100)
    assert ("PQ", 7, 11) in {(f.tag, f.p, f.q) for f in forms[77]}
    assert any(f.tag == "POW2_P" and f.p == 5 and f.i == 2 for f in forms[20])
    assert len(forms) == 40
    assert [n for n, fs in forms.items() if len(fs) > 1] == [4]
    nonprimes = [n for n in forms if not is_prime(n)]
    assert nonprimes == [1, 4, 8, 16, 20, 25, 28, 32, 44, 49, 52, 56, 64, 77, 88]


def test_count_f_modes_agree():
    for x in (100, 1000, 5000):
        assert icong.count_f(x, "star_forms") == icong.count_f(x, "classifier") == icong.count_f(x, "oracle")
    with pytest.raises(ValueError):
        icong.count_f(10, "nope")


def test_list_d0():
    assert [(e.n, e.s, e.t) for e in icong.list_d0(6)] == [(6, 2, 1)]
    vals = [e.n for e in icong.list_d0(1000)]
    assert vals.count(210) == 2 and 990 in vals
    for e in icong.list_d0(10**4):
        a, b, c = e.triangle
        assert a * a + b * b == c * c and a * b == 2 * e.n


def test_intersection_set():
    s = icong.intersection_set(100)
    assert {6, 18, 50, 66} <= set(s)
    assert icong.intersection_set(5) == []


@pytest.mark.parametrize("m, n", [(1, 6), (2, 6), (3, 120)])
def test_multi_witness(m, n):
    got, wits = icong.multi_witness(m)
    assert got == n and len(set(wits)) >= m
    assert all(w.area == n for w in wits)
