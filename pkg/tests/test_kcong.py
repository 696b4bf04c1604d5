from fractions import Fraction as F

import pytest

from trapcong import kcong
from trapcong.ecq import j_invariant


def test_curve_k():
    assert kcong.curve_k(2, 2).A == -36
    with pytest.raises(ValueError):
        kcong.curve_k(2, 1)
    assert all(j_invariant(kcong.curve_k(n, k)) == 1728 for n in range(1, 11) for k in range(2, 11))


def test_point_to_trapezoid():
    E = kcong.curve_k(2, 2)
    t = kcong.point_to_trapezoid_k(2, 2, E.point(12, 36))
    assert t.area == 2 and t.a == 2 * t.d
    with pytest.raises(kcong.DegeneratePointError):
        kcong.point_to_trapezoid_k(2, 2, E.point(0, 0))


def test_nnn_witness():
    assert kcong.nnn_witness(2).sides() == (F(8, 3), 1, F(5, 3), F(4, 3))
    for n in range(2, 21):
        t = kcong.nnn_witness(n)
        assert t.area == n and t.k == n


def test_cubic_identity():
    for n in range(1, 1001):
        for k, m in kcong.cubic_identity_solutions(n):
            assert n * (k * k - 1) == m**3 - m


def test_fundamental_unit():
    assert kcong.fundamental_unit(2) == (3, 2)
    assert kcong.fundamental_unit(61) == (1766319049, 226153980)
    with pytest.raises(ValueError):
        kcong.fundamental_unit(16)


@pytest.mark.parametrize("lam, n", [(1, 2), (1, 5), (2, 10), (2, 13), (3, 13), (3, 17), (4, 17), (4, 18), (4, 80)])
def test_pell_families(lam, n):
    P = kcong.pell_reduce(n, lam)
    sols = kcong.pell_solve(P, want=4)
    assert len(sols) >= 3
    for a, b in sols:
        assert P.holds(a, b)
        k = kcong.pell_to_k(n, lam, a, b)
        assert k is not None and (k * k - 1) * n == a**4 - b**4


def test_pell_table_match():
    sols = kcong.pell_solve(kcong.pell_reduce(2, 1), want=4)
    assert (4, 2) in sols and (14, 8) in sols
    assert [kcong.pell_to_k(2, 1, a, b) for a, b in sols][1:3] == [11, 131]


def test_pell_no_integer_k_when_parity_blocks():
    # alpha odd, beta even makes alpha^2 - beta^2 odd, never divisible by 2
    for a, b in kcong.pell_solve(kcong.pell_reduce(52, 2), want=6):
        assert (a - b) % 2 == 1
        assert kcong.pell_to_k(52, 2, a, b) is None


def test_quartic_search_against_brute():
    for n in range(2, 8):
        brute = sorted(
            kcong.QuarticRow(n, k, a, b)
            for a in range(2, 60) for b in range(1, a)
            for k in range(2, 201)
            if (k * k - 1) * n == a**4 - b**4
        )
        assert kcong.quartic_search(n, 200) == brute


def test_fixed_k_family():
    for k in range(2, 11):
        n, t = kcong.prop31_witness(k)
        assert n == k * k + 1 and t.area == n and t.k == k


def test_find_k_witness_sources():
    assert kcong.find_k_witness(3, 3)[1] == "n^3-n"
    t, src = kcong.find_k_witness(2, 11)
    assert src == "quartic" and t.area == 2
    t, src = kcong.find_k_witness(5, 2)
    assert t.area == 5
