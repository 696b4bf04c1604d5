import json
from fractions import Fraction as F

import pytest

from trapcong.model import (
    InvalidTrapezoid, TrapezoidD, TrapezoidI, TrapezoidK, check_d, check_i, check_k, from_json,
)


def test_i_valid_and_area():
    t = TrapezoidI(25, 7, 25, 1)
    assert t.area == 91
    assert t.to_json() == {"a": 25, "b": 7, "c": 25, "d": 1}


@pytest.mark.parametrize("sides, msg", [
    ((5, 4, 6, 2), "Pythagoras"),
    ((6, 6, 10, 0), "gcd"),
    ((2, 3, 5, 4), "a > d"),
    ((F(1, 2), 4, 5, 0), "integer"),
])
def test_i_rejects(sides, msg):
    with pytest.raises(InvalidTrapezoid) as e:
        TrapezoidI(*sides)
    assert e.value.kind == "i"
    assert any(msg in v for v in e.value.violations)


def test_k_example():
    t = TrapezoidK(F(8, 3), 1, F(5, 3), F(4, 3), k=2)
    assert t.area == 2
    assert check_k(F(8, 3), 1, F(5, 3), F(4, 3), 3) == ["a = k*d fails"]


def test_d_example():
    t = TrapezoidD(F(10, 3), F(3, 4), F(41, 12), 1)
    assert t.area == 2
    assert check_d(3, 4, 6, 1) == ["Pythagoras a^2 + b^2 = c^2 fails"]
    assert check_d(3, 4, 5, -1) == ["d >= 0 fails"]


def test_json_roundtrip():
    for t in (TrapezoidI(4, 3, 5, 0), TrapezoidK(F(8, 3), 1, F(5, 3), F(4, 3), k=2),
              TrapezoidD(F(10, 3), F(3, 4), F(41, 12), 1)):
        again = from_json(json.loads(json.dumps(t.to_json())))
        assert again == t


def test_check_i_lists_all_problems():
    assert len(check_i(2, 4, 4, 2)) >= 2
