from fractions import Fraction

import pytest

from abelpell.multipoly import MultiPoly

AB = ("a", "b")


def test_construction_drops_zeros():
    p = MultiPoly(AB, {(1, 0): 1, (0, 1): 0})
    assert p.terms == {(1, 0): Fraction(1)}
    assert not p.is_zero()
    assert MultiPoly.zero(AB).is_zero()


def test_arithmetic():
    a = MultiPoly.var(AB, "a")
    b = MultiPoly.var(AB, "b")
    square = (a + b) ** 2
    assert square == a * a + 2 * a * b + b * b
    assert (a + b) * (a - b) == a * a - b * b
    assert (a - a).is_zero()


def test_variable_mismatch():
    a = MultiPoly.var(AB, "a")
    c = MultiPoly.var(("c",), "c")
    with pytest.raises(ValueError):
        _ = a + c


def test_str():
    a = MultiPoly.var(AB, "a")
    b = MultiPoly.var(AB, "b")
    assert str(2 * a * a + b - 1) == "2*a^2 + b - 1"
