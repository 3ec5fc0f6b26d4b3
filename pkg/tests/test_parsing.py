import random
from fractions import Fraction

import pytest

from abelpell.parsing import ParseError, parse_poly
from abelpell.unipoly import UniPoly, format_poly, poly


def test_basic_examples():
    assert parse_poly("x^2-2").coeffs == (Fraction(-2), Fraction(0), Fraction(1))
    assert parse_poly("(x^2+1)*(x^2-1)") == poly(-1, 0, 0, 0, 1)
    assert parse_poly("0") == UniPoly(())
    assert parse_poly("3/4") == poly(Fraction(3, 4))
    assert parse_poly("2*x + 1/2") == poly(Fraction(1, 2), 2)
    assert parse_poly("-x^2") == poly(0, 0, -1)
    assert parse_poly("(x+1)^3") == poly(1, 3, 3, 1)


def test_negative_exponent_rejected():
    with pytest.raises(ParseError) as err:
        parse_poly("x^-1")
    assert err.value.position == 2


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x^2 + ")
    assert err.value.position == 6
    with pytest.raises(ParseError) as err:
        parse_poly("x + $")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_poly("(x+1")
    assert "expected ')'" in str(err.value)


def test_unknown_identifier():
    with pytest.raises(ParseError) as err:
        parse_poly("x + y")
    assert "unknown identifier 'y'" in str(err.value)
    # but any single consistent name is fine
    assert parse_poly("t^2 - 2") == poly(-2, 0, 1)
    with pytest.raises(ParseError):
        parse_poly("t^2 - 2", var="x")


def test_no_implicit_multiplication():
    with pytest.raises(ParseError):
        parse_poly("2x")


def test_huge_exponent_rejected():
    with pytest.raises(ParseError):
        parse_poly("x^1000000")


def test_roundtrip_fixtures(triples):
    for t in triples:
        for p in (t.p, t.q, t.r):
            assert parse_poly(format_poly(p)) == p


def test_roundtrip_random():
    rng = random.Random(17)
    for _ in range(50):
        coeffs = [
            Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(rng.randint(0, 7))
        ]
        p = UniPoly(coeffs)
        assert parse_poly(format_poly(p)) == p
