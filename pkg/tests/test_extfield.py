import pytest

from abelpell.extfield import ExtField, multiplicity_partition
from abelpell.unipoly import poly


def test_field_arithmetic():
    # Q(sqrt 2): t^2 - 2.
    field = ExtField(poly(-2, 0, 1))
    t = field.generator()
    assert (t * t).rep == poly(2)
    assert (t * t.inverse()).rep == poly(1)
    assert ((t + 1) * (t - 1)).rep == poly(1)  # (sqrt2 + 1)(sqrt2 - 1) = 1
    with pytest.raises(ZeroDivisionError):
        field.zero().inverse()


def test_reducible_modulus_detected_on_inverse():
    field = ExtField(poly(-1, 0, 1))  # t^2 - 1 is not irreducible
    bad = field.element(poly(-1, 1))  # t - 1 is a zero divisor
    with pytest.raises(ValueError):
        bad.inverse()


def test_multiplicity_partition_rational_point():
    field = ExtField(poly(-3, 1))  # trivial extension, theta = 3
    base = poly(-1, 1) ** 2 * poly(2, 1)  # (x - 1)^2 (x + 2)
    assert multiplicity_partition(field, base + 3, field.generator()) == (2, 1)


def test_multiplicity_partition_true_extension():
    field = ExtField(poly(-2, 0, 1))  # theta = sqrt 2
    # x^4 - 2 - theta is separable over Q(theta).
    assert multiplicity_partition(field, poly(-2, 0, 0, 0, 1), field.generator()) == (1, 1, 1, 1)
    # (x^2 - 2)^2 has the two roots +-theta, each double.
    quartic = poly(-2, 0, 1) ** 2
    assert multiplicity_partition(field, quartic, field.zero()) == (2, 2)
    assert multiplicity_partition(field, poly(0, 0, 0, 0, 1), field.zero()) == (4,)
