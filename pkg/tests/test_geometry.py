import pytest

from abelpell.geometry import (
    RamSpec,
    assigned_profile,
    branch_polynomial,
    genus_of_ramspec,
    hurwitz_report,
    polt_dimension,
    ramspec_of,
    unassigned_branch,
)
from abelpell.pell import PellTriple, inflate
from abelpell.unipoly import poly

T_GENUS0 = lambda: PellTriple.build(poly(-1, 0, 1), poly(0, 1), poly(-2, 0, 1))
T_GENUS1 = lambda: PellTriple.build(poly(0, 0, 1), poly(1), poly(-1, 0, 0, 0, 1))
T_QUARTIC = lambda: PellTriple.build(poly(1, 0, 0, 0, 2), poly(0, 0, 2), poly(1, 0, 0, 0, 1))


def test_assigned_profile_examples():
    assert assigned_profile(T_GENUS0()) == ((1, 1), (2,), (2,))
    assert assigned_profile(T_GENUS1()) == ((1, 1), (1, 1), (2,))
    assert assigned_profile(T_QUARTIC()) == ((4,), (1, 1, 1, 1), (4,))


def test_unassigned_branch_examples():
    classes = unassigned_branch(T_GENUS1())
    assert len(classes) == 1
    assert classes[0].factor == poly(0, 1) and classes[0].partition == (2,)
    assert unassigned_branch(T_GENUS0()) == []
    assert unassigned_branch(T_QUARTIC()) == []


def test_unassigned_branch_rational_values():
    # x^3 - 3x has critical values -+2 over the critical points +-1.
    p = poly(0, -3, 0, 1)
    t = PellTriple.build(p, poly(1), p * p - 1)
    classes = unassigned_branch(t)
    assert [(c.factor, c.partition) for c in classes] == [
        (poly(-2, 1), (2, 1)),
        (poly(2, 1), (2, 1)),
    ]


def test_unassigned_branch_conjugate_points():
    # x^3 + x has the conjugate critical values t with t^2 = -4/27; both
    # carry the fibre partition (2, 1), computed in Q[t]/(t^2 + 4/27).
    from fractions import Fraction

    p = poly(0, 1, 0, 1)
    t = PellTriple.build(p, poly(1), p * p - 1)
    classes = unassigned_branch(t)
    assert len(classes) == 1
    assert classes[0].factor == poly(Fraction(4, 27), 0, 1)
    assert classes[0].count == 2
    assert classes[0].partition == (2, 1)


def test_ramspec_examples():
    spec = ramspec_of(T_GENUS0())
    assert spec.members == ((2,), (1, 1)) and spec.assigned == ((1, 1), (2,))
    spec = ramspec_of(T_GENUS1())
    assert spec.members == ((2,), (1, 1), (1, 1)) and spec.assigned == ((1, 1), (1, 1))
    inflated = inflate(PellTriple.build(poly(1, 1), poly(1), poly(0, 2, 1)), 3, "odd")
    spec = ramspec_of(inflated)
    assert spec.members == ((3,), (1, 1, 1)) and spec.assigned == ((3,), (1, 1, 1))


def test_genus_of_ramspec():
    assert genus_of_ramspec(ramspec_of(T_GENUS0())) == 0
    assert genus_of_ramspec(ramspec_of(T_GENUS1())) == 1
    assert genus_of_ramspec(ramspec_of(T_QUARTIC())) == 1
    assert genus_of_ramspec(RamSpec(3, ((3,), (1, 1, 1)), ((3,), (1, 1, 1)))) == 1


def test_ramspec_validation():
    with pytest.raises(ValueError):
        RamSpec(3, ((3,), (2, 1)), ((3,), (2, 1)))  # total ramification 3 != 2
    with pytest.raises(ValueError):
        RamSpec(3, ((2,), (1, 1, 1)), ((2,), (1, 1, 1)))  # (2,) does not sum to 3
    with pytest.raises(ValueError):
        RamSpec(2, ((2,), (1, 1)), ((2,), (2,)))  # marked profile not a member twice


def test_polt_dimension_examples():
    assert polt_dimension(ramspec_of(T_GENUS1())) == 1
    assert polt_dimension(ramspec_of(T_QUARTIC())) == 1
    assert polt_dimension(ramspec_of(T_GENUS0())) == 0


def test_hurwitz_examples():
    rep = hurwitz_report(T_GENUS1())
    assert (rep.e, rep.e_prime, rep.w, rep.generic_stratum) == (1, 0, 4, True)
    rep = hurwitz_report(T_GENUS0())
    assert (rep.e, rep.e_prime, rep.w, rep.generic_stratum) == (0, 1, 2, True)
    rep = hurwitz_report(T_QUARTIC())
    assert (rep.e, rep.e_prime, rep.w, rep.generic_stratum) == (0, 1, 4, False)
    assert rep.genus_check


def test_family_invariants(triples):
    from abelpell.unipoly import squarefree_part

    for t in triples:
        spec = ramspec_of(t)
        assert spec.total_ramification() == t.order - 1
        assert genus_of_ramspec(spec) == t.genus
        assert polt_dimension(spec) == t.genus
        assert spec.odd_marked_parts() == 2 * t.genus + 2
        # distinct roots of R = odd parts among the marked profiles
        assert squarefree_part(t.r).degree == spec.odd_marked_parts()
        hurwitz_report(t)  # asserts Riemann-Hurwitz internally


def test_inflated_ramspec_is_pullback():
    # Under s -> s^m a fibre root away from 0 lifts to m roots of the same
    # multiplicity; a root at 0 lifts to one root with multiplicity times m.
    base = PellTriple.build(poly(-1, 0, 1), poly(0, 1), poly(-2, 0, 1))
    assert ramspec_of(base).assigned == ((1, 1), (2,))
    spec = ramspec_of(inflate(base, 2, "divides_g_plus_1"))
    # over +1 the fibre x^2 - 2 lifts off 0; over -1 the double root 0 deepens
    assert spec.assigned == ((1, 1, 1, 1), (4,))
    base23 = PellTriple.build(poly(1, 1), poly(1), poly(0, 2, 1))
    assert ramspec_of(base23).assigned == ((1,), (1,))
    for m, case, expected_assigned in (
        (3, "odd", ((3,), (1, 1, 1))),
        (2, "even_half", ((2,), (1, 1))),
    ):
        spec = ramspec_of(inflate(base23, m, case))
        assert spec.assigned == expected_assigned


def test_branch_polynomial_degree_bound(triples):
    for t in triples:
        b = branch_polynomial(t)
        assert b.degree <= t.order - 1
