from fractions import Fraction

import pytest

from abelpell.rationals import rational_sqrt
from abelpell.pell import (
    CHART_GENERAL,
    CHART_MONIC,
    CHART_NORMALIZED,
    Obstruction,
    PellTriple,
    cf_expand,
    fundamental_unit,
    inflate,
    normalize,
    pell_compose,
    pell_power,
    pell_solve,
    pell_verify,
    unit_compose,
)
from abelpell.unipoly import UniPoly, poly

R_MINUS2 = poly(-2, 0, 1)
R_PLUS2 = poly(2, 0, 1)
R_QUARTIC = poly(1, 1, 0, 0, 1)  # x^4 + x + 1


def test_cf_first_convergents():
    steps = cf_expand(R_MINUS2, 1)
    assert (steps[0].p, steps[0].q) == (poly(0, 1), poly(1))
    assert steps[0].norm == poly(2)
    steps = cf_expand(R_PLUS2, 2)
    assert (steps[1].p, steps[1].q) == (poly(1, 0, 1), poly(0, 1))
    assert steps[1].norm == poly(1)


def test_cf_no_constant_norm_for_quartic():
    steps = cf_expand(R_QUARTIC, 10)
    bounded = [s for s in steps if s.p.degree <= 10]
    assert bounded and not any(s.constant_norm for s in bounded)


def test_cf_surd_invariant_and_rejections():
    for step in cf_expand(poly(-3, 1, 1, 0, 0, 0, 1), 8):
        surd = step.surd
        assert surd.b.divides(surd.r - surd.a * surd.a)
    with pytest.raises(ValueError):
        cf_expand(poly(0, 0, 1), 3)  # x^2 is not squarefree
    with pytest.raises(ValueError):
        cf_expand(poly(0, 1), 3)  # odd degree


def test_solve_examples():
    t = pell_solve(R_MINUS2, 5)
    assert (t.p, t.q, t.order) == (poly(-1, 0, 1), poly(0, 1), 2)
    t = pell_solve(R_PLUS2, 5)
    assert (t.p, t.q, t.order) == (poly(1, 0, 1), poly(0, 1), 2)
    assert pell_solve(R_QUARTIC, 10) is None
    with pytest.raises(ValueError):
        pell_solve(R_MINUS2, 0)  # n_max below genus + 1


def test_solve_minimality_against_convergents():
    for r in (R_MINUS2, R_PLUS2, poly(-3, 1, 1, 0, 0, 0, 1)):
        t = pell_solve(r, 12)
        if t is None:
            continue
        # no convergent of smaller degree already has a square constant norm
        for step in cf_expand(r, 12):
            if step.p.degree >= t.order:
                break
            if step.constant_norm:
                assert rational_sqrt(step.norm.constant_value()) is None


def test_fundamental_unit():
    unit = fundamental_unit(R_MINUS2, 5)
    assert (unit.p, unit.q, unit.norm) == (poly(0, 1), poly(1), 2)
    assert fundamental_unit(R_QUARTIC, 10) is None


def test_verify_examples():
    rep = pell_verify(poly(0, 1), poly(1), poly(-1, 0, 1))
    assert rep.valid and rep.order == 1 and rep.genus == 0
    rep = pell_verify(poly(0, 0, 1), poly(1), poly(-1, 0, 0, 0, 1))
    assert rep.valid and (rep.order, rep.genus) == (2, 1)
    assert rep.chart == CHART_NORMALIZED
    rep = pell_verify(poly(0, 1), poly(1), R_MINUS2)
    assert not rep.valid and any("defect" in f for f in rep.failures)


def test_verify_rejects_structure():
    assert not pell_verify(poly(0, 1), UniPoly(()), poly(-1, 0, 1)).valid
    assert not pell_verify(poly(-1, 0, 1), poly(0, 1), poly(-2, 0, 2)).valid  # not monic
    bad_r = poly(0, 0, 1)  # x^2: not squarefree
    assert "squarefree" in " ".join(pell_verify(poly(1, 0, 1) * 0 + 1, poly(1), bad_r).failures)


def test_compose_examples():
    t = PellTriple.build(poly(-1, 0, 1), poly(0, 1), R_MINUS2)
    squared = pell_compose(t, t)
    assert (squared.p, squared.q) == (poly(1, 0, -4, 0, 2), poly(0, -2, 0, 2))
    assert squared.order == 4
    u = PellTriple.build(poly(1, 0, 1), poly(0, 1), R_PLUS2)
    squared = pell_compose(u, u)
    assert (squared.p, squared.q) == (poly(1, 0, 4, 0, 2), poly(0, 2, 0, 2))
    # group identity at the pair level
    p, q = unit_compose(t.p, t.q, poly(1), UniPoly(()), t.r)
    assert (p, q) == (t.p, t.q)


def test_compose_group_laws():
    a = PellTriple.build(poly(-1, 0, 1), poly(0, 1), R_MINUS2)
    b = pell_compose(a, a)
    c = pell_compose(b, a)
    assert pell_compose(a, b) == pell_compose(b, a)
    assert pell_compose(pell_compose(a, b), c) == pell_compose(a, pell_compose(b, c))
    for k in range(1, 6):
        assert pell_power(a, k).order == k * a.order


def test_normalize_fixed_point_and_obstruction():
    out = normalize(poly(-1, 0, 1), poly(0, 1), R_MINUS2, CHART_NORMALIZED)
    assert isinstance(out, PellTriple)
    assert (out.p, out.q, out.r) == (poly(-1, 0, 1), poly(0, 1), R_MINUS2)
    obs = normalize(poly(1, 0, 0, 0, 2), poly(0, 0, 2), poly(1, 0, 0, 0, 1), CHART_MONIC)
    assert isinstance(obs, Obstruction)
    assert obs.root_degree == 4 and obs.radicand == 2
    with pytest.raises(ValueError):
        normalize(poly(0, 1), poly(1), R_MINUS2, CHART_MONIC)  # not a solution


def test_normalize_shift_clears_odd_part():
    p = poly(0, 1, 1)  # x^2 + x
    r = p * p - 1
    out = normalize(p, poly(1), r, CHART_NORMALIZED)
    assert isinstance(out, PellTriple)
    assert out.chart == CHART_NORMALIZED
    # the shift x -> x - 1/2 turns P into x^2 - 1/4; no rescaling is needed
    assert out.p == poly(Fraction(-1, 4), 0, 1)
    assert out.r.is_normalized()


def test_normalize_scaling_recovers_monic_form():
    # The torsor action with a = 2, lambda = 2 moves (x^2-1, x, x^2-2) to a
    # general-chart point; normalize must walk it back.
    p = poly(-1, 0, 4)  # P(2x)
    q = poly(0, 4)  # lambda Q(2x)
    r = poly(Fraction(-1, 2), 0, 1)  # R(2x) / 4
    assert pell_verify(p, q, r).valid
    out = normalize(p, q, r, CHART_MONIC)
    assert isinstance(out, PellTriple)
    assert (out.p, out.q, out.r) == (poly(-1, 0, 1), poly(0, 1), R_MINUS2)


def test_inflate_worked_examples():
    base = PellTriple.build(poly(-1, 0, 1), poly(0, 1), R_MINUS2)
    out = inflate(base, 2, "divides_g_plus_1")
    assert (out.p, out.q, out.r) == (poly(-1, 0, 0, 0, 1), poly(0, 0, 1), poly(-2, 0, 0, 0, 1))
    assert (out.order, out.genus) == (4, 1)

    base2 = PellTriple.build(poly(1, 1), poly(1), poly(0, 2, 1))
    out = inflate(base2, 3, "odd")
    assert (out.p, out.q, out.r) == (poly(1, 0, 0, 1), poly(0, 1), poly(0, 2, 0, 0, 1))
    assert (out.order, out.genus) == (3, 1)

    out = inflate(base2, 2, "even_half")
    assert (out.p, out.q, out.r) == (poly(1, 0, 1), poly(0, 1), poly(2, 0, 1))
    assert (out.order, out.genus) == (2, 0)
    solved = pell_solve(R_PLUS2, 5)
    assert (out.p, out.q, out.r) == (solved.p, solved.q, solved.r)


def test_inflate_rejections():
    base = PellTriple.build(poly(-1, 0, 1), poly(0, 1), R_MINUS2)
    with pytest.raises(ValueError):
        inflate(base, 2, "even_half")  # R(0) != 0
    with pytest.raises(ValueError):
        inflate(base, 1, "divides_g_plus_1")
    base2 = PellTriple.build(poly(1, 1), poly(1), poly(0, 2, 1))
    with pytest.raises(ValueError):
        inflate(base2, 3, "even_half")  # m must be even
    with pytest.raises(ValueError):
        inflate(base2, 2, "odd")  # m must be odd


def test_every_operation_output_verifies(triples):
    for t in triples:
        assert pell_verify(t.p, t.q, t.r).valid
