"""Irreducible factorization over Q, delegated to sympy.

This is the one place the package leans on a computer-algebra dependency:
everything else is hand-rolled exact arithmetic, but reimplementing Zassenhaus
factorization would buy nothing.  The import is deferred so that the rest of
the package stays cheap to load.
"""
from __future__ import annotations

from fractions import Fraction

from .unipoly import UniPoly


def factor_rational(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of p over Q with multiplicities.

    The constant content is dropped; factors are sorted by degree and then by
    coefficients so the output is deterministic.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Add(
        *(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))
    )
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append((UniPoly(coeffs).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out
