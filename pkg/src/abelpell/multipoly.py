"""Sparse multivariate polynomials over exact rationals.

Terms are kept in a dict mapping exponent tuples (one entry per variable) to
nonzero Fraction coefficients; the variable list is fixed per polynomial and
must agree between operands.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .unipoly import Rat, _as_fraction

Exponent = tuple[int, ...]


class MultiPoly:
    """A polynomial in finitely many named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[Exponent, Rat] = ()):
        self.variables = tuple(variables)
        clean: dict[Exponent, Fraction] = {}
        for exp, c in dict(terms).items():
            c = _as_fraction(c)
            if c == 0:
                continue
            if len(exp) != len(self.variables):
                raise ValueError("exponent length does not match variable count")
            clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, variables: tuple[str, ...]) -> MultiPoly:
        return cls(variables)

    @classmethod
    def const(cls, variables: tuple[str, ...], c: Rat) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: tuple[str, ...], name: str) -> MultiPoly:
        i = variables.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exp: 1})

    # -- predicates --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------------------

    def _check(self, other: MultiPoly) -> None:
        if self.variables != other.variables:
            raise ValueError("operands use different variable lists")

    def __add__(self, other: MultiPoly | Rat) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly | Rat) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __mul__(self, other: MultiPoly | Rat) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- display ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.variables, exp)
                if k
            ]
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if c < 0 else body))
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"
