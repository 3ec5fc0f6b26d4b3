"""Arithmetic in Q[t]/(m(t)) for m monic irreducible, and squarefree
splitting of univariate polynomials with coefficients in that field.

Field elements are residues represented by their unique representative of
degree < deg m.  Polynomials over the extension are plain lists of elements,
constant term first -- enough machinery for the Yun decomposition used when a
branch value only exists after an algebraic extension.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .unipoly import Rat, UniPoly, constant


@dataclass(frozen=True)
class ExtField:
    """The field Q[t]/(modulus); irreducibility is the caller's contract."""

    modulus: UniPoly

    def __post_init__(self):
        if self.modulus.degree < 1 or not self.modulus.is_monic():
            raise ValueError("modulus must be monic of degree >= 1")

    def element(self, rep: UniPoly | Rat) -> ExtElem:
        if not isinstance(rep, UniPoly):
            rep = constant(rep)
        return ExtElem(self, rep % self.modulus)

    def zero(self) -> ExtElem:
        return self.element(0)

    def one(self) -> ExtElem:
        return self.element(1)

    def generator(self) -> ExtElem:
        """The residue class of t (a root of the modulus)."""
        return self.element(UniPoly((0, 1)))


@dataclass(frozen=True)
class ExtElem:
    field: ExtField
    rep: UniPoly

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _lift(self, other: ExtElem | Rat) -> ExtElem:
        if isinstance(other, ExtElem):
            if other.field.modulus != self.field.modulus:
                raise ValueError("elements of different fields")
            return other
        return self.field.element(other)

    def __add__(self, other: ExtElem | Rat) -> ExtElem:
        other = self._lift(other)
        return ExtElem(self.field, (self.rep + other.rep) % self.field.modulus)

    __radd__ = __add__

    def __neg__(self) -> ExtElem:
        return ExtElem(self.field, -self.rep)

    def __sub__(self, other: ExtElem | Rat) -> ExtElem:
        return self + (-self._lift(other))

    def __mul__(self, other: ExtElem | Rat) -> ExtElem:
        other = self._lift(other)
        return ExtElem(self.field, (self.rep * other.rep) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self) -> ExtElem:
        """Inverse by the extended Euclidean algorithm; fails only if the
        modulus was not actually irreducible (or the element is zero)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in extension field")
        # Invariants: old_r = old_s*rep + old_t*modulus (t-coefficients dropped).
        old_r, r = self.rep, self.field.modulus
        old_s, s = UniPoly((1,)), UniPoly(())
        while not r.is_zero():
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
        if old_r.degree != 0:
            raise ValueError("modulus is not irreducible: nontrivial gcd found")
        return ExtElem(self.field, (old_s * (1 / old_r.leading)) % self.field.modulus)

    def __truediv__(self, other: ExtElem | Rat) -> ExtElem:
        return self * self._lift(other).inverse()

    def __str__(self) -> str:
        return str(self.rep).replace("x", "t")


# -- polynomials over the extension (lists of ExtElem, constant first) --------


def lift_poly(field: ExtField, p: UniPoly) -> list[ExtElem]:
    return [field.element(c) for c in p.coeffs]


def _trim(cs: list[ExtElem]) -> list[ExtElem]:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def ext_degree(cs: list[ExtElem]) -> int:
    return len(cs) - 1


def ext_sub(a: list[ExtElem], b: list[ExtElem], field: ExtField) -> list[ExtElem]:
    out = []
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else field.zero()
        y = b[i] if i < len(b) else field.zero()
        out.append(x - y)
    return _trim(out)


def ext_mul(a: list[ExtElem], b: list[ExtElem], field: ExtField) -> list[ExtElem]:
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def ext_divmod(
    a: list[ExtElem], b: list[ExtElem], field: ExtField
) -> tuple[list[ExtElem], list[ExtElem]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    inv_lead = b[-1].inverse()
    quo = [field.zero()] * max(len(rem) - len(b) + 1, 0)
    for i in range(len(rem) - 1, len(b) - 2, -1):
        c = rem[i] * inv_lead
        if c.is_zero():
            continue
        quo[i - (len(b) - 1)] = c
        for j, y in enumerate(b):
            rem[i - (len(b) - 1) + j] = rem[i - (len(b) - 1) + j] - c * y
    return quo, _trim(rem)


def ext_exact_div(a: list[ExtElem], b: list[ExtElem], field: ExtField) -> list[ExtElem]:
    quo, rem = ext_divmod(a, b, field)
    if rem:
        raise ValueError("inexact division over extension field")
    return quo


def ext_monic(a: list[ExtElem]) -> list[ExtElem]:
    inv = a[-1].inverse()
    return [c * inv for c in a]


def ext_gcd(a: list[ExtElem], b: list[ExtElem], field: ExtField) -> list[ExtElem]:
    while b:
        a, b = b, ext_divmod(a, b, field)[1]
    return ext_monic(a) if a else a


def ext_derivative(a: list[ExtElem]) -> list[ExtElem]:
    return _trim([c * Fraction(i) for i, c in enumerate(a) if i > 0])


def ext_squarefree(cs: list[ExtElem], field: ExtField) -> list[tuple[list[ExtElem], int]]:
    """Yun decomposition over the extension (characteristic zero)."""
    if not cs:
        raise ValueError("squarefree decomposition of zero")
    out: list[tuple[list[ExtElem], int]] = []
    if ext_degree(cs) == 0:
        return out
    f = ext_monic(cs)
    df = ext_derivative(f)
    a = ext_gcd(f, df, field)
    b = ext_exact_div(f, a, field)
    c = ext_sub(ext_exact_div(df, a, field), ext_derivative(b), field)
    m = 1
    while ext_degree(b) > 0:
        g = ext_gcd(b, c, field)
        if ext_degree(g) > 0:
            out.append((g, m))
        b = ext_exact_div(b, g, field)
        c = ext_sub(ext_exact_div(c, g, field), ext_derivative(b), field)
        m += 1
    return out


def multiplicity_partition(field: ExtField, p: UniPoly, shift: ExtElem) -> tuple[int, ...]:
    """Root-multiplicity partition of p(x) - shift over the algebraic closure.

    Each squarefree factor of degree d and multiplicity m contributes d parts
    equal to m; parts sum to deg p.  Returned sorted descending.
    """
    cs = lift_poly(field, p)
    cs[0] = cs[0] - shift
    parts: list[int] = []
    for factor, mult in ext_squarefree(_trim(cs), field):
        parts.extend([mult] * ext_degree(factor))
    return tuple(sorted(parts, reverse=True))
