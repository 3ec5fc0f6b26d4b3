"""Symbolic verification of stratum-local structure.

Three independent checks live here: a square-testing criterion in the
truncated ring Q[a]/(a^k), the weighted elementary-symmetric identity behind
the non-reduced strata, and the exact tangent rank of the Pell equation at a
chart point.  Everything is decided by exact arithmetic; ranks come from
fraction-free elimination over the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .multipoly import MultiPoly
from .pell import CHART_MONIC, CHART_NORMALIZED, PellTriple
from .unipoly import Rat, UniPoly, _as_fraction

TruncElem = tuple[Fraction, ...]


@dataclass(frozen=True)
class TruncatedRing:
    """Q[a]/(a^k): elements are coefficient tuples of length k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("nilpotency order must be >= 1")

    def element(self, coeffs) -> TruncElem:
        cs = [_as_fraction(c) for c in coeffs][: self.k]
        cs += [Fraction(0)] * (self.k - len(cs))
        return tuple(cs)

    def zero(self) -> TruncElem:
        return self.element(())

    def one(self) -> TruncElem:
        return self.element((1,))

    def gen_power(self, i: int) -> TruncElem:
        """The class of a^i (zero once i reaches the nilpotency order)."""
        if i >= self.k:
            return self.zero()
        return self.element((0,) * i + (1,))

    def add(self, x: TruncElem, y: TruncElem) -> TruncElem:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: TruncElem, y: TruncElem) -> TruncElem:
        return tuple(a - b for a, b in zip(x, y))

    def mul(self, x: TruncElem, y: TruncElem) -> TruncElem:
        out = [Fraction(0)] * self.k
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if i + j >= self.k:
                    break
                out[i + j] += a * b
        return tuple(out)

    def scale(self, c: Rat, x: TruncElem) -> TruncElem:
        c = _as_fraction(c)
        return tuple(c * a for a in x)

    def is_zero(self, x: TruncElem) -> bool:
        return all(a == 0 for a in x)


def odd_nilpotency_check(n: int, k: int) -> bool:
    """Whether sum_{i=0..2n} a^i t^(2n-i) is a square in (Q[a]/(a^k))[t].

    This geometric sum is the exact quotient (t - a^(2n+1))/(t - a); the
    criterion is that it is a square precisely when a^(n+1) = 0, i.e. k <= n+1.
    Decided constructively: the candidate root is extracted coefficientwise
    from the leading term down (the leading coefficient 1 is a unit and the
    sign ambiguity is global, fixed to +), then the remainder is compared to
    zero exactly.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    ring = TruncatedRing(k)
    # q[d] is the t^d coefficient: a^(2n-d).
    q = [ring.gen_power(2 * n - d) for d in range(2 * n + 1)]
    s = [ring.zero()] * (n + 1)
    s[n] = ring.one()
    for j in range(1, n + 1):
        acc = q[2 * n - j]
        for i in range(1, j):
            acc = ring.sub(acc, ring.mul(s[n - i], s[n - j + i]))
        s[n - j] = ring.scale(Fraction(1, 2), acc)
    square = [ring.zero()] * (2 * n + 1)
    for i in range(n + 1):
        for j in range(n + 1):
            square[i + j] = ring.add(square[i + j], ring.mul(s[i], s[j]))
    return all(ring.is_zero(ring.sub(square[d], q[d])) for d in range(2 * n + 1))


# -- weighted elementary-symmetric systems -------------------------------------


@dataclass(frozen=True)
class WeightedSymmetricSystem:
    """The coefficients sigma_j of prod_i (s - a_i)^(e_i - 1) read against
    s^e + sum_j (-1)^j sigma_j s^(e-j), where e = sum (e_i - 1)."""

    exponents: tuple[int, ...]
    total: int
    variables: tuple[str, ...]
    generators: tuple[MultiPoly, ...]


def _s_poly_mul(f: list[MultiPoly], g: list[MultiPoly], vars_: tuple[str, ...]) -> list[MultiPoly]:
    out = [MultiPoly.zero(vars_) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def weighted_sigma(exponents: list[int]) -> WeightedSymmetricSystem:
    """Expand prod_i (s - a_i)^(e_i - 1) and read off the sigma_j.

    The defining identity is re-verified by expanding both sides.
    """
    if not exponents or any(e < 2 for e in exponents):
        raise ValueError("all exponents must be >= 2")
    names = tuple(f"a{i + 1}" for i in range(len(exponents)))
    one = MultiPoly.const(names, 1)
    product = [one]
    for i, e in enumerate(exponents):
        a_i = MultiPoly.var(names, names[i])
        factor = [-a_i, one]  # s - a_i, constant term first in s
        for _ in range(e - 1):
            product = _s_poly_mul(product, factor, names)
    e_total = sum(e - 1 for e in exponents)
    sigmas = tuple(((-1) ** j) * product[e_total - j] for j in range(1, e_total + 1))
    # Re-expansion check: s^e + sum (-1)^j sigma_j s^(e-j) must be the product.
    rebuilt = [MultiPoly.zero(names) for _ in range(e_total + 1)]
    rebuilt[e_total] = one
    for j in range(1, e_total + 1):
        rebuilt[e_total - j] = ((-1) ** j) * sigmas[j - 1]
    if rebuilt != product:
        raise AssertionError("weighted symmetric expansion failed its identity")
    return WeightedSymmetricSystem(tuple(exponents), e_total, names, sigmas)


def nilpotence_identity_check(sys: WeightedSymmetricSystem, i: int) -> bool:
    """Whether a_i^e + sum_j (-1)^j sigma_j a_i^(e-j) = 0 identically.

    True for every valid index (substituting s = a_i kills the product), which
    certifies a_i^e lies in the ideal (sigma_1, ..., sigma_e); i is 1-based.
    """
    if not 1 <= i <= len(sys.exponents):
        raise ValueError(f"index {i} out of range")
    a_i = MultiPoly.var(sys.variables, sys.variables[i - 1])
    acc = a_i**sys.total
    for j in range(1, sys.total + 1):
        acc = acc + ((-1) ** j) * sys.generators[j - 1] * a_i ** (sys.total - j)
    return acc.is_zero()


# -- tangent rank of the chart equations ------------------------------------------


@dataclass(frozen=True)
class TangentReport:
    variables: int
    rank: int
    corank: int


def _integer_rank(rows: list[list[int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination; pivots are exact integers."""
    if not rows:
        return 0
    rows = [row[:] for row in rows]
    m, ncols = len(rows), len(rows[0])
    rank, r, prev = 0, 0, 1
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                num = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]
                quo, rem = divmod(num, prev)
                if rem:
                    raise AssertionError("Bareiss exact division failed")
                rows[i][j] = quo
            rows[i][c] = 0
        prev = rows[r][c]
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def tangent_rank(t: PellTriple) -> TangentReport:
    """Exact rank of the linearised Pell equation at a chart point.

    Perturbations respect the chart: P and Q stay monic of fixed degree, R
    stays monic (and keeps its zero next-to-top coefficient in the normalized
    chart).  The linearisation of P^2 - R*Q^2 - 1 at (P, Q, R) is
    2P dP - 2RQ dQ - Q^2 dR, read as a matrix over Q in the coefficient basis.
    The corank is the chart's tangent dimension: the genus in the normalized
    chart, genus + 1 in the monic chart (the extra translation direction).
    """
    if t.chart not in (CHART_MONIC, CHART_NORMALIZED):
        raise ValueError(f"tangent rank needs the monic or normalized chart, not {t.chart!r}")
    n, g = t.order, t.genus
    p_dirs = [(t.p * 2).shift_degree(j) for j in range(n)]
    q_dirs = [(t.r * t.q * -2).shift_degree(j) for j in range(t.q.degree)]
    r_top = 2 * g + 2 if t.chart == CHART_MONIC else 2 * g + 1
    r_dirs = [(t.q * t.q * -1).shift_degree(j) for j in range(r_top)]
    columns = p_dirs + q_dirs + r_dirs
    nrows = 2 * n
    matrix: list[list[Fraction]] = [
        [col.coeff(d) for col in columns] for d in range(nrows)
    ]
    int_rows = []
    for row in matrix:
        denom = lcm(*(c.denominator for c in row)) if row else 1
        int_rows.append([int(c * denom) for c in row])
    rank = _integer_rank(int_rows)
    return TangentReport(len(columns), rank, len(columns) - rank)
