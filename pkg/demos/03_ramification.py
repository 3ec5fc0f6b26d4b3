"""Ramification specifications, Hurwitz counts and deformation dimensions of
the line maps induced by Pell solutions."""
from abelpell import (
    PellTriple,
    assigned_profile,
    hurwitz_report,
    polt_dimension,
    ramspec_of,
    unassigned_branch,
)
from abelpell.parsing import parse_poly


def triple(p, q, r):
    return PellTriple.build(parse_poly(p), parse_poly(q), parse_poly(r))


examples = [
    triple("x^2-1", "x", "x^2-2"),
    triple("x^2", "1", "x^4-1"),
    triple("2*x^4+1", "2*x^2", "x^4+1"),
    triple("x^3+x", "1", "(x^3+x)^2-1"),  # conjugate irrational branch values
]

for t in examples:
    print(t)
    plus, minus, infinity = assigned_profile(t)
    print(f"  fibre over +1: {list(plus)}, over -1: {list(minus)}, over inf: {list(infinity)}")
    for cls in unassigned_branch(t):
        print(f"  unassigned: {cls.count} conjugate point(s) of {cls.factor} with partition {list(cls.partition)}")
    spec = ramspec_of(t)
    report = hurwitz_report(t)
    print(f"  e = {report.e}, e' = {report.e_prime}, w = {report.w} (= 2g+2)")
    print(f"  generic stratum: {report.generic_stratum}")
    print(f"  deformation dimension: {polt_dimension(spec)} (= genus {t.genus})\n")
