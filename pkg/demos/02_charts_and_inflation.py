"""Chart normalisation (with its rational obstructions) and the three
root-of-unity inflation constructions."""
from abelpell import PellTriple, inflate, normalize, pell_solve
from abelpell.parsing import parse_poly

# A solution already in the strictest chart is a fixed point of normalize.
t = pell_solve(parse_poly("x^2-2"), 5)
print("normalized chart fixed point:", normalize(t.p, t.q, t.r, "normalized"))

# Making (2x^4+1, 2x^2) monic would need a 4th root of 2, which Q lacks.
obstruction = normalize(
    parse_poly("2*x^4+1"), parse_poly("2*x^2"), parse_poly("x^4+1"), "monic"
)
print("obstruction:", obstruction)

# A shift x -> x - 1/2 clears the odd part of R for (x^2+x, 1, (x^2+x)^2-1).
p = parse_poly("x^2+x")
print("after shift:", normalize(p, parse_poly("1"), p * p - 1, "normalized"))

# Inflation along s -> s^m: the three divisibility cases.
base = pell_solve(parse_poly("x^2-2"), 5)
print("\ncase divides_g_plus_1, m=2:", inflate(base, 2, "divides_g_plus_1"))

base = PellTriple.build(parse_poly("x+1"), parse_poly("1"), parse_poly("x^2+2*x"))
print("case odd,            m=3:", inflate(base, 3, "odd"))
print("case even_half,      m=2:", inflate(base, 2, "even_half"))
print("(the last one is exactly pell_solve(x^2+2))")
