"""A tour of the exact symbolic layer.

Builds a few polynomials over a variable registry, then assembles a skew
matrix of linear forms and checks the classical Pfaffian identities on it.
Run with: python3 demos/01_polynomials_and_pfaffians.py
"""

from fractions import Fraction

from liepencil import SkewPolyMatrix, VarRegistry, pfaffian

reg = VarRegistry(4, params=("t",))
x1, x2 = reg.coordinate(1), reg.coordinate(2)
t = reg.parameter("t")

print("== polynomial arithmetic is exact ==")
p = (x1 + 2 * x2) * (x1 - t) + Fraction(1, 3)
print("p          =", p)
print("p - p      =", p - p)
print("p(1, 2, t=1/2) =", p.evaluate({"x1": 1, "x2": 2, "x3": 0, "x4": 0,
                                      "a1": 0, "a2": 0, "a3": 0, "a4": 0,
                                      "t": Fraction(1, 2)}))

print()
print("== a skew matrix of linear forms ==")
m = SkewPolyMatrix(4, reg, {
    (1, 2): x1,
    (1, 3): x2,
    (2, 4): x1 - x2,
    (3, 4): 2 * x1,
})
for row in m.rows():
    print("  [", ",  ".join(f"{e!s:>8}" for e in row), "]")

pf = pfaffian(m)
print()
print("Pf(M)      =", pf)
print("Pf(M)^2    =", pf * pf)

# congruence covariance: Pf(P^T M P) = det(P) Pf(M)
p_int = [
    [1, 0, 0, 0],
    [2, 1, 0, 0],
    [0, -1, 1, 0],
    [1, 0, 0, 1],
]
moved = m.congruent(p_int)
print("Pf(P^T M P) =", pfaffian(moved), " (det P = 1)")

print()
print("Principal 2x2 Pfaffians are just the upper entries:")
for pair in ((1, 2), (1, 3), (2, 4)):
    print(f"  Pf(M[{pair}]) =", pfaffian(m, pair))
