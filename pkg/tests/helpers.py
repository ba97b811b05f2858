"""Shared oracles and generators for the test suite.

Everything in here is deliberately naive.  Determinants are Laplace
expansions, Pfaffians are sums over perfect matchings with explicitly
counted inversion signs, and polynomial identities are checked by
evaluating both sides at random rational points.  Slow but obviously
correct at the sizes the tests use, which is the point: the fast code
needs something honest to disagree with.
"""

from __future__ import annotations

import random
from fractions import Fraction

from liepencil.model import LieAlgebra, SkewPolyMatrix
from liepencil.poly import Polynomial, VarRegistry


def laplace_det(rows):
    """Determinant by first-row Laplace expansion.

    Works for entries that support +, -, * (Fractions or Polynomials).
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        entry = rows[0][j]
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = entry * laplace_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def bareiss_det(rows):
    """Fraction-free determinant for matrices of Polynomial entries.

    A different algorithm from both the Laplace oracle and the recursive
    Pfaffian expansion under test, so the three routes are independent.
    """
    from liepencil.poly import div_exact

    work = [list(r) for r in rows]
    n = len(work)
    sign = 1
    prev = None
    for k in range(n):
        piv = next((i for i in range(k, n) if work[i][k]), None)
        if piv is None:
            return rows[0][0] * 0
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = num if prev is None else div_exact(num, prev)
        prev = work[k][k]
    d = work[n - 1][n - 1]
    return d if sign > 0 else -d


def _matchings(indices):
    """Perfect matchings of an even index list, first element matched first."""
    if not indices:
        yield []
        return
    head = indices[0]
    for i in range(1, len(indices)):
        rest = indices[1:i] + indices[i + 1:]
        for tail in _matchings(rest):
            yield [(head, indices[i])] + tail


def _matching_sign(pairs):
    """Sign of the permutation (a1 b1 a2 b2 ...) of the sorted indices."""
    flat = [v for pair in pairs for v in pair]
    inversions = 0
    for i in range(len(flat)):
        for j in range(i + 1, len(flat)):
            if flat[i] > flat[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def pfaffian_matchings(rows):
    """Pfaffian as the signed sum over perfect matchings.

    ``rows`` is a full square array (0-indexed); odd sizes give zero.
    Independent of any expansion-order recursion.
    """
    n = len(rows)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    total = None
    for pairs in _matchings(list(range(n))):
        term = _matching_sign(pairs)
        for a, b in pairs:
            term = rows[a][b] * term
        total = term if total is None else total + term
    return total if total is not None else Fraction(0)


def random_fraction(rng: random.Random, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_point(reg: VarRegistry, rng: random.Random) -> dict:
    """One rational value for every registered variable."""
    return {name: random_fraction(rng) for name in reg.names()}


def polys_equal_at_random(p: Polynomial, q: Polynomial, rng: random.Random,
                          rounds: int = 4) -> bool:
    for _ in range(rounds):
        point = random_point(p.registry, rng)
        if p.evaluate(point) != q.evaluate(point):
            return False
    return True


def random_unimodular(n: int, rng: random.Random, steps: int = 10, cap: int = 60):
    """Integer matrix with determinant +-1, entries bounded by ``cap``.

    Built from elementary operations on the identity: row additions with
    coefficients in [-2, 2], swaps, and sign flips.  An operation that
    would push any entry past the cap is skipped.
    """
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            candidate = [m[i][k] + c * m[j][k] for k in range(n)]
            if max(abs(v) for v in candidate) <= cap:
                m[i] = candidate
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == 2:
            m[i] = [-v for v in m[i]]
    return m


def random_skew_linear(reg: VarRegistry, size: int, rng: random.Random,
                       max_vars: int = 3, coeff: int = 5) -> SkewPolyMatrix:
    """Random skew matrix of linear forms in the coordinates of ``reg``."""
    names = [f"x{k}" for k in range(1, reg.dim + 1)]
    upper = {}
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            entry = reg.zero()
            for name in rng.sample(names, min(max_vars, len(names))):
                c = rng.randint(-coeff, coeff)
                if c:
                    entry = entry + reg.var(name) * c
            if entry:
                upper[(i, j)] = entry
    return SkewPolyMatrix(size, reg, upper)


def algebra_from_table(dim, table, name=""):
    """Build a LieAlgebra from {(i, j): {k: rational}} with i < j."""
    reg = VarRegistry(dim)
    brackets = {
        pair: {k: reg.constant(Fraction(c)) for k, c in comps.items()}
        for pair, comps in table.items()
    }
    return LieAlgebra(dim, reg, brackets=brackets, name=name)
