"""Exact linear algebra over rationals and integers.

Plain lists of lists, no floats.  Rank and kernel computations scale the
input to integers first so that the hot loops run on machine/big integers
instead of Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrix


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_skew(m) -> bool:
    n = len(m)
    return all(
        len(row) == n for row in m
    ) and all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))


def scale_to_int(m) -> list[list[int]]:
    """Multiply by the common denominator; rank and kernel are unaffected."""
    lcm = 1
    for row in m:
        for v in row:
            d = Fraction(v).denominator
            lcm = lcm * d // math.gcd(lcm, d)
    return [[int(Fraction(v) * lcm) for v in row] for row in m]


def rank(m) -> int:
    """Rank over the rationals via fraction-free integer elimination."""
    if not m:
        return 0
    work = scale_to_int(m)
    rows = len(work)
    cols = len(work[0])
    prev = 1
    r = 0
    row = 0
    for col in range(cols):
        pivot = None
        for i in range(row, rows):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        p = work[row][col]
        for i in range(row + 1, rows):
            wi = work[i]
            wr = work[row]
            f = wi[col]
            for j in range(col, cols):
                wi[j] = (p * wi[j] - f * wr[j]) // prev
        prev = p
        r += 1
        row += 1
        if row == rows:
            break
    return r


def kernel(m) -> list[list[int]]:
    """Integer basis of the right null space of a rational matrix."""
    rows = len(m)
    if rows == 0:
        return []
    cols = len(m[0])
    work = [[Fraction(v) for v in row] for row in m]
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        pivot = next((i for i in range(row, rows) if work[i][col]), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pv = work[row][col]
        work[row] = [v / pv for v in work[row]]
        for i in range(rows):
            if i != row and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for r_i, c_i in enumerate(pivots):
            vec[c_i] = -work[r_i][f]
        lcm = 1
        for v in vec:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in vec]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        basis.append([v // g for v in ints] if g > 1 else ints)
    return basis


def det(m) -> Fraction:
    """Determinant by Gaussian elimination over Fractions."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    work = [[Fraction(v) for v in row] for row in m]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        pv = work[col][col]
        result *= pv
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return result * sign


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    work = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            raise SingularMatrix("matrix is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [v / pv for v in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return [row[n:] for row in work]


class SpanBuilder:
    """Incrementally grown row space with exact membership tests."""

    def __init__(self, width: int):
        self.width = width
        self._echelon: list[list[Fraction]] = []
        self._lead: list[int] = []

    def _reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for row, lead in zip(self._echelon, self._lead):
            if v[lead]:
                f = v[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; returns True when it enlarged the span."""
        v = self._reduce(vec)
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        pv = v[lead]
        v = [x / pv for x in v]
        self._echelon.append(v)
        self._lead.append(lead)
        return True

    def contains(self, vec) -> bool:
        return all(not x for x in self._reduce(vec))

    @property
    def dim(self) -> int:
        return len(self._echelon)

    def basis(self) -> list[list[Fraction]]:
        return [list(row) for row in self._echelon]
