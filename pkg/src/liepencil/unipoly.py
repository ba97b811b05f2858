"""Dense univariate polynomials over the rationals, as coefficient lists.

``p[i]`` is the coefficient of the i-th power; the zero polynomial is the
empty list, so there are never trailing zeros.  This tiny layer backs the
numeric pencil oracle and is deliberately independent from the sparse
multivariate ring in :mod:`liepencil.poly`: the two implementations check
each other in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction]


def trim(p) -> Poly:
    q = [Fraction(c) for c in p]
    while q and not q[-1]:
        q.pop()
    return q


def const(c) -> Poly:
    c = Fraction(c)
    return [c] if c else []


def is_zero(p) -> bool:
    return not p


def deg(p) -> int:
    """Degree, with deg(0) = -1 by local convention."""
    return len(p) - 1


def add(p, q) -> Poly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p) -> Poly:
    return [-c for c in p]


def sub(p, q) -> Poly:
    return add(p, neg(q))


def scale(p, c) -> Poly:
    c = Fraction(c)
    if not c:
        return []
    return [v * c for v in p]


def mul(p, q) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p, q) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq = deg(q)
    lc = q[-1]
    while len(r) - 1 >= dq and any(r):
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < dq:
            break
        shift = len(r) - 1 - dq
        f = r[-1] / lc
        quot[shift] = f
        for i, c in enumerate(q):
            r[shift + i] -= f * c
    return trim(quot), trim(r)


def div_exact(p, q) -> Poly:
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ValueError("univariate division was not exact")
    return quot


def evaluate(p, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def primitive(p) -> Poly:
    """Integer-coefficient scalar multiple, coprime, positive leading."""
    if not p:
        return []
    num = 0
    den = 1
    for c in p:
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    factor = Fraction(den, num)
    q = [c * factor for c in p]
    if q[-1] < 0:
        q = neg(q)
    return q


def gcd_poly(p, q) -> Poly:
    """Normalized gcd (primitive, positive leading); gcd(p, 0) = primitive(p)."""
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return primitive(a)


def _sqrt_fraction(c: Fraction):
    if c < 0:
        return None
    n = math.isqrt(c.numerator)
    d = math.isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        return None
    return Fraction(n, d)


def sqrt_perfect(p):
    """Exact square root of a perfect-square polynomial, else None."""
    p = trim(p)
    if not p:
        return []
    if deg(p) % 2 != 0:
        return None
    m = deg(p) // 2
    lead = _sqrt_fraction(p[-1])
    if lead is None:
        return None
    q = [Fraction(0)] * (m + 1)
    q[m] = lead
    for i in range(m - 1, -1, -1):
        k = m + i
        acc = p[k] if k < len(p) else Fraction(0)
        for j in range(i + 1, m):
            if k - j <= m:
                acc -= q[j] * q[k - j]
        q[i] = acc / (2 * lead)
    return q if mul(q, q) == p else None


def format_poly(p, var: str = "lambda") -> str:
    """Human form with descending powers, e.g. ``lambda^2 - 2*lambda + 1``."""
    if not p:
        return "0"
    pieces = []
    first = True
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        negative = c < 0
        mag = -c if negative else c
        if i == 0:
            body = str(mag)
        else:
            vp = var if i == 1 else f"{var}^{i}"
            body = vp if mag == 1 else f"{mag}*{vp}"
        if first:
            pieces.append(f"-{body}" if negative else body)
            first = False
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def _divisors(n: int, bound: int):
    """Sorted positive divisors, or None when factoring would be too costly."""
    n = abs(n)
    if n == 0:
        return None
    if n > bound:
        return None
    divs = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            divs.add(i)
            divs.add(n // i)
        i += 1
    return sorted(divs)


def rational_roots(p, bound: int = 10**12):
    """All rational roots with multiplicities, plus the rootless cofactor.

    Returns ``(roots, residual, complete)`` where roots is a list of
    ``(root, multiplicity)`` pairs.  When the trailing or leading coefficient
    is too large to factor, the search is abandoned and ``complete`` is False.
    """
    p = primitive(p)
    if not p:
        raise ValueError("zero polynomial has every root")
    roots: list[tuple[Fraction, int]] = []
    mult0 = 0
    while p and not p[0]:
        p = p[1:]
        mult0 += 1
    if mult0:
        roots.append((Fraction(0), mult0))
    if deg(p) == 0:
        return roots, p, True
    nums = _divisors(int(p[0]), bound)
    dens = _divisors(int(p[-1]), bound)
    if nums is None or dens is None:
        return roots, p, False
    candidates = sorted(
        {Fraction(s * n, d) for n in nums for d in dens for s in (1, -1)},
        key=lambda f: (abs(f), f < 0),
    )
    for cand in candidates:
        if deg(p) == 0:
            break
        mult = 0
        while evaluate(p, cand) == 0:
            p = div_exact(p, [-cand, Fraction(1)])
            mult += 1
        if mult:
            roots.append((cand, mult))
    return roots, primitive(p), True


def pencil_det(a_rows: Sequence[Sequence[int]], b_rows: Sequence[Sequence[int]]) -> Poly:
    """det(A + t B) for integer matrices, by fraction-free elimination.

    Entries live in Q[t]; every division by the previous pivot is exact, so
    intermediate blowup stays polynomial.
    """
    n = len(a_rows)
    if n == 0:
        return [Fraction(1)]
    work: list[list[Poly]] = [
        [trim([a_rows[i][j], b_rows[i][j]]) for j in range(n)] for i in range(n)
    ]
    prev: Poly = [Fraction(1)]
    sign = 1
    for k in range(n):
        pivot = None
        best = None
        for i in range(k, n):
            for j in range(k, n):
                e = work[i][j]
                if e and (best is None or len(e) < best):
                    best = len(e)
                    pivot = (i, j)
        if pivot is None:
            return []
        pi, pj = pivot
        if pi != k:
            work[k], work[pi] = work[pi], work[k]
            sign = -sign
        if pj != k:
            for row in work:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        pv = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(pv, work[i][j]), mul(work[i][k], work[k][j]))
                work[i][j] = div_exact(num, prev) if num else []
        prev = pv
    result = work[n - 1][n - 1]
    return neg(result) if sign < 0 else result
