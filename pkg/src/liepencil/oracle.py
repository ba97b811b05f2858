"""Independent numeric checker for skew matrix pencils.

This module never touches the symbolic machinery.  It works with explicit
rational matrices: build a pencil out of canonical blocks, scramble it by a
congruence, and recover the invariants from the numbers alone.  The point of
the duplication is to have two routes to the same answer, so the classifier
and the oracle can be played against each other in tests and in the
``check`` command.

Block conventions (sizes in matrix rows):

* ``JordanBlock(mu, k)`` is the 2k x 2k pair
  A = [[0, J], [-J^T, 0]],  B = [[0, I], [-I, 0]]
  with J the k x k upper Jordan block with eigenvalue mu.  The pencil
  A + t*B drops rank exactly at t = -mu.
* ``InfiniteJordanBlock(k)`` swaps the roles: A carries the identity and B
  the nilpotent block, so the rank of B alone drops but det(A + t*B) stays
  constant.
* ``KroneckerBlock(k)`` is the (2k+1) x (2k+1) pair built from the k x (k+1)
  strips [I | 0] and [0 | I]; it is singular for every t.  k = 0 gives the
  1 x 1 zero pair.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Mapping, Sequence

from . import ratmat, unipoly
from .classify import ClassificationReport, Verdict, classify, _draw_values
from .errors import SingularMatrix
from .model import LieAlgebra, build_ax, substitute_params

__all__ = [
    "JordanBlock",
    "InfiniteJordanBlock",
    "KroneckerBlock",
    "NumericPencil",
    "assemble",
    "congruence",
    "PencilTypeReport",
    "pencil_type",
    "TrialOutcome",
    "CrossCheckReport",
    "cross_check",
]


def _jordan_cell(mu: Fraction, k: int) -> list[list[Fraction]]:
    cell = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        cell[i][i] = Fraction(mu)
        if i + 1 < k:
            cell[i][i + 1] = Fraction(1)
    return cell


def _skew_wrap(top: Sequence[Sequence[Fraction]], rows: int, cols: int):
    """[[0, T], [-T^T, 0]] as one (rows+cols) square matrix."""
    n = rows + cols
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(rows):
        for j in range(cols):
            out[i][rows + j] = Fraction(top[i][j])
            out[rows + j][i] = -Fraction(top[i][j])
    return out


@dataclass(frozen=True)
class JordanBlock:
    eigenvalue: Fraction
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("Jordan block size must be at least 1")

    @property
    def matrix_size(self) -> int:
        return 2 * self.size

    def pair(self):
        k = self.size
        eye = [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
        return (
            _skew_wrap(_jordan_cell(self.eigenvalue, k), k, k),
            _skew_wrap(eye, k, k),
        )


@dataclass(frozen=True)
class InfiniteJordanBlock:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("Jordan block size must be at least 1")

    @property
    def matrix_size(self) -> int:
        return 2 * self.size

    def pair(self):
        k = self.size
        eye = [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
        return (
            _skew_wrap(eye, k, k),
            _skew_wrap(_jordan_cell(Fraction(0), k), k, k),
        )


@dataclass(frozen=True)
class KroneckerBlock:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("Kronecker block size must be non-negative")

    @property
    def matrix_size(self) -> int:
        return 2 * self.size + 1

    def pair(self):
        k = self.size
        strip_a = [[Fraction(1 if j == i else 0) for j in range(k + 1)] for i in range(k)]
        strip_b = [[Fraction(1 if j == i + 1 else 0) for j in range(k + 1)] for i in range(k)]
        return (
            _skew_wrap(strip_a, k, k + 1),
            _skew_wrap(strip_b, k, k + 1),
        )


class NumericPencil:
    """A pair of equal-sized skew-symmetric rational matrices."""

    __slots__ = ("a", "b", "size")

    def __init__(self, a_rows, b_rows):
        a = [[Fraction(v) for v in row] for row in a_rows]
        b = [[Fraction(v) for v in row] for row in b_rows]
        n = len(a)
        if len(b) != n or any(len(r) != n for r in a) or any(len(r) != n for r in b):
            raise ValueError("pencil matrices must be square and equally sized")
        if not (ratmat.is_skew(a) and ratmat.is_skew(b)):
            raise ValueError("pencil matrices must be skew-symmetric")
        self.a = a
        self.b = b
        self.size = n

    def at(self, t: Fraction) -> list[list[Fraction]]:
        t = Fraction(t)
        return [
            [x + t * y for x, y in zip(ra, rb)]
            for ra, rb in zip(self.a, self.b)
        ]


def assemble(blocks) -> NumericPencil:
    """Block-diagonal pencil from canonical blocks, in the order given."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("at least one block is required")
    n = sum(bl.matrix_size for bl in blocks)
    a = [[Fraction(0)] * n for _ in range(n)]
    b = [[Fraction(0)] * n for _ in range(n)]
    offset = 0
    for bl in blocks:
        ba, bb = bl.pair()
        m = bl.matrix_size
        for i in range(m):
            for j in range(m):
                a[offset + i][offset + j] = ba[i][j]
                b[offset + i][offset + j] = bb[i][j]
        offset += m
    return NumericPencil(a, b)


def congruence(pencil: NumericPencil, p_rows) -> NumericPencil:
    """Transform by an invertible P: (A, B) -> (P^T A P, P^T B P)."""
    p = [[Fraction(v) for v in row] for row in p_rows]
    if len(p) != pencil.size or any(len(r) != pencil.size for r in p):
        raise ValueError("congruence matrix size does not match the pencil")
    if ratmat.det(p) == 0:
        raise SingularMatrix("congruence matrix is singular")
    pt = ratmat.transpose(p)
    return NumericPencil(
        ratmat.matmul(pt, ratmat.matmul(pencil.a, p)),
        ratmat.matmul(pt, ratmat.matmul(pencil.b, p)),
    )


# -- type recovery -------------------------------------------------------------


@dataclass(frozen=True)
class PencilTypeReport:
    """Everything the numeric analysis can say about one pencil.

    ``p0`` is the primitive gcd of the rank-sized minor Pfaffians of A + t*B,
    stored densely in ascending powers of t.  ``char_numbers`` are its
    rational roots (the values of t where the rank drops) with
    multiplicities; ``residual`` is the rootless cofactor left over after
    dividing them out, and ``char_complete`` records whether the root search
    ran to the end.  ``infinite_count`` counts Jordan blocks living at
    t = infinity, visible as a rank deficit of B alone.
    """

    verdict: Verdict
    size: int
    rank: int
    corank: int
    p0: tuple[Fraction, ...]
    char_numbers: tuple[tuple[Fraction, int], ...]
    char_complete: bool
    residual: tuple[Fraction, ...]
    has_infinite: bool
    infinite_count: int
    method: str

    @property
    def p0_degree(self) -> int:
        return unipoly.deg(list(self.p0))

    def p0_text(self, var: str = "t") -> str:
        return unipoly.format_poly(list(self.p0), var=var)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "size": self.size,
            "rank": self.rank,
            "corank": self.corank,
            "p0": self.p0_text(),
            "p0_degree": self.p0_degree,
            "char_numbers": [[str(r), m] for r, m in self.char_numbers],
            "char_complete": self.char_complete,
            "has_infinite": self.has_infinite,
            "infinite_count": self.infinite_count,
            "method": self.method,
        }


_MINOR_BUDGET = 20000


def _certified_rank(pencil: NumericPencil) -> int:
    """max rank of A + t*B over t = 0..n equals the generic rank.

    Any single evaluation only bounds the rank from below, but a nonzero
    r x r minor of the pencil is a polynomial in t of degree at most n, so
    among n+1 distinct sample points at least one must miss all of its
    roots.
    """
    best = 0
    for t in range(pencil.size + 1):
        best = max(best, ratmat.rank(pencil.at(Fraction(t))))
        if best == pencil.size:
            break
    return best


def _minor_cost(n: int, r: int) -> int:
    total = 0
    for k in range(0, r + 1, 2):
        total += math.comb(n, k)
        if total > _MINOR_BUDGET:
            break
    return total


def _int_pair(pencil: NumericPencil):
    """Clear denominators with one shared factor; p0 is scale-invariant
    after taking primitive parts, and the characteristic numbers do not
    move because A and B are scaled together."""
    scale = 1
    for rows in (pencil.a, pencil.b):
        for row in rows:
            for v in row:
                d = v.denominator
                scale = scale * d // math.gcd(scale, d)
    a = [[int(v * scale) for v in row] for row in pencil.a]
    b = [[int(v * scale) for v in row] for row in pencil.b]
    return a, b


def _pencil_entries(pencil: NumericPencil) -> list[list[unipoly.Poly]]:
    a, b = _int_pair(pencil)
    return [
        [
            unipoly.trim([Fraction(a[i][j]), Fraction(b[i][j])])
            for j in range(pencil.size)
        ]
        for i in range(pencil.size)
    ]


def _p0_by_minors(pencil: NumericPencil, r: int) -> unipoly.Poly:
    entries = _pencil_entries(pencil)
    memo: dict[tuple[int, ...], unipoly.Poly] = {(): [Fraction(1)]}

    def pf(idx: tuple[int, ...]) -> unipoly.Poly:
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first = idx[0]
        total: unipoly.Poly = []
        sign = 1
        for t in range(1, len(idx)):
            entry = entries[first - 1][idx[t] - 1]
            if entry:
                term = unipoly.mul(entry, pf(idx[1:t] + idx[t + 1:]))
                total = unipoly.add(total, term if sign > 0 else unipoly.neg(term))
            sign = -sign
        memo[idx] = total
        return total

    acc: unipoly.Poly | None = None
    for subset in itertools.combinations(range(1, pencil.size + 1), r):
        value = pf(subset)
        if not value:
            continue
        acc = value if acc is None else unipoly.gcd_poly(acc, value)
        if unipoly.deg(acc) == 0:
            break
    return unipoly.primitive(acc) if acc else [Fraction(1)]


def _good_points(pencil: NumericPencil, r: int, count: int) -> list[Fraction]:
    points = []
    t = 0
    # at most n values of t can be rank-deficient, so this always terminates
    while len(points) < count:
        tv = Fraction(t)
        if ratmat.rank(pencil.at(tv)) == r:
            points.append(tv)
        t += 1
    return points


def _p0_by_deflation(pencil: NumericPencil, r: int) -> unipoly.Poly:
    """Split off the singular part and take det on the regular quotient.

    The kernels of A + t*B at enough regular points span exactly the
    growing parts of the singular blocks (a Vandermonde argument: each
    singular block contributes a polynomial curve of kernels whose degree
    is bounded by half the block size).  Pairing that span U with its image
    Y = A(U) + B(U) and passing to ann(Y)/U removes every singular block
    and leaves the regular part, where p0 is just the square root of the
    determinant.
    """
    n = pencil.size
    u_span = ratmat.SpanBuilder(n)
    for t in _good_points(pencil, r, n // 2 + 1):
        for vec in ratmat.kernel(pencil.at(t)):
            u_span.add(vec)
    u_basis = u_span.basis()

    y_span = ratmat.SpanBuilder(n)
    for vec in u_basis:
        y_span.add(ratmat.mat_vec(pencil.a, vec))
        y_span.add(ratmat.mat_vec(pencil.b, vec))
    y_basis = y_span.basis()

    if y_basis:
        w_basis = [[Fraction(v) for v in row] for row in ratmat.kernel(y_basis)]
    else:
        w_basis = ratmat.identity(n)

    # coset representatives for ann(Y)/U
    rep_span = ratmat.SpanBuilder(n)
    for vec in u_basis:
        rep_span.add(vec)
    reps = [w for w in w_basis if rep_span.add(w)]
    if not reps:
        return [Fraction(1)]

    def form(mat, u, v):
        return sum(x * y for x, y in zip(u, ratmat.mat_vec(mat, v)))

    q = len(reps)
    qa = [[form(pencil.a, reps[i], reps[j]) for j in range(q)] for i in range(q)]
    qb = [[form(pencil.b, reps[i], reps[j]) for j in range(q)] for i in range(q)]
    quotient = NumericPencil(qa, qb)
    det = unipoly.pencil_det(*_int_pair(quotient))
    if not det:
        raise ArithmeticError("deflated pencil is singular; rank certificate failed")
    root = unipoly.sqrt_perfect(unipoly.primitive(det))
    if root is None:
        raise ArithmeticError("determinant of a skew pencil must be a perfect square")
    return unipoly.primitive(root)


def pencil_type(pencil: NumericPencil, method: str = "auto") -> PencilTypeReport:
    """Recover the block-structure invariants of one numeric pencil.

    ``method`` picks how p0 is computed: "minors" enumerates rank-sized
    principal Pfaffians (faithful to the definition, exponential in the
    size), "deflation" quotients out the singular part first (polynomial
    cost), "auto" switches on an operation estimate.  Both must agree; the
    tests hold them against each other.
    """
    if method not in ("auto", "minors", "deflation"):
        raise ValueError(f"unknown method {method!r}")
    n = pencil.size
    r = _certified_rank(pencil)
    corank = n - r
    rank_b = ratmat.rank(pencil.b)
    infinite_count = (r - rank_b) // 2
    has_infinite = rank_b < r

    chosen = method
    if method == "auto":
        chosen = "minors" if _minor_cost(n, r) <= _MINOR_BUDGET else "deflation"
    if chosen == "minors":
        p0 = _p0_by_minors(pencil, r)
    else:
        p0 = _p0_by_deflation(pencil, r)

    if corank == 0:
        verdict = Verdict.JORDAN
    elif unipoly.deg(p0) > 0 or has_infinite:
        verdict = Verdict.MIXED
    else:
        verdict = Verdict.KRONECKER

    roots, residual, complete = unipoly.rational_roots(list(p0))
    return PencilTypeReport(
        verdict=verdict,
        size=n,
        rank=r,
        corank=corank,
        p0=tuple(p0),
        char_numbers=tuple(roots),
        char_complete=complete,
        residual=tuple(residual),
        has_infinite=has_infinite,
        infinite_count=infinite_count,
        method=chosen,
    )


# -- agreement with the symbolic classifier ------------------------------------


@dataclass(frozen=True)
class TrialOutcome:
    x_point: tuple[int, ...]
    a_point: tuple[int, ...]
    param_values: Mapping[str, Fraction]
    report: PencilTypeReport
    agrees: bool


@dataclass(frozen=True)
class CrossCheckReport:
    symbolic: ClassificationReport
    trials: tuple[TrialOutcome, ...]

    @property
    def ok(self) -> bool:
        """Generic draws reproduce the symbolic verdict; degenerate draws
        can disagree, so one agreeing trial is the bar, and every
        disagreement is surfaced for inspection."""
        return any(t.agrees for t in self.trials)

    def disagreements(self) -> list[TrialOutcome]:
        return [t for t in self.trials if not t.agrees]


_COORD_RANGE = 1000


def cross_check(
    alg: LieAlgebra,
    trials: int = 5,
    seed: int = 0,
    name: str | None = None,
) -> CrossCheckReport:
    """Replay the classification numerically at random integer points.

    Each trial fixes the parameters (when there are any), draws integer
    points x0 and a0, and hands the evaluated pair (A at x0, A at a0) to
    the numeric analysis.  Agreement is judged against the symbolic
    verdict at the same parameter values, so a draw that lands on a
    degenerate locus of a family still has to match; any disagreement
    points at the engines, not at the sampling.
    """
    symbolic = classify(alg, name=name)
    rng = Random(seed)
    outcomes = []
    for _ in range(trials):
        if alg.param_names():
            values = _draw_values(alg, rng)
            bound = substitute_params(alg, values)
            reference = classify(bound)
        else:
            values = {}
            bound = alg
            reference = symbolic
        matrix = build_ax(bound)
        x0 = tuple(rng.randint(-_COORD_RANGE, _COORD_RANGE) for _ in range(alg.dim))
        a0 = tuple(rng.randint(-_COORD_RANGE, _COORD_RANGE) for _ in range(alg.dim))
        a_rows = matrix.evaluate({f"x{k}": x0[k - 1] for k in range(1, alg.dim + 1)})
        b_rows = matrix.evaluate({f"x{k}": a0[k - 1] for k in range(1, alg.dim + 1)})
        report = pencil_type(NumericPencil(a_rows, b_rows))
        outcomes.append(
            TrialOutcome(
                x_point=x0,
                a_point=a0,
                param_values=values,
                report=report,
                agrees=report.verdict == reference.verdict,
            )
        )
    return CrossCheckReport(symbolic=symbolic, trials=tuple(outcomes))
