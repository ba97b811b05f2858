"""Sparse multivariate polynomials with exact rational coefficients.

Everything downstream computes in one commutative ring: entries of skew
matrices of linear forms, Pfaffians of their principal submatrices, and the
characteristic polynomial extracted from their greatest common divisor.  No
floating point is used anywhere; coefficients are ``fractions.Fraction``.

Representation.  A monomial is a tuple of ``(position, exponent)`` pairs,
sorted by variable position, with zero exponents never stored.  A polynomial
maps monomials to nonzero coefficients; the zero polynomial has an empty term
map and its degree is the sentinel ``NEG_INF``.  Values are never mutated
after construction and every operation is a pure function, so independent
computations can safely share them across threads or processes.

Variable order.  A :class:`VarRegistry` fixes the variable set and the
monomial order for one computation.  Kinds are ordered
``parameters < coordinates < a-points < lambda`` and, inside a kind, a lower
index is the more significant one, so that the displayed leading term of
``x1^2 - 2*x2*x3 + a`` really is ``x1^2``.  Monomials compare by total degree
first and lexicographically second (graded lex).
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import RegistryMismatch

__all__ = [
    "NEG_INF",
    "PENCIL_NAME",
    "VarKind",
    "VarRegistry",
    "Polynomial",
    "content",
    "normalize",
    "try_divide",
    "div_exact",
    "divides",
    "poly_gcd",
]

NEG_INF = float("-inf")

PENCIL_NAME = "lambda"

Scalar = Union[int, Fraction]

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = re.compile(r"^(?:x[0-9]+|a[0-9]+|lambda)$")


class VarKind(enum.Enum):
    PARAMETER = "parameter"
    COORDINATE = "coordinate"
    POINT = "a-point"
    PENCIL = "pencil"


# Rank used when printing the variables inside one monomial: parameters come
# first, the pencil variable last, mirroring how coefficients are read.
_DISPLAY_RANK = {
    VarKind.PARAMETER: 0,
    VarKind.COORDINATE: 1,
    VarKind.POINT: 2,
    VarKind.PENCIL: 3,
}


class VarRegistry:
    """Variable table shared by every polynomial of one computation.

    For an algebra of dimension ``n`` with parameters ``p1, .., pm`` the
    registry holds, from most significant to least:

        lambda > a1 > .. > an > x1 > .. > xn > p1 > .. > pm
    """

    __slots__ = ("dim", "params", "_names", "_kinds", "_pos", "_display")

    def __init__(self, dim: int, params: Sequence[str] = ()):
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("dimension must be a non-negative integer")
        names: list[str] = [PENCIL_NAME]
        kinds: list[VarKind] = [VarKind.PENCIL]
        for k in range(1, dim + 1):
            names.append(f"a{k}")
            kinds.append(VarKind.POINT)
        for k in range(1, dim + 1):
            names.append(f"x{k}")
            kinds.append(VarKind.COORDINATE)
        seen = set()
        for p in params:
            if not _IDENT.match(p):
                raise ValueError(f"invalid parameter name {p!r}")
            if _RESERVED.match(p):
                raise ValueError(f"parameter name {p!r} is reserved")
            if p in seen:
                raise ValueError(f"duplicate parameter name {p!r}")
            seen.add(p)
            names.append(p)
            kinds.append(VarKind.PARAMETER)
        self.dim = dim
        self.params = tuple(params)
        self._names = tuple(names)
        self._kinds = tuple(kinds)
        self._pos = {name: i for i, name in enumerate(names)}
        self._display = tuple(
            (_DISPLAY_RANK[kind], i) for i, kind in enumerate(kinds)
        )

    def __len__(self) -> int:
        return len(self._names)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, VarRegistry):
            return NotImplemented
        return self._names == other._names

    def __hash__(self):
        return hash(self._names)

    def __repr__(self) -> str:
        return f"VarRegistry(dim={self.dim}, params={list(self.params)})"

    def names(self) -> tuple[str, ...]:
        return self._names

    def position(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def name_at(self, pos: int) -> str:
        return self._names[pos]

    def kind_of(self, name: str) -> VarKind:
        return self._kinds[self.position(name)]

    def kind_at(self, pos: int) -> VarKind:
        return self._kinds[pos]

    def display_key(self, pos: int) -> tuple[int, int]:
        return self._display[pos]

    # -- polynomial constructors ------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Scalar) -> "Polynomial":
        c = Fraction(value)
        return Polynomial(self, {(): c} if c else {})

    def var(self, name: str) -> "Polynomial":
        pos = self.position(name)
        return Polynomial(self, {((pos, 1),): Fraction(1)})

    def coordinate(self, k: int) -> "Polynomial":
        return self.var(f"x{k}")

    def point(self, k: int) -> "Polynomial":
        return self.var(f"a{k}")

    def pencil(self) -> "Polynomial":
        return self.var(PENCIL_NAME)

    def parameter(self, name: str) -> "Polynomial":
        if self.kind_of(name) is not VarKind.PARAMETER:
            raise ValueError(f"{name!r} is not a parameter")
        return self.var(name)


Mono = tuple  # tuple[tuple[int, int], ...], sorted by position


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        p1, e1 = m1[i]
        p2, e2 = m2[j]
        if p1 == p2:
            out.append((p1, e1 + e2))
            i += 1
            j += 1
        elif p1 < p2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_div(m1: Mono, m2: Mono):
    """Quotient monomial m1 / m2, or None when not divisible."""
    if not m2:
        return m1
    rest = dict(m1)
    out = []
    for p, e in m2:
        have = rest.pop(p, 0)
        if have < e:
            return None
        if have > e:
            out.append((p, have - e))
    for p, e in rest.items():
        out.append((p, e))
    out.sort()
    return tuple(out)


def _mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


class Polynomial:
    """Immutable sparse polynomial over a :class:`VarRegistry`."""

    __slots__ = ("registry", "_terms")

    def __init__(self, registry: VarRegistry, terms: dict):
        self.registry = registry
        self._terms = {m: c for m, c in terms.items() if c}

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_constant():
            return self._terms[()]
        raise ValueError(f"{self} is not constant")

    def terms(self) -> Iterator[tuple[Mono, Fraction]]:
        return iter(self._terms.items())

    def term_count(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Mono) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def variables(self) -> set[str]:
        names = self.registry._names
        return {names[p] for m in self._terms for p, _ in m}

    # -- monomial order ----------------------------------------------------

    def _key(self, mono: Mono):
        dense = [0] * len(self.registry)
        for p, e in mono:
            dense[p] = e
        return (_mono_degree(mono), tuple(dense))

    def leading(self) -> tuple[Mono, Fraction]:
        """Greatest term under graded lex; errors on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=self._key)
        return m, self._terms[m]

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: self._key(t[0]), reverse=True)

    # -- degrees -----------------------------------------------------------

    def total_degree(self):
        if not self._terms:
            return NEG_INF
        return max(_mono_degree(m) for m in self._terms)

    def degree_in(self, kinds: Iterable[VarKind]):
        """Largest total exponent of variables of the given kinds; NEG_INF for 0."""
        wanted = frozenset(kinds)
        if not self._terms:
            return NEG_INF
        kind_at = self.registry.kind_at
        return max(
            sum(e for p, e in m if kind_at(p) in wanted) for m in self._terms
        )

    def degree_of(self, name: str):
        pos = self.registry.position(name)
        if not self._terms:
            return NEG_INF
        return max((e for m in self._terms for p, e in m if p == pos), default=0)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.registry is not other.registry and self.registry != other.registry:
            raise RegistryMismatch(
                f"cannot combine polynomials over {self.registry!r} and {other.registry!r}"
            )

    def _coerce(self, value):
        if isinstance(value, Polynomial):
            self._check(value)
            return value
        if isinstance(value, (int, Fraction)):
            return self.registry.constant(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.registry, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.registry, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.registry.zero()
            return Polynomial(
                self.registry, {m: v * c for m, v in self._terms.items()}
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.registry, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.registry.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.registry.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.registry == other.registry and self._terms == other._terms

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, bindings: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Replace variables by polynomials over the same registry.

        Unmentioned variables stay untouched.
        """
        reg = self.registry
        resolved: dict[int, Polynomial] = {}
        for name, value in bindings.items():
            pos = reg.position(name)
            if isinstance(value, (int, Fraction)):
                value = reg.constant(value)
            else:
                self._check(value)
            resolved[pos] = value
        if not resolved:
            return self
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(pos: int, e: int) -> Polynomial:
            key = (pos, e)
            got = powers.get(key)
            if got is None:
                got = resolved[pos] ** e
                powers[key] = got
            return got

        result = reg.zero()
        for mono, coeff in self._terms.items():
            kept = tuple((p, e) for p, e in mono if p not in resolved)
            term = Polynomial(reg, {kept: coeff})
            for p, e in mono:
                if p in resolved:
                    term = term * power(p, e)
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Evaluate with every occurring variable bound to a rational."""
        reg = self.registry
        bound: dict[int, Fraction] = {}
        for name, v in values.items():
            bound[reg.position(name)] = Fraction(v)
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            acc = coeff
            for p, e in mono:
                if p not in bound:
                    raise ValueError(
                        f"variable {reg.name_at(p)!r} is unbound in evaluate()"
                    )
                acc *= bound[p] ** e
            total += acc
        return total

    # -- display -------------------------------------------------------------

    def _format_mono(self, mono: Mono) -> str:
        reg = self.registry
        parts = []
        for p, e in sorted(mono, key=lambda pe: reg.display_key(pe[0])):
            name = reg.name_at(p)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            negative = coeff < 0
            mag = -coeff if negative else coeff
            varpart = self._format_mono(mono)
            if not varpart:
                body = str(mag)
            elif mag == 1:
                body = varpart
            else:
                body = f"{mag}*{varpart}"
            if i == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# -- content, normalization, division ----------------------------------------


def content(p: Polynomial) -> Fraction:
    """Positive rational c with p/c primitive (coprime integer coefficients)."""
    if p.is_zero():
        return Fraction(0)
    num = 0
    den = 1
    for _, c in p.terms():
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def normalize(p: Polynomial) -> Polynomial:
    """Canonical scalar multiple: primitive with positive leading coefficient.

    normalize(0) = 0 and any nonzero constant normalizes to 1.
    """
    if p.is_zero():
        return p
    c = content(p)
    q = p * (1 / c)
    if q.leading()[1] < 0:
        q = -q
    return q


def try_divide(p: Polynomial, d: Polynomial):
    """Exact quotient p/d, or None when d does not divide p."""
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    reg = p.registry
    lm_d, lc_d = d.leading()
    quotient: dict = {}
    r = p
    while not r.is_zero():
        lm_r, lc_r = r.leading()
        q_mono = _mono_div(lm_r, lm_d)
        if q_mono is None:
            return None
        q_coeff = lc_r / lc_d
        quotient[q_mono] = quotient.get(q_mono, Fraction(0)) + q_coeff
        shifted = Polynomial(
            reg,
            {_mono_mul(m, q_mono): c * q_coeff for m, c in d.terms()},
        )
        r = r - shifted
    return Polynomial(reg, quotient)


def div_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    q = try_divide(p, d)
    if q is None:
        raise ValueError(f"({p}) is not divisible by ({d})")
    return q


def divides(d: Polynomial, p: Polynomial) -> bool:
    if d.is_zero():
        return p.is_zero()
    return try_divide(p, d) is not None


# -- greatest common divisor ---------------------------------------------------
#
# Recursive primitive PRS: pick the most significant variable occurring in
# either operand, split off the content with respect to it, run a pseudo
# remainder sequence on the primitive parts, and recurse on the contents.


def _main_pos(p: Polynomial, q: Polynomial):
    best = None
    for poly in (p, q):
        for mono, _ in poly.terms():
            if mono and (best is None or mono[0][0] < best):
                best = mono[0][0]
    return best


def _univar(p: Polynomial, pos: int) -> dict[int, Polynomial]:
    """View p as univariate in the given variable with polynomial coefficients."""
    reg = p.registry
    coeffs: dict[int, dict] = {}
    for mono, c in p.terms():
        e = 0
        rest = []
        for pp, ee in mono:
            if pp == pos:
                e = ee
            else:
                rest.append((pp, ee))
        bucket = coeffs.setdefault(e, {})
        bucket[tuple(rest)] = bucket.get(tuple(rest), Fraction(0)) + c
    return {e: Polynomial(reg, t) for e, t in coeffs.items()}


def _deg_in_pos(p: Polynomial, pos: int) -> int:
    d = 0
    for mono, _ in p.terms():
        for pp, ee in mono:
            if pp == pos and ee > d:
                d = ee
    return d


def _coeff_of(p: Polynomial, pos: int, e: int) -> Polynomial:
    reg = p.registry
    terms: dict = {}
    for mono, c in p.terms():
        got = 0
        rest = []
        for pp, ee in mono:
            if pp == pos:
                got = ee
            else:
                rest.append((pp, ee))
        if got == e:
            terms[tuple(rest)] = terms.get(tuple(rest), Fraction(0)) + c
    return Polynomial(reg, terms)


def _content_in(p: Polynomial, pos: int) -> Polynomial:
    cs = list(_univar(p, pos).values())
    g = cs[0]
    for c in cs[1:]:
        if g.is_constant():
            break
        g = _gcd_rec(g, c)
    if g.is_constant():
        return p.registry.one()
    return g


def _primitive_in(p: Polynomial, pos: int) -> Polynomial:
    return div_exact(p, _content_in(p, pos))


def _prem(f: Polynomial, g: Polynomial, pos: int) -> Polynomial:
    """Pseudo remainder of f by g in the given variable.

    The classical power of the leading coefficient is dropped: callers take
    primitive parts immediately afterwards, so the extra content is noise.
    """
    reg = f.registry
    n = _deg_in_pos(g, pos)
    lc_g = _coeff_of(g, pos, n)
    v = reg.var(reg.name_at(pos))
    r = f
    while not r.is_zero():
        d = _deg_in_pos(r, pos)
        if d < n:
            break
        lc_r = _coeff_of(r, pos, d)
        r = lc_g * r - lc_r * v ** (d - n) * g
    return r


def _gcd_rec(p: Polynomial, q: Polynomial) -> Polynomial:
    """gcd of two nonzero polynomials, up to a rational unit."""
    pos = _main_pos(p, q)
    if pos is None:
        return p.registry.one()
    cont_p = _content_in(p, pos)
    cont_q = _content_in(q, pos)
    a = div_exact(p, cont_p)
    b = div_exact(q, cont_q)
    if _deg_in_pos(a, pos) < _deg_in_pos(b, pos):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, pos)
        a = b
        b = p.registry.zero() if r.is_zero() else _primitive_in(r, pos)
    g = _primitive_in(a, pos) if _deg_in_pos(a, pos) > 0 else p.registry.one()
    cont = _gcd_rec(cont_p, cont_q)
    return cont * g


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Normalized greatest common divisor; gcd(p, 0) = normalize(p)."""
    p._check(q)
    if p.is_zero():
        return normalize(q)
    if q.is_zero():
        return normalize(p)
    return normalize(_gcd_rec(p, q))
