"""Lie algebras over Q(parameters), given by structure constants.

A bracket table stores, for each basis pair i < j, the expansion
[e_i, e_j] = sum_k c_ij^k e_k.  Coefficients are polynomials in the declared
parameters only; the other half of the table exists implicitly through
antisymmetry.  Validation checks the Jacobi identity as a polynomial
identity, so a verdict of "valid" holds for every admissible parameter value
at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import ratmat
from .errors import (
    ExclusionViolation,
    ParameterBindingError,
    RegistryMismatch,
)
from .poly import Polynomial, VarKind, VarRegistry

__all__ = [
    "ParamDecl",
    "LieAlgebra",
    "Violation",
    "ValidationReport",
    "SkewPolyMatrix",
    "validate",
    "build_ax",
    "change_of_basis",
    "substitute_params",
]


@dataclass(frozen=True)
class ParamDecl:
    """A named parameter with polynomial loci that must stay nonzero."""

    name: str
    exclusions: tuple[Polynomial, ...] = ()


class LieAlgebra:
    """Immutable structure-constant table of dimension ``dim``."""

    __slots__ = ("dim", "params", "registry", "name", "_brackets")

    def __init__(
        self,
        dim: int,
        registry: VarRegistry,
        params: Sequence[ParamDecl] = (),
        brackets: Mapping[tuple[int, int], Mapping[int, Polynomial]] | None = None,
        name: str = "",
    ):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        if registry.dim != dim:
            raise ValueError("registry dimension does not match the algebra")
        if tuple(p.name for p in params) != registry.params:
            raise ValueError("registry parameters do not match the declarations")
        self.dim = dim
        self.registry = registry
        self.params = tuple(params)
        self.name = name
        table: dict[tuple[int, int], dict[int, Polynomial]] = {}
        for (i, j), terms in (brackets or {}).items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bracket pair ({i},{j}) must satisfy 1 <= i < j <= dim")
            cleaned: dict[int, Polynomial] = {}
            for k, coeff in terms.items():
                if not (1 <= k <= dim):
                    raise ValueError(f"basis index {k} out of range in bracket ({i},{j})")
                if coeff.registry != registry:
                    raise RegistryMismatch("bracket coefficient from a foreign registry")
                if coeff.degree_in(
                    [VarKind.COORDINATE, VarKind.POINT, VarKind.PENCIL]
                ) > 0:
                    raise ValueError(
                        f"coefficient of e{k} in [e{i},e{j}] must involve parameters only"
                    )
                if coeff:
                    cleaned[k] = coeff
            if cleaned:
                table[(i, j)] = cleaned
        self._brackets = table

    def bracket(self, i: int, j: int) -> dict[int, Polynomial]:
        """[e_i, e_j] as a map k -> coefficient, for any index order."""
        if i == j:
            return {}
        if i < j:
            return dict(self._brackets.get((i, j), {}))
        return {k: -c for k, c in self._brackets.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Polynomial:
        zero = self.registry.zero()
        if i == j:
            return zero
        if i < j:
            return self._brackets.get((i, j), {}).get(k, zero)
        return -self._brackets.get((j, i), {}).get(k, zero)

    def stored_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._brackets)

    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    def with_name(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.registry, self.params, self._brackets, name=name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.params == other.params
            and self._brackets == other._brackets
        )

    def __repr__(self) -> str:
        label = self.name or f"dim {self.dim}"
        return f"LieAlgebra({label}, {len(self._brackets)} brackets)"


@dataclass(frozen=True)
class Violation:
    """One failed Jacobi component: indices (i, j, k) and output basis m."""

    i: int
    j: int
    k: int
    m: int
    value: Polynomial

    def __str__(self) -> str:
        return (
            f"Jacobi identity fails on (e{self.i}, e{self.j}, e{self.k})"
            f" in the e{self.m} component: {self.value}"
        )


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(alg: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity for every basis triple, as polynomials."""
    n = alg.dim
    c = alg.structure_constant
    bad = []
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        # [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej], expanded via e_l.
        for m in range(1, n + 1):
            total = alg.registry.zero()
            for l in range(1, n + 1):
                total = (
                    total
                    + c(i, j, l) * c(l, k, m)
                    + c(j, k, l) * c(l, i, m)
                    + c(k, i, l) * c(l, j, m)
                )
            if total:
                bad.append(Violation(i, j, k, m, total))
    return ValidationReport(tuple(bad))


class SkewPolyMatrix:
    """Skew-symmetric matrix of polynomials, stored above the diagonal.

    Indices are 1-based to match the basis numbering.
    """

    __slots__ = ("size", "registry", "_upper")

    def __init__(self, size: int, registry: VarRegistry, upper: Mapping[tuple[int, int], Polynomial]):
        self.size = size
        self.registry = registry
        table = {}
        for (i, j), p in upper.items():
            if not (1 <= i < j <= size):
                raise ValueError(f"entry ({i},{j}) must lie strictly above the diagonal")
            if p:
                table[(i, j)] = p
        self._upper = table

    def entry(self, i: int, j: int) -> Polynomial:
        if i == j:
            return self.registry.zero()
        if i < j:
            return self._upper.get((i, j), self.registry.zero())
        return -self._upper.get((j, i), self.registry.zero())

    def rows(self) -> list[list[Polynomial]]:
        return [
            [self.entry(i, j) for j in range(1, self.size + 1)]
            for i in range(1, self.size + 1)
        ]

    def submatrix(self, indices: Sequence[int]) -> "SkewPolyMatrix":
        """Principal submatrix on the given (1-based, increasing) indices."""
        idx = list(indices)
        if sorted(set(idx)) != idx:
            raise ValueError("indices must be strictly increasing")
        if idx and not (1 <= idx[0] and idx[-1] <= self.size):
            raise ValueError("indices out of range")
        upper = {}
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                p = self.entry(idx[a], idx[b])
                if p:
                    upper[(a + 1, b + 1)] = p
        return SkewPolyMatrix(len(idx), self.registry, upper)

    def congruent(self, p_matrix) -> "SkewPolyMatrix":
        """P^T M P for a rational matrix P (kept exact, entries stay skew)."""
        n = self.size
        rows = self.rows()
        p = [[Fraction(v) for v in row] for row in p_matrix]
        if len(p) != n or any(len(row) != n for row in p):
            raise ValueError("congruence matrix has the wrong shape")
        mp = [
            [
                sum((rows[i][k] * p[k][j] for k in range(n)), self.registry.zero())
                for j in range(n)
            ]
            for i in range(n)
        ]
        upper = {}
        for i in range(n):
            for j in range(i + 1, n):
                entry = sum(
                    (mp[k][j] * p[k][i] for k in range(n)), self.registry.zero()
                )
                if entry:
                    upper[(i + 1, j + 1)] = entry
        return SkewPolyMatrix(n, self.registry, upper)

    def evaluate(self, values: Mapping[str, Fraction | int]) -> list[list[Fraction]]:
        return [[self.entry(i, j).evaluate(values) if i != j else Fraction(0)
                 for j in range(1, self.size + 1)]
                for i in range(1, self.size + 1)]

    def __eq__(self, other):
        if not isinstance(other, SkewPolyMatrix):
            return NotImplemented
        return self.size == other.size and self._upper == other._upper


def build_ax(alg: LieAlgebra) -> SkewPolyMatrix:
    """Matrix of linear forms A_x with entries sum_k c_ij^k x_k."""
    reg = alg.registry
    upper = {}
    for (i, j), terms in ((pair, alg.bracket(*pair)) for pair in alg.stored_pairs()):
        entry = reg.zero()
        for k, coeff in terms.items():
            entry = entry + coeff * reg.coordinate(k)
        if entry:
            upper[(i, j)] = entry
    return SkewPolyMatrix(alg.dim, reg, upper)


def change_of_basis(alg: LieAlgebra, p_matrix) -> LieAlgebra:
    """Structure constants in the basis e'_i = sum_j P_ji e_j.

    P must be invertible over the rationals; parameters ride along unchanged.
    """
    n = alg.dim
    p = [[Fraction(v) for v in row] for row in p_matrix]
    if len(p) != n or any(len(row) != n for row in p):
        raise ValueError("basis change matrix has the wrong shape")
    p_inv = ratmat.inverse(p)
    reg = alg.registry
    zero = reg.zero()
    # raw[s] = coefficient of e_s in [e'_i, e'_j]
    new_brackets: dict[tuple[int, int], dict[int, Polynomial]] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            raw = [zero] * (n + 1)
            for k, l in itertools.combinations(range(1, n + 1), 2):
                weight = p[k - 1][i - 1] * p[l - 1][j - 1] - p[l - 1][i - 1] * p[k - 1][j - 1]
                if not weight:
                    continue
                for s, coeff in alg.bracket(k, l).items():
                    raw[s] = raw[s] + coeff * weight
            terms = {}
            for m in range(1, n + 1):
                acc = zero
                for s in range(1, n + 1):
                    w = p_inv[m - 1][s - 1]
                    if w and raw[s]:
                        acc = acc + raw[s] * w
                if acc:
                    terms[m] = acc
            if terms:
                new_brackets[(i, j)] = terms
    return LieAlgebra(
        n, reg, params=alg.params, brackets=new_brackets, name=alg.name
    )


def substitute_params(alg: LieAlgebra, values: Mapping[str, Fraction | int]) -> LieAlgebra:
    """Bind every parameter to a rational, enforcing the declared exclusions."""
    declared = set(alg.param_names())
    given = set(values)
    missing = declared - given
    extra = given - declared
    if missing:
        raise ParameterBindingError(
            "unbound parameter(s): " + ", ".join(sorted(missing))
        )
    if extra:
        raise ParameterBindingError(
            "unknown parameter(s): " + ", ".join(sorted(extra))
        )
    binding = {name: Fraction(v) for name, v in values.items()}
    for decl in alg.params:
        for excl in decl.exclusions:
            if excl.evaluate(binding) == 0:
                raise ExclusionViolation(
                    f"binding violates the constraint {excl} != 0"
                    f" attached to parameter {decl.name!r}"
                )
    reg = VarRegistry(alg.dim)
    new_brackets: dict[tuple[int, int], dict[int, Polynomial]] = {}
    for pair in alg.stored_pairs():
        terms = {}
        for k, coeff in alg.bracket(*pair).items():
            value = coeff.evaluate(binding)
            if value:
                terms[k] = reg.constant(value)
        if terms:
            new_brackets[pair] = terms
    return LieAlgebra(alg.dim, reg, params=(), brackets=new_brackets, name=alg.name)
