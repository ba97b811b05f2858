"""Reading and writing bracket tables.

Two encodings are supported.  The text form is line oriented:

    # comment
    dim 7
    param a != 0
    [e1,e2] = e3
    [e3,e6] = -(1+a)*e3

Brackets may be written in either index order; a reversed pair is negated
into canonical ``i < j`` storage.  Coefficients are rational numbers, bare
parameters, or parenthesized polynomials in the parameters.  The structured
form is a JSON document with fields ``dim``, ``params`` and ``brackets``
carrying the same data; coefficients travel as strings in the usual display
syntax.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from .errors import ParseError, SchemaError
from .model import LieAlgebra, ParamDecl
from .poly import Polynomial, VarKind, VarRegistry

__all__ = [
    "SourceDoc",
    "parse_text",
    "parse_structured",
    "parse_source",
    "parse_poly",
    "emit_text",
    "load_algebra",
]


@dataclass(frozen=True)
class SourceDoc:
    """Raw input together with where it came from and how it is encoded."""

    text: str
    origin: str = "<string>"
    format: str = "text"  # "text" | "structured"


def load_algebra(path) -> LieAlgebra:
    """Read a .lie (text) or .json (structured) file."""
    p = Path(path)
    raw = p.read_text(encoding="utf-8")
    fmt = "structured" if p.suffix.lower() == ".json" else "text"
    return parse_source(SourceDoc(raw, origin=str(p), format=fmt))


def parse_source(doc: SourceDoc) -> LieAlgebra:
    if doc.format == "structured":
        return parse_structured(doc)
    return parse_text(doc)


# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#.*)
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<ne>!=)
  | (?P<op>[\[\](),+\-*/^=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "op" | "end"
    value: str
    line: int
    column: int


def _tokenize_line(text: str, line_no: int, origin: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}",
                line=line_no,
                column=pos + 1,
                origin=origin,
            )
        pos = m.end()
        if m.lastgroup in ("ws", "comment"):
            continue
        kind = m.lastgroup
        value = m.group()
        if kind in ("ne", "op"):
            kind = "op"
        tokens.append(Token(kind, value, line_no, m.start() + 1))
    tokens.append(Token("end", "", line_no, len(text) + 1))
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token], origin: str):
        self.tokens = tokens
        self.origin = origin
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect_op(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.value != value:
            self.fail(f"expected {value!r}", tok)
        return self.next()

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, line=tok.line, column=tok.column, origin=self.origin)


# -- expression parser --------------------------------------------------------
#
# Grammar (precedence climbing):
#   expr   := term (("+"|"-") term)*
#   term   := factor (("*"|"/")? factor)*     adjacency means multiplication
#   factor := ("-"|"+")* atom ("^" int)*
#   atom   := int | ident | "(" expr ")"
#
# Atoms evaluate to polynomials; "e<k>" identifiers are only legal where the
# caller says so (bracket right-hand sides), and there they must stay linear.

_BASIS_RE = re.compile(r"^e([0-9]+)$")


_ALL_KINDS = frozenset(VarKind)
_PARAMS_ONLY = frozenset({VarKind.PARAMETER})


class _ExprParser:
    def __init__(
        self,
        cursor: _Cursor,
        registry: VarRegistry,
        allow_basis: bool,
        kinds: frozenset = _PARAMS_ONLY,
    ):
        self.c = cursor
        self.reg = registry
        self.allow_basis = allow_basis
        self.kinds = kinds
        # linear combination: basis index -> coefficient polynomial;
        # index 0 holds the pure-coefficient part.
        self.one = registry.one()

    def _atom(self):
        tok = self.c.peek()
        if tok.kind == "int":
            self.c.next()
            return {0: self.reg.constant(int(tok.value))}
        if tok.kind == "ident":
            self.c.next()
            m = _BASIS_RE.match(tok.value)
            if m:
                if not self.allow_basis:
                    self.c.fail("basis elements are not allowed here", tok)
                return {int(m.group(1)): self.one}
            try:
                kind = self.reg.kind_of(tok.value)
            except ValueError:
                self.c.fail(f"undeclared parameter {tok.value!r}", tok)
            if kind not in self.kinds:
                self.c.fail(f"{tok.value!r} is not a parameter", tok)
            return {0: self.reg.var(tok.value)}
        if tok.kind == "op" and tok.value == "(":
            self.c.next()
            inner = self._expr()
            self.c.expect_op(")")
            return inner
        self.c.fail("expected a number, parameter, or parenthesized expression", tok)

    def _factor(self):
        sign = 1
        while True:
            tok = self.c.peek()
            if tok.kind == "op" and tok.value in ("+", "-"):
                self.c.next()
                if tok.value == "-":
                    sign = -sign
            else:
                break
        value = self._atom()
        while True:
            tok = self.c.peek()
            if tok.kind == "op" and tok.value == "^":
                self.c.next()
                etok = self.c.peek()
                if etok.kind != "int":
                    self.c.fail("exponent must be a non-negative integer", etok)
                self.c.next()
                value = self._power(value, int(etok.value), etok)
            else:
                break
        if sign < 0:
            value = {k: -v for k, v in value.items()}
        return value

    def _power(self, value, exponent, tok):
        if set(value) != {0}:
            self.c.fail("basis elements cannot be raised to powers", tok)
        return {0: value[0] ** exponent}

    def _combine_mul(self, left, right, tok):
        if set(left) != {0} and set(right) != {0}:
            self.c.fail("products of basis elements are not allowed", tok)
        if set(left) == {0}:
            scalar, vector = left[0], right
        else:
            scalar, vector = right[0], left
        return {k: scalar * v for k, v in vector.items()}

    def _term(self):
        tok = self.c.peek()
        value = self._factor()
        while True:
            tok = self.c.peek()
            if tok.kind == "op" and tok.value == "*":
                self.c.next()
                value = self._combine_mul(value, self._factor(), tok)
            elif tok.kind == "op" and tok.value == "/":
                self.c.next()
                divisor = self._factor(), tok
                div, dtok = divisor
                if set(div) != {0} or not div[0].is_constant():
                    self.c.fail("division is only allowed by a rational constant", dtok)
                c = div[0].constant_value()
                if c == 0:
                    self.c.fail("division by zero", dtok)
                inv = Fraction(1) / c
                value = {k: v * inv for k, v in value.items()}
            elif tok.kind in ("int", "ident") or (tok.kind == "op" and tok.value == "("):
                value = self._combine_mul(value, self._factor(), tok)
            else:
                break
        return value

    def _expr(self):
        value = self._term()
        while True:
            tok = self.c.peek()
            if tok.kind == "op" and tok.value in ("+", "-"):
                self.c.next()
                rhs = self._term()
                if tok.value == "-":
                    rhs = {k: -v for k, v in rhs.items()}
                for k, v in rhs.items():
                    value[k] = value.get(k, self.reg.zero()) + v
            else:
                break
        return value

    def parse(self):
        result = self._expr()
        if not self.c.at_end():
            self.c.fail("unexpected trailing input")
        return {k: v for k, v in result.items() if v}


def parse_poly(text: str, registry: VarRegistry, origin: str = "<expr>") -> Polynomial:
    """Parse a polynomial in the display syntax over any registered variable."""
    cursor = _Cursor(_tokenize_line(text, 1, origin), origin)
    parts = _ExprParser(cursor, registry, allow_basis=False, kinds=_ALL_KINDS).parse()
    return parts.get(0, registry.zero())


def _parse_param_poly(text: str, registry: VarRegistry, origin: str) -> Polynomial:
    cursor = _Cursor(_tokenize_line(text, 1, origin), origin)
    parts = _ExprParser(cursor, registry, allow_basis=False).parse()
    return parts.get(0, registry.zero())


# -- text format ----------------------------------------------------------------


def parse_text(doc: SourceDoc | str) -> LieAlgebra:
    if isinstance(doc, str):
        doc = SourceDoc(doc)
    origin = doc.origin
    lines = doc.text.splitlines()
    statements = []
    for no, raw in enumerate(lines, start=1):
        tokens = _tokenize_line(raw, no, origin)
        if tokens[0].kind != "end":
            statements.append(_Cursor(tokens, origin))
    if not statements:
        raise ParseError("empty input: expected a 'dim' line", origin=origin)

    # First statement fixes the dimension; param lines must precede brackets.
    cur = statements[0]
    head = cur.next()
    if head.kind != "ident" or head.value != "dim":
        cur.fail("the first statement must be 'dim <n>'", head)
    size_tok = cur.next()
    if size_tok.kind != "int" or int(size_tok.value) < 1:
        cur.fail("dimension must be a positive integer", size_tok)
    if not cur.at_end():
        cur.fail("unexpected trailing input after the dimension")
    dim = int(size_tok.value)

    param_names: list[str] = []
    param_lines: list[tuple[_Cursor, str, Token]] = []
    bracket_lines: list[_Cursor] = []
    seen_bracket = False
    for cur in statements[1:]:
        tok = cur.peek()
        if tok.kind == "ident" and tok.value == "dim":
            cur.fail("duplicate 'dim' line", tok)
        if tok.kind == "ident" and tok.value == "param":
            if seen_bracket:
                cur.fail("param lines must appear before bracket lines", tok)
            cur.next()
            name_tok = cur.next()
            if name_tok.kind != "ident":
                cur.fail("expected a parameter name", name_tok)
            if name_tok.value in param_names:
                cur.fail(f"duplicate parameter {name_tok.value!r}", name_tok)
            param_names.append(name_tok.value)
            param_lines.append((cur, name_tok.value, name_tok))
        else:
            seen_bracket = True
            bracket_lines.append(cur)

    try:
        registry = VarRegistry(dim, param_names)
    except ValueError as exc:
        raise ParseError(str(exc), origin=origin) from None

    decls = []
    for cur, name, name_tok in param_lines:
        exclusions: tuple[Polynomial, ...] = ()
        tok = cur.peek()
        if tok.kind == "op" and tok.value == "!=":
            cur.next()
            parts = _ExprParser(cur, registry, allow_basis=False)._expr()
            if not cur.at_end():
                cur.fail("unexpected trailing input after the exclusion")
            rhs = parts.get(0, registry.zero())
            exclusions = (registry.var(name) - rhs,)
        elif tok.kind != "end":
            cur.fail("expected '!=' or end of line", tok)
        decls.append(ParamDecl(name, exclusions))

    brackets: dict[tuple[int, int], dict[int, Polynomial]] = {}
    seen: set[tuple[int, int]] = set()
    for cur in bracket_lines:
        _parse_bracket_line(cur, registry, dim, brackets, seen)

    return LieAlgebra(
        dim,
        registry,
        params=decls,
        brackets=brackets,
        name=_origin_stem(origin),
    )


def _origin_stem(origin: str) -> str:
    if origin in ("<string>", "<stdin>", ""):
        return ""
    return Path(origin).stem


def _parse_bracket_line(cur: _Cursor, registry: VarRegistry, dim: int, brackets, seen) -> None:
    open_tok = cur.peek()
    cur.expect_op("[")
    i = _basis_index(cur, dim)
    cur.expect_op(",")
    j = _basis_index(cur, dim)
    cur.expect_op("]")
    if i == j:
        cur.fail(f"bracket indices must differ, got [e{i},e{j}]", open_tok)
    cur.expect_op("=")
    parts = _ExprParser(cur, registry, allow_basis=True).parse()
    if 0 in parts:
        if parts[0]:
            cur.fail("constant terms are not allowed in a bracket", open_tok)
        del parts[0]
    for k in parts:
        if not (1 <= k <= dim):
            cur.fail(f"basis index e{k} out of range for dimension {dim}", open_tok)
    sign = 1
    if i > j:
        i, j = j, i
        sign = -1
    terms = {k: sign * v for k, v in parts.items()}
    if (i, j) in seen:
        if brackets.get((i, j), {}) != terms:
            cur.fail(
                f"conflicting redefinition of [e{i},e{j}]",
                open_tok,
            )
        return
    seen.add((i, j))
    if terms:
        brackets[(i, j)] = terms


def _basis_index(cur: _Cursor, dim: int) -> int:
    tok = cur.next()
    m = _BASIS_RE.match(tok.value) if tok.kind == "ident" else None
    if not m:
        cur.fail("expected a basis element like e3", tok)
    k = int(m.group(1))
    if not (1 <= k <= dim):
        cur.fail(f"basis index e{k} out of range for dimension {dim}", tok)
    return k


# -- structured format ---------------------------------------------------------


def parse_structured(doc: SourceDoc | str) -> LieAlgebra:
    if isinstance(doc, str):
        doc = SourceDoc(doc, format="structured")
    origin = doc.origin
    try:
        data = json.loads(doc.text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", origin=origin) from None
    if not isinstance(data, dict):
        raise SchemaError("document must be an object", origin=origin)
    known = {"dim", "params", "brackets", "name"}
    for key in data:
        if key not in known:
            raise SchemaError("unknown field", path=key, origin=origin)
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise SchemaError("must be a positive integer", path="dim", origin=origin)

    raw_params = data.get("params", [])
    if not isinstance(raw_params, list):
        raise SchemaError("must be a list", path="params", origin=origin)
    names = []
    raw_exclusions = []
    for idx, entry in enumerate(raw_params):
        path = f"params[{idx}]"
        if not isinstance(entry, dict):
            raise SchemaError("must be an object", path=path, origin=origin)
        name = entry.get("name")
        if not isinstance(name, str):
            raise SchemaError("missing string 'name'", path=path, origin=origin)
        for key in entry:
            if key not in ("name", "nonzero"):
                raise SchemaError("unknown field", path=f"{path}.{key}", origin=origin)
        nz = entry.get("nonzero")
        if nz is not None and not isinstance(nz, str):
            raise SchemaError("must be a string", path=f"{path}.nonzero", origin=origin)
        names.append(name)
        raw_exclusions.append(nz)

    try:
        registry = VarRegistry(dim, names)
    except ValueError as exc:
        raise SchemaError(str(exc), path="params", origin=origin) from None

    decls = []
    for name, nz, idx in zip(names, raw_exclusions, range(len(names))):
        exclusions = ()
        if nz is not None:
            try:
                exclusions = (_parse_param_poly(nz, registry, origin=origin),)
            except ParseError as exc:
                raise SchemaError(
                    f"bad polynomial: {exc.message}",
                    path=f"params[{idx}].nonzero",
                    origin=origin,
                ) from None
        decls.append(ParamDecl(name, exclusions))

    brackets: dict[tuple[int, int], dict[int, Polynomial]] = {}
    raw_brackets = data.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise SchemaError("must be a list", path="brackets", origin=origin)
    for idx, entry in enumerate(raw_brackets):
        path = f"brackets[{idx}]"
        if not isinstance(entry, dict):
            raise SchemaError("must be an object", path=path, origin=origin)
        for key in entry:
            if key not in ("i", "j", "terms"):
                raise SchemaError("unknown field", path=f"{path}.{key}", origin=origin)
        i = entry.get("i")
        j = entry.get("j")
        for label, v in (("i", i), ("j", j)):
            if not isinstance(v, int) or isinstance(v, bool) or not (1 <= v <= dim):
                raise SchemaError(
                    f"must be an integer in 1..{dim}", path=f"{path}.{label}", origin=origin
                )
        if i == j:
            raise SchemaError("indices must differ", path=path, origin=origin)
        raw_terms = entry.get("terms")
        if not isinstance(raw_terms, dict):
            raise SchemaError("missing object 'terms'", path=path, origin=origin)
        terms = {}
        for key, text in raw_terms.items():
            tpath = f"{path}.terms.{key}"
            try:
                k = int(key)
            except ValueError:
                raise SchemaError("key must be a basis index", path=tpath, origin=origin) from None
            if not (1 <= k <= dim):
                raise SchemaError(f"basis index out of range for dimension {dim}", path=tpath, origin=origin)
            if not isinstance(text, str):
                raise SchemaError("coefficient must be a string", path=tpath, origin=origin)
            try:
                coeff = _parse_param_poly(text, registry, origin=origin)
            except ParseError as exc:
                raise SchemaError(f"bad polynomial: {exc.message}", path=tpath, origin=origin) from None
            if coeff:
                terms[k] = coeff
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        terms = {k: sign * v for k, v in terms.items()}
        if (i, j) in brackets:
            if brackets[(i, j)] != terms:
                raise SchemaError(f"conflicting redefinition of [e{i},e{j}]", path=path, origin=origin)
            continue
        if terms:
            brackets[(i, j)] = terms

    name = data.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("must be a string", path="name", origin=origin)
    return LieAlgebra(
        dim, registry, params=decls, brackets=brackets,
        name=name or _origin_stem(origin),
    )


# -- emission -------------------------------------------------------------------


def _render_coefficient(coeff: Polynomial, k: int) -> str:
    if coeff.is_constant():
        c = coeff.constant_value()
        if c == 1:
            return f"e{k}"
        if c == -1:
            return f"-e{k}"
        return f"{c}*e{k}"
    if coeff.term_count() == 1:
        # a single monomial is all multiplication, no parentheses needed
        return f"{coeff}*e{k}"
    return f"({coeff})*e{k}"


def emit_text(alg: LieAlgebra) -> str:
    """Canonical text form; parse_text(emit_text(alg)) == alg."""
    lines = [f"dim {alg.dim}"]
    for decl in alg.params:
        if not decl.exclusions:
            lines.append(f"param {decl.name}")
            continue
        var = alg.registry.var(decl.name)
        for excl in decl.exclusions:
            rhs = var - excl
            lines.append(f"param {decl.name} != {rhs}")
    for (i, j) in alg.stored_pairs():
        terms = alg.bracket(i, j)
        parts = []
        for k in sorted(terms):
            rendered = _render_coefficient(terms[k], k)
            if not parts:
                parts.append(rendered)
            elif rendered.startswith("-"):
                parts.append(" - " + rendered[1:])
            else:
                parts.append(" + " + rendered)
        lines.append(f"[e{i},e{j}] = " + "".join(parts))
    return "\n".join(lines) + "\n"
