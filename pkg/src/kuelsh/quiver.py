"""Quiver presentations, path expressions and the plain-text presentation format.

Paths compose left to right: ``alpha.beta`` is ``alpha`` followed by ``beta``
and requires ``target(alpha) == source(beta)``.  ``e<v>`` is the trivial path
at vertex ``v``.

Text format, one statement per line (``#`` starts a comment)::

    field gf:4                       # optional when the caller supplies one
    vertex 1 2
    arrow alpha 1 1
    arrow beta 1 2
    rel beta.eta = alpha.beta
    rel alpha^2 = [g+1]*beta.gamma + 2*(beta.gamma.alpha)^2
    loewy 4                          # bound L0 with J^(L0+1) = 0

Coefficients are integers or field elements in square brackets; ``0`` is
the empty sum.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .field import FieldElement, FieldError, FieldSpec

PathWord = tuple  # ("arrow", ...) labels; () only together with a vertex
LinComb = dict  # Path -> FieldElement


class PresentationError(ValueError):
    pass


class NonAdmissible(PresentationError):
    pass


class QuiverSyntaxError(PresentationError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f"line {line}, column {col}: " if line else (f"column {col}: " if col else "")
        super().__init__(where + message)
        self.line, self.col = line, col


@dataclass(frozen=True)
class Path:
    """A path given by its start vertex and arrow labels."""

    source: str
    target: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def label(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e{self.source}"


@dataclass
class QuiverPresentation:
    spec: FieldSpec
    vertices: list
    arrows: list  # (label, source, target)
    relations: list = dc_field(default_factory=list)  # (lhs LinComb, rhs LinComb)
    loewy_bound: Optional[int] = None

    def __post_init__(self):
        self.vertices = [str(v) for v in self.vertices]
        self.arrows = [(str(a), str(s), str(t)) for a, s, t in self.arrows]
        labels = [a for a, _, _ in self.arrows]
        if len(set(labels)) != len(labels):
            raise PresentationError("duplicate arrow label")
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex")
        for a, s, t in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise PresentationError(f"arrow {a} uses an unknown vertex")
            if re.fullmatch(r"e\w+", a) and a[1:] in self.vertices:
                raise PresentationError(f"arrow label {a} clashes with an idempotent name")
        self._arrow = {a: (s, t) for a, s, t in self.arrows}

    def arrow_ends(self, label: str) -> tuple[str, str]:
        return self._arrow[label]

    def path(self, arrows, source: Optional[str] = None) -> Path:
        arrows = tuple(arrows)
        if not arrows:
            if source is None:
                raise PresentationError("trivial path needs a vertex")
            return Path(source, source)
        for a in arrows:
            if a not in self._arrow:
                raise PresentationError(f"unknown arrow {a!r}")
        for x, y in zip(arrows, arrows[1:]):
            if self._arrow[x][1] != self._arrow[y][0]:
                raise PresentationError(f"arrows {x} and {y} do not compose")
        return Path(self._arrow[arrows[0]][0], self._arrow[arrows[-1]][1], arrows)

    def add_relation(self, lhs: LinComb, rhs: LinComb):
        self.relations.append((dict(lhs), dict(rhs)))

    def check_admissible(self):
        for lhs, rhs in self.relations:
            for p in list(lhs) + list(rhs):
                if len(p) < 2:
                    raise NonAdmissible(f"relation monomial {p.label()} has length < 2")

    def parse_lincomb(self, text: str) -> LinComb:
        return _ExprParser(self, text).lincomb()

    def relation_vectors(self) -> list[LinComb]:
        """lhs - rhs for each relation, with zero terms dropped."""
        out = []
        for lhs, rhs in self.relations:
            v: dict = {}
            for p, c in lhs.items():
                v[p] = v.get(p, self.spec.zero) + c
            for p, c in rhs.items():
                v[p] = v.get(p, self.spec.zero) - c
            out.append({p: c for p, c in v.items() if c})
        return out


def lincomb(spec: FieldSpec, *terms) -> LinComb:
    """Build a linear combination from (coefficient, Path) pairs."""
    out: dict = {}
    for c, p in terms:
        c = spec(c)
        out[p] = out.get(p, spec.zero) + c
    return {p: c for p, c in out.items() if c}


# --------------------------------------------------------------------------

_TOK = re.compile(r"\s*(?:(\[[^\]]*\])|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _ExprParser:
    def __init__(self, q: QuiverPresentation, text: str, line: int = 0, offset: int = 0):
        self.q, self.text, self.line, self.offset = q, text, line, offset
        self.toks = []
        for m in _TOK.finditer(text):
            if not m.group(0).strip():
                continue
            kind = ("coef", "int", "name", "op")[m.lastindex - 1]
            self.toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def fail(self, msg, pos=None):
        pos = self.peek()[2] if pos is None else pos
        raise QuiverSyntaxError(msg, self.line, self.offset + pos + 1)

    def lincomb(self) -> LinComb:
        spec = self.q.spec
        out: dict = {}
        sign = spec.one
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -spec.one
        while True:
            for p, c in self.term().items():
                out[p] = out.get(p, spec.zero) + sign * c
            kind, tok, _ = self.peek()
            if kind == "op" and tok in "+-":
                self.take()
                sign = spec.one if tok == "+" else -spec.one
                continue
            if kind != "end":
                self.fail(f"unexpected {tok!r}")
            break
        return {p: c for p, c in out.items() if c}

    def coefficient(self) -> Optional[FieldElement]:
        kind, tok, pos = self.peek()
        spec = self.q.spec
        if kind == "coef":
            self.take()
            try:
                return spec.parse(tok[1:-1])
            except FieldError as e:
                self.fail(f"bad coefficient {tok}: {e}", pos)
        if kind == "int":
            # an integer followed by '*' is a coefficient; a bare 0 is the empty sum
            nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else ("end", "", 0)
            if nxt[:2] == ("op", "*") or nxt[0] == "end" or nxt[:2] in (("op", "+"), ("op", "-")):
                self.take()
                return spec(int(tok))
        return None

    def term(self) -> LinComb:
        spec = self.q.spec
        c = self.coefficient()
        if c is not None:
            if self.peek()[:2] == ("op", "*"):
                self.take()
            else:
                if c:
                    self.fail("a bare nonzero scalar is not a path combination")
                return {}
        else:
            c = spec.one
        path = self.word()
        return {path: c} if c else {}

    def word(self) -> Path:
        path = self.factor()
        while self.peek()[:2] == ("op", "."):
            self.take()
            pos = self.peek()[2]
            nxt = self.factor()
            path = self._concat(path, nxt, pos)
        return path

    def factor(self) -> Path:
        kind, tok, pos = self.peek()
        if kind == "name":
            self.take()
            m = re.fullmatch(r"e(\w+)", tok)
            if tok not in self.q._arrow and m and m.group(1) in self.q.vertices:
                base = Path(m.group(1), m.group(1))
            elif tok in self.q._arrow:
                s, t = self.q._arrow[tok]
                base = Path(s, t, (tok,))
            else:
                self.fail(f"unknown arrow {tok!r}", pos)
        elif (kind, tok) == ("op", "("):
            self.take()
            base = self.word()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
        else:
            self.fail(f"expected a path, got {tok!r}" if tok else "expected a path")
        if self.peek()[:2] == ("op", "^"):
            self.take()
            braced = self.peek()[:2] == ("op", "{")
            if braced:
                self.take()
            k, n, p = self.take()
            if k != "int":
                self.fail("exponent must be a non-negative integer", p)
            if braced:
                if self.peek()[:2] != ("op", "}"):
                    self.fail("expected '}'")
                self.take()
            n = int(n)
            if n == 0:
                if base.source != base.target:
                    self.fail("zeroth power of a non-closed path", pos)
                return Path(base.source, base.source)
            if n > 1 and base.source != base.target:
                self.fail("power of a non-closed path", pos)
            base = Path(base.source, base.target, base.arrows * n)
        return base

    def _concat(self, a: Path, b: Path, pos: int) -> Path:
        if a.target != b.source:
            self.fail(f"{a.label()} and {b.label()} do not compose", pos)
        return Path(a.source, b.target, a.arrows + b.arrows)


def parse_quiver_text(text: str, spec: Optional[FieldSpec] = None) -> QuiverPresentation:
    """Parse the plain-text presentation format into a QuiverPresentation."""
    vertices: list = []
    arrows: list = []
    rel_lines: list = []
    loewy = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        word, _, rest = stripped.partition(" ")
        rest_col = indent + len(word) + 2
        if word == "field":
            try:
                fs = FieldSpec.from_text(rest.strip())
            except FieldError as e:
                raise QuiverSyntaxError(str(e), lineno, rest_col) from None
            if spec is None:
                spec = fs
            elif fs != spec:
                raise QuiverSyntaxError("field differs from the one requested", lineno, rest_col)
        elif word == "vertex":
            vertices.extend(rest.split())
        elif word == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise QuiverSyntaxError("expected: arrow <label> <source> <target>", lineno, rest_col)
            arrows.append(tuple(parts))
        elif word == "rel":
            if "=" not in rest:
                raise QuiverSyntaxError("relation needs '='", lineno, rest_col)
            rel_lines.append((lineno, rest_col, rest))
        elif word == "loewy":
            try:
                loewy = int(rest)
            except ValueError:
                raise QuiverSyntaxError("loewy bound must be an integer", lineno, rest_col) from None
        else:
            raise QuiverSyntaxError(f"unknown statement {word!r}", lineno, indent + 1)
    if spec is None:
        raise QuiverSyntaxError("no field given")
    if not vertices:
        raise QuiverSyntaxError("no vertices declared")
    try:
        q = QuiverPresentation(spec, vertices, arrows, loewy_bound=loewy)
    except PresentationError as e:
        raise QuiverSyntaxError(str(e)) from None
    for lineno, col, rest in rel_lines:
        lhs_text, _, rhs_text = rest.partition("=")
        lhs = _ExprParser(q, lhs_text, lineno, col - 1).lincomb()
        rhs = _ExprParser(q, rhs_text, lineno, col + len(lhs_text)).lincomb()
        q.add_relation(lhs, rhs)
    return q
