"""Recursive-descent parser for polynomial expressions and problem files.

Grammar (juxtaposition means multiplication, so ``(1-x)(1-z)`` and
``(t-2)x`` parse the way they are printed)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/')? unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INT)?
    atom   := INT | NAME | '(' expr ')'

Division is only allowed by constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ParseError
from ..exact.poly import LaurentPoly, MultiPoly
from ..exact.textio import parse_rational

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\d*)|(\*\*|[-+*/^()]))")

ALIASES = {"x": "x1", "y": "x2", "z": "x3", "w": "x4"}


def variable_names(n: int, with_t: bool = True) -> list[str]:
    names = [f"x{i}" for i in range(1, n + 1)]
    return names + ["t"] if with_t else names


def _tokenize(text: str, line):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} in expression", line)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, variables: Sequence[str], line):
        self.toks = tokens
        self.i = 0
        self.vars = {v: k for k, v in enumerate(variables)}
        self.n = len(variables)
        self.line = line

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        raise ParseError(msg, self.line)

    def parse(self) -> MultiPoly:
        if not self.toks:
            self.error("empty expression")
        p = self.expr()
        if self.i != len(self.toks):
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind, val) == ("op", "(")

    def term(self):
        p = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif tok == ("op", "/"):
                self.take()
                q = self.unary()
                if q.total_degree() > 0:
                    self.error("division by a non-constant expression")
                c = q.constant_term()
                if c == 0:
                    self.error("division by zero")
                p = p / c
            elif self._starts_factor():
                p = p * self.power()
            else:
                return p

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in (("op", "^"), ("op", "**")):
            self.take()
            kind, val = self.take()
            if kind != "num":
                self.error("exponent must be a non-negative integer")
            base = base**val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.constant(Fraction(val), self.n)
        if kind == "name":
            name = ALIASES.get(val, val)
            if name not in self.vars:
                self.error(f"unknown variable {val!r}")
            return MultiPoly.var(self.vars[name], self.n)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                self.error("missing ')'")
            return p
        self.error("unexpected end of expression" if kind is None else f"unexpected token {val!r}")


def parse_polynomial(text: str, variables: Sequence[str], line: int | None = None) -> MultiPoly:
    """Parse ``text`` into a MultiPoly over the given variable names."""
    return _Parser(_tokenize(text, line), variables, line).parse()


# ---------------------------------------------------------------------------
# problem files
# ---------------------------------------------------------------------------


@dataclass
class ProblemFile:
    dim: int | None
    order: int | None
    fields: dict
    lines: dict


def _read_keyed(text: str) -> ProblemFile:
    dim = order = None
    fields, lines = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if not value.strip():
                raise ParseError(f"empty value for {key!r}", lineno)
            fields[key] = value.strip()
            lines[key] = lineno
            continue
        parts = line.split()
        if len(parts) == 2 and parts[0] in ("dim", "order"):
            try:
                val = int(parts[1])
            except ValueError:
                raise ParseError(f"{parts[0]} must be an integer", lineno) from None
            if val < 0:
                raise ParseError(f"{parts[0]} must be non-negative", lineno)
            if parts[0] == "dim":
                dim = val
            else:
                order = val
            continue
        raise ParseError(f"cannot parse line {line!r}", lineno)
    return ProblemFile(dim, order, fields, lines)


def parse_simplex_problem(text: str, order: int | None = None):
    from .simplex import SimplexProblem

    pf = _read_keyed(text)
    if pf.dim is None or pf.dim < 1:
        raise ParseError("missing 'dim n' line")
    if "P" not in pf.fields:
        raise ParseError("missing 'P: <expression>' line")
    P = parse_polynomial(pf.fields["P"], variable_names(pf.dim), pf.lines["P"])
    N = order if order is not None else pf.order
    if N is None:
        raise ParseError("no expansion order given (use 'order N' or --order)")
    return SimplexProblem(pf.dim, P, N)


def parse_morse_problem(text: str, order: int | None = None):
    from .morse import MorseProblem

    pf = _read_keyed(text)
    if pf.dim is None or pf.dim < 1:
        raise ParseError("missing 'dim n' line")
    if "f" not in pf.fields:
        raise ParseError("missing 'f: <expression>' line")
    names = variable_names(pf.dim, with_t=False)
    f = parse_polynomial(pf.fields["f"], names, pf.lines["f"])
    A = parse_polynomial(pf.fields.get("A", "1"), names, pf.lines.get("A"))
    N = order if order is not None else pf.order
    if N is None:
        raise ParseError("no expansion order given (use 'order N' or --order)")
    return MorseProblem(pf.dim, f, A, N)


def parse_laurent(text: str) -> LaurentPoly:
    """Lines ``e1 e2 ... ek : p/q``; all lines must have the same arity."""
    terms = {}
    nvars = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.split()[0] == "order":
            continue
        if ":" not in line:
            raise ParseError("expected 'e1 ... ek : coefficient'", lineno)
        left, _, right = line.partition(":")
        try:
            exps = tuple(int(x) for x in left.split())
        except ValueError:
            raise ParseError("exponents must be integers", lineno) from None
        if not exps:
            raise ParseError("missing exponent vector", lineno)
        if nvars is None:
            nvars = len(exps)
        elif len(exps) != nvars:
            raise ParseError(f"expected {nvars} exponents, got {len(exps)}", lineno)
        c = parse_rational(right, lineno)
        terms[exps] = terms.get(exps, Fraction(0)) + c
    if nvars is None:
        raise ParseError("Laurent file contains no terms")
    return LaurentPoly(terms, nvars)


def dumps_laurent(f: LaurentPoly) -> str:
    from ..exact.textio import format_rational

    rows = []
    for e in sorted(f.terms):
        rows.append(" ".join(str(x) for x in e) + " : " + format_rational(f.terms[e]))
    return "\n".join(rows) + "\n"
