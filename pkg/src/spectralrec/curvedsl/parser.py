"""Recursive-descent parser for exact arithmetic expressions and curve files.

Grammar::

    file  := (stmt)*            stmt := ident '=' expr ';'
    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | power
    power := atom ('^' ['-'] integer)?
    atom  := integer | ident | '(' expr ')'

``p/q`` literals are ordinary divisions.  ``#`` starts a comment.
"""

import re
from fractions import Fraction

from ..errors import CurveSyntaxError, ParameterDegeneracy

_TOKEN = re.compile(r"\s*(?:(#[^\n]*)|(\d+)|([A-Za-z_λνħ][A-Za-z_0-9λνħ]*)|(.))", re.S)

ALIASES = {"λ": "lam", "ν": "nu", "lambda": "lam"}


def tokenize(text: str):
    """Yield (kind, value, position); kinds are num, ident, op, end."""
    pos = 0
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            pass
        elif m.group(2) is not None:
            yield ("num", int(m.group(2)), m.start(2))
        elif m.group(3) is not None:
            yield ("ident", m.group(3), m.start(3))
        elif m.group(4) is not None:
            ch = m.group(4)
            if ch not in "+-*/^();=":
                raise CurveSyntaxError(f"unexpected character {ch!r}", m.start(4))
            yield ("op", ch, m.start(4))
        pos = m.end()
    yield ("end", None, n)


class _Parser:
    def __init__(self, text: str, env: dict):
        self.toks = list(tokenize(text))
        self.i = 0
        self.env = env

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if kind != "op" or v != value:
            shown = "end of input" if kind == "end" else repr(v)
            raise CurveSyntaxError(f"expected {value!r}, found {shown}", pos)

    def expr(self):
        val = self.term()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                rhs = self.term()
                val = val + rhs if v == "+" else val - rhs
            else:
                return val

    def term(self):
        val = self.unary()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in "*/":
                self.take()
                rhs = self.unary()
                if v == "*":
                    val = val * rhs
                else:
                    if not rhs:
                        raise CurveSyntaxError("division by zero", pos)
                    try:
                        val = val / rhs
                    except (ZeroDivisionError, ParameterDegeneracy) as e:
                        raise CurveSyntaxError(f"division by zero ({e})", pos) from None
            else:
                return val

    def unary(self):
        kind, v, pos = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            val = self.unary()
            return -val if v == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            sign = 1
            kind, v, pos = self.peek()
            if kind == "op" and v == "-":
                self.take()
                sign = -1
                kind, v, pos = self.peek()
            if kind != "num":
                raise CurveSyntaxError("exponent must be an integer literal", pos)
            self.take()
            k = sign * v
            if k < 0 and not base:
                raise CurveSyntaxError("negative power of zero", pos)
            return base ** k
        return base

    def atom(self):
        kind, v, pos = self.take()
        if kind == "num":
            return Fraction(v)
        if kind == "ident":
            name = ALIASES.get(v, v)
            if name not in self.env:
                raise CurveSyntaxError(f"unknown symbol {v!r}", pos)
            return self.env[name]
        if kind == "op" and v == "(":
            val = self.expr()
            self.expect(")")
            return val
        shown = "end of input" if kind == "end" else repr(v)
        raise CurveSyntaxError(f"unexpected {shown}", pos)


def parse_expression(text: str, env: dict):
    """Evaluate an expression exactly; ``env`` maps identifiers to values."""
    p = _Parser(text, env)
    val = p.expr()
    kind, v, pos = p.peek()
    if kind != "end":
        raise CurveSyntaxError(f"unexpected {v!r}", pos)
    return val


def parse_statements(text: str, env: dict, allowed=("x", "y")):
    """Parse ``name = expr;`` statements into a dict of values."""
    p = _Parser(text, env)
    out = {}
    while True:
        kind, v, pos = p.take()
        if kind == "end":
            break
        if kind != "ident" or v not in allowed:
            shown = "end of input" if kind == "end" else repr(v)
            raise CurveSyntaxError(f"expected one of {', '.join(allowed)}, found {shown}", pos)
        if v in out:
            raise CurveSyntaxError(f"{v} assigned twice", pos)
        p.expect("=")
        out[v] = p.expr()
        kind, w, pos2 = p.peek()
        if kind == "op" and w == ";":
            p.take()
        elif kind != "end":
            raise CurveSyntaxError(f"expected ';', found {w!r}", pos2)
    for name in allowed:
        if name not in out:
            raise CurveSyntaxError(f"missing statement for {name}", len(text))
    return out
