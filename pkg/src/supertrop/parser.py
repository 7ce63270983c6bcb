"""Recursive descent parser for the expression language.

    expr   := term (('+' | '&') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' integer)? | 'abs' '(' expr ')' | '(' expr ')'
    atom   := 'x' digits | ('t' | 'g') '(' rational ')'

``^`` is also accepted after a parenthesised group or ``abs(...)``.
"""

import re
from fractions import Fraction

from . import expr as E
from .scalar import Scalar

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<abs>abs(?=\s*\())
  | (?P<scalar>[tg]\s*\(\s*[+-]?\d+\s*(?:/\s*\d+\s*)?\))
  | (?P<var>x\d+)
  | (?P<int>[+-]?\d+)
  | (?P<op>[-+&*/^()])
""", re.X)


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__("%s at position %d" % (msg, pos))
        self.pos = pos


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos] in "tg":
                raise ParseError("malformed scalar", pos)
            raise ParseError("unexpected character %r" % text[pos], pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, n):
        self.toks = tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ParseError("expected %s, found %r" % (want, tok[1] or "end"),
                             tok[2])
        self.i += 1
        return tok

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "&") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.term()
            left = E.add(left, right) if op == "+" else E.wedge(left, right)
        return left

    def term(self):
        left = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            right = self.factor()
            left = E.mul(left, right) if op == "*" else E.mul(left, E.star(right))
        return left

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "abs":
            self.take()
            self.take("op", "(")
            base = E.norm(self.expr())
            self.take("op", ")")
        elif kind == "op" and val == "(":
            self.take()
            base = self.expr()
            self.take("op", ")")
        elif kind == "var":
            self.take()
            idx = int(val[1:])
            if not 1 <= idx <= self.n:
                raise ParseError("unknown variable %s for n=%d" % (val, self.n),
                                 pos)
            base = E.RationalExpr(E.Polynomial.var(idx - 1, self.n))
        elif kind == "scalar":
            self.take()
            base = E.RationalExpr.const(_scalar(val, pos), self.n)
        else:
            raise ParseError("unexpected %r" % (val or "end"), pos)
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            k = int(self.take("int")[1])
            base = E.power(base, k)
        return base


def _scalar(text, pos):
    inner = text[text.index("(") + 1:-1].replace(" ", "")
    if "/" in inner:
        p, q = inner.split("/")
        if int(q) == 0:
            raise ParseError("zero denominator", pos)
        mag = Fraction(int(p), int(q))
    else:
        mag = Fraction(int(inner))
    return Scalar(mag, text.lstrip()[0] == "g")


def parse(text, n):
    """Parse ``text`` into a RationalExpr over ``n`` variables."""
    if n < 1:
        raise ValueError("n must be positive")
    p = _Parser(text, n)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    out = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError("unexpected %r" % tok[1], tok[2])
    return out


def parse_point(text, n=None):
    """Parse a comma separated list of scalars or bare rationals."""
    parts = []
    for i, chunk in enumerate(_split_point(text)):
        chunk = chunk.strip()
        if chunk[:1] in ("t", "g"):
            parts.append(_scalar(chunk, i))
        else:
            parts.append(Scalar(Fraction(chunk)))
    if n is not None and len(parts) != n:
        raise ValueError("point has %d coordinates, expected %d"
                         % (len(parts), n))
    return parts


def _split_point(text):
    depth = 0
    cur = []
    for ch in text:
        if ch == "," and depth == 0:
            yield "".join(cur)
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    yield "".join(cur)
