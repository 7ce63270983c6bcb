"""Standard supertropical semifield over Q, in logarithmic notation.

A scalar is a rational magnitude together with a layer flag.  The
multiplicative unit is ``t(0)``.
"""

import re
from fractions import Fraction

TANGIBLE = "t"
GHOST = "g"

_LITERAL = re.compile(r"\s*([tg])\s*\(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?\)\s*$")


class Scalar:
    __slots__ = ("mag", "ghost")

    def __init__(self, mag, ghost=False):
        self.mag = Fraction(mag)
        self.ghost = bool(ghost)

    @property
    def layer(self):
        return GHOST if self.ghost else TANGIBLE

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.mag == other.mag and self.ghost == other.ghost

    def __hash__(self):
        return hash((self.mag, self.ghost))

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __str__(self):
        return "%s(%s)" % (self.layer, self.mag)

    def __repr__(self):
        return str(self)


def t(mag):
    return Scalar(mag, False)


def g(mag):
    return Scalar(mag, True)


ONE = t(0)


def nu(a):
    return Scalar(a.mag, True)


def add(a, b):
    if a.mag > b.mag:
        return a
    if b.mag > a.mag:
        return b
    return Scalar(a.mag, True)


def mul(a, b):
    return Scalar(a.mag + b.mag, a.ghost or b.ghost)


def star(a):
    return Scalar(-a.mag, a.ghost)


def power(a, k):
    k = int(k)
    if k == 0:
        return ONE
    return Scalar(a.mag * k, a.ghost)


def nu_norm(a):
    return add(a, star(a))


def wedge(a, b):
    return star(add(star(a), star(b)))


def nu_compare(a, b):
    """Return -1, 0 or 1 comparing magnitudes only (0 means nu-equal)."""
    if a.mag < b.mag:
        return -1
    if a.mag > b.mag:
        return 1
    return 0


def nu_equal(a, b):
    return a.mag == b.mag


def parse_scalar(text):
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError("bad scalar literal %r" % text)
    layer, p, q = m.groups()
    q = int(q) if q else 1
    if q == 0:
        raise ValueError("zero denominator in %r" % text)
    return Scalar(Fraction(int(p), q), layer == GHOST)


def format_rational(q):
    q = Fraction(q)
    return str(q)
