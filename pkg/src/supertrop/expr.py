"""Laurent monomials, supertropical polynomials and rational functions.

A rational function is kept in fraction normal form ``num/den``.  No
polynomial gcd exists here, so instead each operation prunes inessential
monomials from numerator and denominator separately.
"""

import os
from fractions import Fraction
from functools import lru_cache

from . import scalar as S
from .scalar import Scalar, ONE
from .lp import feasible_point


class BudgetError(ValueError):
    """A polynomial grew past the monomial budget."""

    def __init__(self, size, limit):
        super().__init__("polynomial has %d monomials, budget is %d"
                         % (size, limit))
        self.size = size
        self.limit = limit


class GhostDenominatorError(ValueError):
    """An operation that needs a tangible denominator got a ghost one."""


class DegenerateError(ValueError):
    pass


_budget = [int(os.environ.get("SKL_BUDGET", "64"))]


def get_budget():
    return _budget[0]


def set_budget(limit):
    _budget[0] = int(limit)


class Monomial:
    __slots__ = ("coeff", "exps")

    def __init__(self, coeff, exps):
        self.coeff = coeff
        self.exps = tuple(int(e) for e in exps)

    @property
    def n(self):
        return len(self.exps)

    def __eq__(self, other):
        return (isinstance(other, Monomial) and self.coeff == other.coeff
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.coeff, self.exps))

    def __mul__(self, other):
        return Monomial(S.mul(self.coeff, other.coeff),
                        tuple(a + b for a, b in zip(self.exps, other.exps)))

    def star(self):
        return Monomial(S.star(self.coeff), tuple(-e for e in self.exps))

    def magnitude_at(self, x):
        """Magnitude at a rational point ``x``."""
        v = self.coeff.mag
        for e, xi in zip(self.exps, x):
            if e:
                v += e * xi
        return v

    def evaluate(self, point):
        v = self.coeff
        for e, xi in zip(self.exps, point):
            if e:
                v = S.mul(v, S.power(xi, e))
        return v

    def affine(self):
        """The log-scale affine functional ``(c, e1, ..., en)``."""
        return (self.coeff.mag,) + tuple(Fraction(e) for e in self.exps)

    def __str__(self):
        return format_monomial(self)

    __repr__ = __str__


def format_monomial(m):
    parts = []
    if m.coeff != ONE or not any(m.exps):
        parts.append(str(m.coeff))
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append("x%d" % (i + 1))
        elif e:
            parts.append("x%d^%d" % (i + 1, e))
    return "*".join(parts)


def _merge(monos):
    acc = {}
    for m in monos:
        c = acc.get(m.exps)
        acc[m.exps] = m.coeff if c is None else S.add(c, m.coeff)
    return tuple(Monomial(c, e) for e, c in sorted(acc.items(), reverse=True))


class Polynomial:
    """A nonempty supertropical sum of Laurent monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, terms, n=None, prune=True):
        terms = list(terms)
        if not terms:
            raise ValueError("empty polynomial")
        self.n = terms[0].n if n is None else n
        merged = _merge(terms)
        if prune:
            merged = _prune_terms(merged)
        self.terms = merged
        if len(self.terms) > _budget[0]:
            raise BudgetError(len(self.terms), _budget[0])

    @classmethod
    def const(cls, c, n):
        return cls([Monomial(c, (0,) * n)], n)

    @classmethod
    def var(cls, i, n):
        e = [0] * n
        e[i] = 1
        return cls([Monomial(ONE, e)], n)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return Polynomial(self.terms + other.terms, self.n)

    def __mul__(self, other):
        return Polynomial([a * b for a in self.terms for b in other.terms],
                          self.n)

    def __pow__(self, k):
        return self.power(k)

    def power(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.const(ONE, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def without(self, i):
        """The sum omitting the i-th monomial, unpruned."""
        rest = self.terms[:i] + self.terms[i + 1:]
        return Polynomial(rest, self.n, prune=False)

    def is_tangible(self):
        return all(not m.coeff.ghost for m in self.terms)

    def magnitude_at(self, x):
        return max(m.magnitude_at(x) for m in self.terms)

    def evaluate(self, point):
        v = None
        for m in self.terms:
            w = m.evaluate(point)
            v = w if v is None else S.add(v, w)
        return v

    def affines(self):
        return [m.affine() for m in self.terms]

    def __str__(self):
        return " + ".join(format_monomial(m) for m in self.terms)

    __repr__ = __str__


# ---------------------------------------------------------------- pruning

def _sample_points(n):
    pts = [(Fraction(0),) * n]
    for i in range(n):
        for s in (1, -1, 7, -7, 1000, -1000):
            x = [Fraction(0)] * n
            x[i] = Fraction(s)
            pts.append(tuple(x))
    if n >= 2:
        for a in (3, -3, 500, -500):
            for b in (2, -2, 700, -700):
                x = [Fraction(0)] * n
                x[0], x[1] = Fraction(a), Fraction(b)
                for j in range(2, n):
                    x[j] = Fraction(a + b * j, 3)
                pts.append(tuple(x))
    return pts


_SAMPLES = {}


def strictly_dominates(terms, i):
    """True if monomial i is the unique maximum on a nonempty open set."""
    m = terms[i]
    n = m.n
    a = m.affine()
    gts = []
    for j, o in enumerate(terms):
        if j == i:
            continue
        b = o.affine()
        row = tuple(u - v for u, v in zip(a, b))
        if not any(row[1:]):
            if row[0] <= 0:
                return False
            continue
        gts.append(row)
    if not gts:
        return True
    return feasible_point(n, gts=gts) is not None


@lru_cache(maxsize=200000)
def _prune_terms(terms):
    """Drop monomials that never strictly dominate.

    A monomial with no strict region sits on a face of the upper hull of
    the lifted exponent points but is not a vertex of it; wherever it
    attains the maximum, at least two other monomials (the vertices of that
    face) attain it too, so the value is ghost with or without it.  Hence
    strict dominance is the whole test, layer included.
    """
    if len(terms) <= 1:
        return terms
    n = terms[0].n
    pts = _SAMPLES.get(n)
    if pts is None:
        pts = _SAMPLES[n] = _sample_points(n)
    keep = [False] * len(terms)
    for x in pts:
        vals = [m.magnitude_at(x) for m in terms]
        top = max(vals)
        idx = [k for k, v in enumerate(vals) if v == top]
        if len(idx) == 1:
            keep[idx[0]] = True
    for k in range(len(terms)):
        if not keep[k]:
            keep[k] = strictly_dominates(terms, k)
    return tuple(m for m, ok in zip(terms, keep) if ok)


def essential_prune(p):
    return Polynomial(p.terms, p.n)


# --------------------------------------------------------- rational exprs

class RationalExpr:
    """``num * den^*`` with both parts pruned polynomials."""

    __slots__ = ("num", "den", "n", "degenerate")

    def __init__(self, num, den=None, degenerate=False):
        self.n = num.n
        if den is not None and len(den.terms) == 1:
            d = den.terms[0]
            if not any(d.exps) and not d.coeff.ghost and d.coeff != ONE:
                # fold a tangible constant denominator into the numerator
                num = num * Polynomial.const(S.star(d.coeff), num.n)
                den = None
        self.num = num
        self.den = den if den is not None else Polynomial.const(ONE, num.n)
        self.degenerate = degenerate

    @classmethod
    def const(cls, c, n):
        return cls(Polynomial.const(c, n))

    @classmethod
    def monomial(cls, m):
        pos = Monomial(m.coeff, [max(e, 0) for e in m.exps])
        neg = Monomial(ONE, [max(-e, 0) for e in m.exps])
        return cls(Polynomial([pos]), Polynomial([neg]))

    def __eq__(self, other):
        return (isinstance(other, RationalExpr) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return mul(self, star(other))

    def __and__(self, other):
        return wedge(self, other)

    def __pow__(self, k):
        return power(self, k)

    def evaluate(self, point):
        point = [_as_scalar(v) for v in point]
        if len(point) != self.n:
            raise ValueError("point has %d coordinates, expected %d"
                             % (len(point), self.n))
        return S.mul(self.num.evaluate(point), S.star(self.den.evaluate(point)))

    def magnitude_at(self, x):
        return self.num.magnitude_at(x) - self.den.magnitude_at(x)

    def __str__(self):
        return format_expr(self)

    __repr__ = __str__


def _as_scalar(v):
    if isinstance(v, Scalar):
        return v
    return S.t(v)


def format_poly(p):
    if len(p.terms) == 1:
        return format_monomial(p.terms[0])
    return "(" + str(p) + ")"


def format_expr(f):
    """Text form accepted back by the parser."""
    den = f.den
    if len(den.terms) == 1 and den.terms[0] == Monomial(ONE, (0,) * f.n):
        return str(f.num)
    d = format_poly(den)
    if "*" in d and not d.startswith("("):
        # a product after '/' would otherwise associate to the left
        d = "(" + d + ")"
    return format_poly(f.num) + " / " + d


def add(f, g):
    num = f.num * g.den + g.num * f.den
    return RationalExpr(num, f.den * g.den)


def mul(f, g):
    return RationalExpr(f.num * g.num, f.den * g.den)


def star(f):
    return RationalExpr(f.den, f.num)


def wedge(f, g):
    # f ^ g = f g (f + g)^*
    return RationalExpr(f.num * g.num, f.num * g.den + f.den * g.num)


def norm(f):
    # |h/g| = (h^2 + g^2) / (g h)
    return RationalExpr(f.num * f.num + f.den * f.den, f.num * f.den)


def power(f, k):
    if k >= 0:
        return RationalExpr(f.num.power(k), f.den.power(k))
    return RationalExpr(f.den.power(-k), f.num.power(-k))


def combine(op, f, g=None):
    if op == "add":
        return add(f, g)
    if op == "mul":
        return mul(f, g)
    if op == "star":
        return star(f)
    if op == "wedge":
        return wedge(f, g)
    if op == "norm":
        return norm(f)
    raise ValueError("unknown operation %r" % op)


def const(c, n):
    return RationalExpr.const(_as_scalar(c), n)


def as_expr(p):
    if isinstance(p, RationalExpr):
        return p
    return RationalExpr(p)


# ------------------------------------------------------- hat constructions

def _polynomial_of(f):
    if isinstance(f, RationalExpr):
        return f.num
    return f


def hat(f):
    """``f^t (prod_i f_(h_i))^*`` for ``f`` with t essential monomials."""
    f = _polynomial_of(f)
    t = len(f.terms)
    if t == 1:
        return RationalExpr(Polynomial.const(ONE, f.n), degenerate=True)
    den = Polynomial.const(ONE, f.n)
    for i in range(t):
        den = den * f.without(i)
    return RationalExpr(f.power(t), den)


def molecules(f):
    f = _polynomial_of(f)
    if len(f.terms) == 1:
        return []
    return [RationalExpr(Polynomial([m], f.n), f.without(i))
            for i, m in enumerate(f.terms)]


def tilde(f):
    """The wedge of the norms of the molecules; its skeleton is Corn(f)."""
    mols = molecules(f)
    if not mols:
        return RationalExpr(Polynomial.const(ONE, _polynomial_of(f).n),
                            degenerate=True)
    out = norm(mols[0])
    for m in mols[1:]:
        out = wedge(out, norm(m))
    return out


def underline(f):
    return f.num + f.den


# constant with empty skeleton, stands in for tilde of a single monomial
_EMPTY_SKEL = S.t(1)


def phi_ci(f):
    n = f.n
    one = RationalExpr.const(ONE, n)
    parts = []
    for poly, g in ((f.num, add(star(f), one)), (f.den, add(f, one))):
        if len(poly.terms) == 1:
            tl = RationalExpr.const(_EMPTY_SKEL, n)
        else:
            tl = tilde(poly)
        parts.append(add(norm(g), tl))
    return wedge(wedge(norm(f), parts[0]), parts[1])


def require_tangible_den(f):
    if not f.den.is_tangible():
        raise GhostDenominatorError("denominator %s has ghost coefficients"
                                    % f.den)
