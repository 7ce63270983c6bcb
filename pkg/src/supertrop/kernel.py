"""Principal nu-kernels and the predicates built on them.

Throughout, for a rational function f = h/g the log magnitude of |f| is
F(x) = |max_i h_i(x) - max_j g_j(x)|, a piecewise affine function.  A
kernel is stored by one generator; its skeleton is cached.
"""

import math
from fractions import Fraction

from . import expr as E
from .complex import (arrangement, skel_complex, corn_complex, make_cell,
                      sub, neg)
from .lp import maximize, minimize
from .lp.core import OPTIMAL, UNBOUNDED
from .scalar import t

ALPHA = t(1)


class PrincipalKernel:
    __slots__ = ("generator", "_skel")

    def __init__(self, generator, skeleton=None):
        self.generator = generator
        self._skel = skeleton

    @property
    def n(self):
        return self.generator.n

    @property
    def skeleton(self):
        if self._skel is None:
            self._skel = skel_complex(self.generator)
        return self._skel

    def __contains__(self, g):
        return member(g, self).result

    def __repr__(self):
        return "<%s>" % self.generator


def kernel(f):
    return f if isinstance(f, PrincipalKernel) else PrincipalKernel(f)


def kernel_product(K, L):
    K, L = kernel(K), kernel(L)
    gen = E.mul(E.norm(K.generator), E.norm(L.generator))
    return PrincipalKernel(gen, K.skeleton.intersection(L.skeleton))


def kernel_intersection(K, L):
    K, L = kernel(K), kernel(L)
    gen = E.wedge(E.norm(K.generator), E.norm(L.generator))
    return PrincipalKernel(gen, K.skeleton.union(L.skeleton))


def generated_by(exprs):
    """Kernel generated by a finite set, collapsed to sum of norms."""
    exprs = list(exprs)
    gen = E.norm(exprs[0])
    for f in exprs[1:]:
        gen = E.add(gen, E.norm(f))
    return PrincipalKernel(gen)


def omega(f, alpha=ALPHA):
    return E.wedge(E.norm(f), E.RationalExpr.const(alpha, f.n))


# ------------------------------------------------------------ membership

class Membership:
    __slots__ = ("result", "witness_k", "cell")

    def __init__(self, result, witness_k=None, cell=None):
        self.result = result
        self.witness_k = witness_k
        self.cell = cell

    def __bool__(self):
        return self.result

    def __repr__(self):
        return "Membership(%s, k=%s)" % (self.result, self.witness_k)


def _ratio_sup(n, A, B, eqs, ges):
    """sup B/A over {x in cell : A(x) > 0}, by the Charnes-Cooper map.

    Returns (status, value) with status OPTIMAL, UNBOUNDED or INFEASIBLE
    (no point of the cell has A > 0).
    """
    hom = lambda r: tuple(r[1:]) + (r[0],)
    zero = Fraction(0)
    h_eqs = [(zero,) + hom(r) for r in eqs]
    h_eqs.append((Fraction(-1),) + hom(A))
    h_ges = [(zero,) + hom(r) for r in ges]
    h_ges.append((zero,) * (n + 1) + (Fraction(1),))
    res = maximize(n + 1, (zero,) + hom(B), h_eqs, h_ges)
    return res.status, res.value


def member(g, K):
    """Decide g in <f>: is there k with G <= k F on all of Q^n?"""
    K = kernel(K)
    f = K.generator
    n = f.n
    worst = Fraction(0)
    for choice, ges in arrangement(n, [f.num, f.den, g.num, g.den]):
        Fa = sub(f.num.terms[choice[0]].affine(), f.den.terms[choice[1]].affine())
        Ga = sub(g.num.terms[choice[2]].affine(), g.den.terms[choice[3]].affine())
        for A in (Fa, neg(Fa)):
            sub_ges = ges + [A]
            feasible = False
            for B in (Ga, neg(Ga)):
                status, val = _ratio_sup(n, A, B, [], sub_ges)
                if status == UNBOUNDED:
                    return Membership(False, None, make_cell(n, [], sub_ges))
                if status == OPTIMAL:
                    feasible = True
                    worst = max(worst, val)
            if not feasible:
                # the subcell lies in {F = 0}; g must vanish there too
                for B in (Ga, neg(Ga)):
                    res = maximize(n, B, [A], ges)
                    if res.status == UNBOUNDED or (
                            res.status == OPTIMAL and res.value > 0):
                        return Membership(False, None,
                                          make_cell(n, [A], ges))
    k = max(1, math.ceil(worst))
    return Membership(True, k)


def kernel_equal(K, L):
    K, L = kernel(K), kernel(L)
    return bool(member(L.generator, K)) and bool(member(K.generator, L))


def equiv_mod_F(K, L, alpha=ALPHA):
    K, L = kernel(K), kernel(L)
    return kernel_equal(omega(K.generator, alpha), omega(L.generator, alpha))


# ------------------------------------------------------------ boundedness

class Bound:
    __slots__ = ("result", "value", "cell")

    def __init__(self, result, value=None, cell=None):
        self.result = result
        self.value = value
        self.cell = cell

    def __bool__(self):
        return self.result

    def __repr__(self):
        return "Bound(%s, %s)" % (self.result, self.value)


def _cells_of(f):
    for choice, ges in arrangement(f.n, [f.num, f.den]):
        A = sub(f.num.terms[choice[0]].affine(), f.den.terms[choice[1]].affine())
        yield A, ges


def bounded_below(f):
    """inf of the log magnitude of |f| is positive; the inf is attained, so
    the certificate is the minimum and a cell realizing it."""
    n = f.n
    best = None
    for A, ges in _cells_of(f):
        for B in (A, neg(A)):
            res = minimize(n, B, [], ges + [B])
            if res.status != OPTIMAL:
                continue
            if best is None or res.value < best[0]:
                best = (res.value, ges)
    val, ges = best
    return Bound(val > 0, val, make_cell(n, [], ges))


def bounded_above(f):
    n = f.n
    best = Fraction(0)
    for A, ges in _cells_of(f):
        for B in (A, neg(A)):
            res = maximize(n, B, [], ges + [B])
            if res.status == UNBOUNDED:
                return Bound(False, None, make_cell(n, [], ges + [B]))
            if res.status == OPTIMAL:
                best = max(best, res.value)
    return Bound(True, best)


# ---------------------------------------------------- corner internality

def corner_internal(f):
    E.require_tangible_den(f)
    return corn_complex(E.underline(f)).subset_of(skel_complex(f))


def regular(f):
    """No full-dimensional piece of Q^n lies in Skel(f)."""
    d = skel_complex(f).dimension()
    return d is None or d < f.n


def regular_at(f, x):
    """Every neighbourhood of x meets a point off Skel(f).

    Near x the function is max over dominant numerator gradients minus max
    over dominant denominator gradients; it vanishes identically near x
    exactly when both gradient sets have the same convex hull.
    """
    x = tuple(Fraction(v) for v in x)
    if f.magnitude_at(x) != 0:
        return True
    hv = [m.magnitude_at(x) for m in f.num.terms]
    gv = [m.magnitude_at(x) for m in f.den.terms]
    H = [m.exps for m, v in zip(f.num.terms, hv) if v == max(hv)]
    G = [m.exps for m, v in zip(f.den.terms, gv) if v == max(gv)]
    return _hull_vertices(H) != _hull_vertices(G)


def _hull_vertices(pts):
    """Vertices of the convex hull of integer points, via LP."""
    pts = sorted(set(pts))
    verts = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not others or not _in_hull(p, others):
            verts.append(p)
    return tuple(verts)


def _in_hull(p, pts):
    # p = sum w_k q_k, w >= 0, sum w = 1 ; feasibility in w
    from .lp import feasible_point
    m = len(pts)
    eqs = [(-Fraction(p[c]),) + tuple(Fraction(q[c]) for q in pts)
           for c in range(len(p))]
    eqs.append((Fraction(-1),) + (Fraction(1),) * m)
    ges = []
    for k in range(m):
        r = [Fraction(0)] * (m + 1)
        r[k + 1] = Fraction(1)
        ges.append(tuple(r))
    return feasible_point(m, eqs, ges) is not None


# ---------------------------------------------------------------- polars

def orthogonal(f, g):
    return skel_complex(f).union(skel_complex(g)).covers_all()


def in_double_polar(g, f):
    """g in f^{perp perp}, i.e. Skel(g) contains Skel(f)."""
    return skel_complex(f).subset_of(skel_complex(g))
