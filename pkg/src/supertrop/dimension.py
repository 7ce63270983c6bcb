"""Convex dependence, bases, convex dimension and Jordan-Holder chains.

For L-monomials convex dependence reduces to linear dependence of the
exponent (gradient) vectors over Q: the constants are absorbed by <F>, and
divisibility lets exponents be rescaled by rationals.  Everything here is
therefore exact rank computation.
"""

from fractions import Fraction
from math import lcm

from . import expr as E
from . import linalg
from .complex import CellComplex, make_cell, neg
from .expr import Monomial, RationalExpr
from .kernel import PrincipalKernel, kernel
from .scalar import t, ONE


class NotHSError(ValueError):
    """Input is not an HS-kernel (or region kernel, where one is needed)."""


class EmptySkeletonError(ValueError):
    pass


def gradient(m):
    return tuple(Fraction(e) for e in m.exps)


def _check_nonconstant(ms):
    for m in ms:
        if not any(m.exps):
            raise ValueError("constant monomial %s has no convex content" % m)


def convex_dependent(f, S):
    """True iff f is convexly dependent on the monomials S."""
    _check_nonconstant([f] + list(S))
    return linalg.in_span(gradient(f), [gradient(s) for s in S])


class ExponentBasis:
    __slots__ = ("monomials", "vectors", "rank")

    def __init__(self, monomials):
        self.monomials = tuple(monomials)
        self.vectors = tuple(gradient(m) for m in self.monomials)
        self.rank = len(self.monomials)

    def __len__(self):
        return self.rank

    def __repr__(self):
        return "ExponentBasis(%s)" % list(self.monomials)


def convex_basis(S, start=()):
    """Greedy exchange: a maximal independent subset of S.

    With ``start`` given (assumed independent) the basis extends it, which is
    the Steinitz exchange step.
    """
    S = list(S)
    _check_nonconstant(S)
    keep = list(start)
    vecs = [gradient(m) for m in keep]
    for m in S:
        v = gradient(m)
        if not linalg.in_span(v, vecs):
            keep.append(m)
            vecs.append(v)
    return ExponentBasis(keep[len(start):] if start else keep)


# ------------------------------------------------------------ HS inputs

def _affine_monomial(row):
    m = 1
    for v in row[1:]:
        m = lcm(m, Fraction(v).denominator)
    return Monomial(t(Fraction(row[0]) * m), [int(Fraction(v) * m) for v in row[1:]])


def hs_generator(monos):
    """Sum of |m| over the monomials: the standard HS generator."""
    monos = list(monos)
    gen = E.norm(RationalExpr.monomial(monos[0]))
    for m in monos[1:]:
        gen = E.add(gen, E.norm(RationalExpr.monomial(m)))
    return gen


def hs_skeleton(n, monos):
    """Affine subspace {m = 1 for all m}, as a complex."""
    return CellComplex(n, [make_cell(n, [m.affine() for m in monos], [])])


def region_skeleton(n, monos):
    """Skeleton of the region kernel prod <1 + m>: the polyhedron {m <= 1}."""
    return CellComplex(n, [make_cell(n, [], [neg(m.affine()) for m in monos])])


def hs_monomials(L):
    """Monomials generating the HS-kernel L.

    L is a list of monomials, a generator expression or a kernel.  For
    expressions the skeleton must be one nonempty affine subspace and L must
    classify as HP or HS; the monomials are then read off the equations.
    """
    if isinstance(L, (list, tuple)):
        if not L or not all(isinstance(m, Monomial) for m in L):
            raise NotHSError("expected a nonempty list of monomials")
        _check_nonconstant(L)
        return list(L)
    from .decompose import classify, single_polyhedron, HP, HS
    K = kernel(L)
    P = single_polyhedron(K.skeleton)
    if P is None or P.ges or not P.eqs:
        raise NotHSError("skeleton is not a proper affine subspace")
    if classify(K.generator) not in (HP, HS):
        raise NotHSError("generator does not classify as HP or HS")
    return [_affine_monomial(r) for r in P.eqs]


def condeg(x):
    """Convex dimension: n for the ambient semifield, rank for an HS-kernel."""
    if isinstance(x, int):
        if x < 0:
            raise ValueError("negative variable count")
        return x
    return linalg.rank([gradient(m) for m in hs_monomials(x)])


def _region_check(R, n):
    """Skeleton of a region kernel R (None means the trivial kernel)."""
    if R is None:
        return CellComplex(n, [make_cell(n, [], [])])
    if isinstance(R, (list, tuple)):
        return region_skeleton(n, R)
    from .decompose import classify, ORDER, REGION
    K = kernel(R)
    if classify(K.generator) not in (ORDER, REGION):
        raise NotHSError("R is not a region kernel")
    return K.skeleton


def quotient_condeg(L, R=None, check=True):
    """condeg of F(Lambda)/(L R), which equals n - condeg(L).

    With ``check`` the value is recomputed from the definition: the images of
    the point monomials lambda_i / a_i (a a point of Skel(LR)) are extended
    from a basis of L by exchange, and the number of new elements counted.
    """
    monos = hs_monomials(L)
    n = monos[0].n
    sk = _hs_skeleton_of(L, monos, n).intersection(_region_check(R, n))
    if sk.is_empty():
        raise EmptySkeletonError("Skel(L R) is empty")
    value = n - condeg(monos)
    if check:
        a = sk.cells[0].point
        pts = [Monomial(t(-a[i]), [1 if k == i else 0 for k in range(n)])
               for i in range(n)]
        base = convex_basis(monos)
        ext = convex_basis(pts, start=list(base.monomials))
        if ext.rank != value:
            raise AssertionError("definitional condeg %d != %d" % (ext.rank, value))
    return value


def _hs_skeleton_of(L, monos, n):
    if isinstance(L, (list, tuple)):
        return hs_skeleton(n, monos)
    return kernel(L).skeleton


# ---------------------------------------------------------------- chains

class JHChain:
    """L = <b_1..b_u> > <b_1..b_{u-1}> > ... > <b_1> > trivial."""

    __slots__ = ("basis", "n")

    def __init__(self, basis, n):
        self.basis = basis
        self.n = n

    @property
    def length(self):
        return self.basis.rank

    def generators(self):
        """Chain generators from the top down, ending with the trivial 1."""
        b = self.basis.monomials
        out = [hs_generator(b[:k]) for k in range(len(b), 0, -1)]
        out.append(RationalExpr.const(ONE, self.n))
        return out

    def kernels(self):
        return [PrincipalKernel(g) for g in self.generators()]

    def factors(self):
        """HP generators of the successive quotients, top down."""
        return [RationalExpr.monomial(m) for m in reversed(self.basis.monomials)]

    def skeletons(self):
        b = self.basis.monomials
        out = [hs_skeleton(self.n, b[:k]) for k in range(len(b), 0, -1)]
        out.append(CellComplex(self.n, [make_cell(self.n, [], [])]))
        return out

    def strictly_descending(self):
        sk = self.skeletons()
        return all(sk[i].subset_of(sk[i + 1]) and not sk[i + 1].subset_of(sk[i])
                   for i in range(len(sk) - 1))

    def to_json(self):
        gens = self.generators()
        recs = []
        for i, g in enumerate(gens):
            recs.append({"step": i, "generator": str(g),
                         "height": self.length - i})
        return {"length": self.length,
                "basis": [str(m) for m in self.basis.monomials],
                "chain": recs}

    def __len__(self):
        return self.length


def jh_chain(L, order=None):
    """Composition series of the HS-kernel L from a convex basis.

    ``order`` optionally permutes the generating monomials before the
    greedy basis selection.
    """
    monos = hs_monomials(L)
    if order is not None:
        monos = [monos[i] for i in order]
    return JHChain(convex_basis(monos), monos[0].n)


def hdim_witness(n):
    """Height-n chain through the origin: <lambda_1, ..., lambda_n> > ... ."""
    monos = [Monomial(ONE, [1 if k == i else 0 for k in range(n)])
             for i in range(n)]
    return JHChain(convex_basis(monos), n)


def hdim(n):
    """Maximal height of an HS-kernel chain in n variables.

    A chain of HS-kernels strictly descends only if the exponent spans do,
    so its length is bounded by the rank n; the witness attains it.
    """
    w = hdim_witness(n)
    assert w.length == n
    return n
