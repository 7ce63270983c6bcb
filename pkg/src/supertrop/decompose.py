"""HO-decomposition, wedge decomposition and kernel classification.

For f = h/g every point of Skel(f) has a dominance pattern: the numerator
monomials H_a and denominator monomials G_a attaining the max there.  The
patterns are read off the cells C_ij = {h_i = g_j, h_i, g_j dominant} and
their intersections.  Each pattern gives an HS-part (the relations h'/g' = 1
among dominant monomials) and a region part (the order fractions
1 + h''/h' for non-dominant h'', likewise for g).  Full-dimensional cells of
the arrangement that miss the skeleton give bounded-below components.
"""

from fractions import Fraction
from math import gcd, lcm

from . import expr as E
from .complex import (CellComplex, arrangement, make_cell, skel_complex, sub,
                      neg, region_covered)
from .expr import Monomial, RationalExpr
from .kernel import PrincipalKernel, kernel, equiv_mod_F, bounded_below
from .lp import minimize
from .lp.core import OPTIMAL
from .scalar import t, ONE
from . import linalg

HS_REGION = "HSxRegion"
BB_REGION = "BoundedBelowxRegion"


def monomial_of_row(row):
    """L-monomial whose log form is the affine row (integer gradient)."""
    return Monomial(t(row[0]), [int(v) for v in row[1:]])


def order_fraction(m):
    """1 + m as a rational expression."""
    n = m.n
    return E.add(RationalExpr.const(ONE, n), RationalExpr.monomial(m))


def format_affine(row):
    """Log-scale text of an affine row, e.g. ``x1-x2`` or ``3+2*x1``."""
    out = ""
    c = Fraction(row[0])
    if c:
        out = str(c)
    for i, v in enumerate(row[1:]):
        v = Fraction(v)
        if not v:
            continue
        name = "x%d" % (i + 1)
        mag = abs(v)
        term = name if mag == 1 else "%s*%s" % (mag, name)
        if v < 0:
            out += "-" + term
        else:
            out += ("+" if out else "") + term
    return out or "0"


class HOComponent:
    __slots__ = ("kind", "hs", "region", "cell", "generator", "label")

    def __init__(self, kind, hs, region, cell, generator, label=None):
        self.kind = kind
        self.hs = hs
        self.region = region
        self.cell = cell
        self.generator = generator
        self.label = label

    @property
    def signature(self):
        return (self.kind, self.cell.dim if self.cell else -1,
                self.cell.key if self.cell else ())

    def kernel(self):
        return PrincipalKernel(self.generator)

    def hs_rows(self):
        return [m.affine() for m in self.hs]

    def region_rows(self):
        return [m.affine() for m in self.region]

    def to_json(self):
        return {
            "kind": self.kind,
            "hs": [format_affine(r) for r in self.hs_rows()],
            "region": ["1+(%s)" % format_affine(r) for r in self.region_rows()],
            "generator": str(self.generator),
        }

    def __repr__(self):
        d = self.to_json()
        return "%s(hs=%s, region=%s)" % (d["kind"], d["hs"], d["region"])


class HODecomposition:
    __slots__ = ("components", "source")

    def __init__(self, components, source):
        self.components = components
        self.source = source

    def hs_components(self):
        return [c for c in self.components if c.kind == HS_REGION]

    def skeleton(self):
        """Union of component skeletons (the skeleton of their intersection)."""
        return CellComplex(self.source.n,
                           [c.cell for c in self.hs_components()])

    def to_json(self):
        return {"components": [c.to_json() for c in self.components]}

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def _independent(rows):
    """Greedy subset of rows with independent gradients."""
    keep = []
    for r in rows:
        if not any(r[1:]):
            continue
        if linalg.rank([k[1:] for k in keep] + [r[1:]]) > len(keep):
            keep.append(r)
    return keep


def _primitive(row):
    """Scale to a primitive integer gradient with positive leading entry;
    <m> = <m^k> for k != 0, so the kernel is unchanged."""
    row = _integral(row)
    g = 0
    for v in row[1:]:
        g = gcd(g, int(v))
    if g == 0:
        return row
    if next(v for v in row[1:] if v) < 0:
        g = -g
    return tuple(v / g for v in row)


def _prune_region(n, eqs, rows):
    """Drop order constraints implied by the others."""
    cur = [r for r in rows if any(r[1:])]
    i = 0
    while i < len(cur):
        others = cur[:i] + cur[i + 1:]
        res = minimize(n, cur[i], eqs, others)
        if res.status == OPTIMAL and res.value >= 0:
            cur = others
        else:
            i += 1
    return cur


def _component(n, kind, hs_rows, region_rows, cell, label=None):
    hs = [monomial_of_row(r) for r in hs_rows]
    # region row r >= 0 is the order fraction 1 + m with m = -r
    region = [monomial_of_row(neg(r)) for r in region_rows]
    gen = None
    for m in hs:
        term = E.norm(RationalExpr.monomial(m))
        gen = term if gen is None else E.add(gen, term)
    for m in region:
        term = E.norm(order_fraction(m))
        gen = term if gen is None else E.add(gen, term)
    if gen is None:
        gen = RationalExpr.const(ONE, n)
    return HOComponent(kind, hs, region, cell, gen, label)


def _label(cell, H, G, i0, j0):
    hs = [k for k in range(len(H)) if cell.vanishes(sub(H[k], H[i0]))]
    gs = [k for k in range(len(G)) if cell.vanishes(sub(G[k], G[j0]))]
    return hs, gs


def skeleton_patterns(f):
    """All cells of the intersection closure of the C_ij, with patterns."""
    n = f.n
    H = [m.affine() for m in f.num.terms]
    G = [m.affine() for m in f.den.terms]
    found = {}
    for i in range(len(H)):
        hdom = [sub(H[i], b) for k, b in enumerate(H) if k != i]
        for j in range(len(G)):
            gdom = [sub(G[j], b) for k, b in enumerate(G) if k != j]
            c = make_cell(n, [sub(H[i], G[j])], hdom + gdom)
            if c is None or c.key in found:
                continue
            c.label = _label(c, H, G, i, j)
            found[c.key] = c
    frontier = list(found.values())
    while frontier:
        new = []
        cells = list(found.values())
        for a in frontier:
            for b in cells:
                if a is b:
                    continue
                c = make_cell(n, a.eqs + b.eqs, a.ges + b.ges)
                if c is None or c.key in found:
                    continue
                c.label = _label(c, H, G, a.label[0][0], a.label[1][0])
                found[c.key] = c
                new.append(c)
        frontier = new
    return sorted(found.values(), key=lambda c: c.sort_key())


def ho_decompose(K):
    K = kernel(K)
    f = K.generator
    E.require_tangible_den(f)
    n = f.n
    H = [m.affine() for m in f.num.terms]
    G = [m.affine() for m in f.den.terms]
    comps = []
    for cell in skeleton_patterns(f):
        hs_idx, gs_idx = cell.label
        i0, j0 = hs_idx[0], gs_idx[0]
        # relations h'/g' = 1 between dominant numerator and denominator terms
        rel = [sub(H[i0], G[k]) for k in gs_idx]
        rel += [sub(H[k], G[j0]) for k in hs_idx[1:]]
        hs_rows = [_primitive(r) for r in _independent(rel)]
        region = [sub(H[i0], H[k]) for k in range(len(H)) if k not in hs_idx]
        region += [sub(G[j0], G[k]) for k in range(len(G)) if k not in gs_idx]
        region = _prune_region(n, hs_rows, region)
        comps.append(_component(n, HS_REGION, hs_rows, region, cell,
                                {"H": hs_idx, "G": gs_idx}))
    for (i, j), ges in arrangement(n, [f.num, f.den]):
        A = sub(H[i], G[j])
        if make_cell(n, [A], ges) is not None:
            continue
        region = _prune_region(n, [], ges)
        cell = make_cell(n, [], ges)
        comps.append(_component(n, BB_REGION, [A], region, cell,
                                {"H": [i], "G": [j]}))
    comps.sort(key=lambda c: (c.kind != HS_REGION, c.cell.sort_key()))
    return HODecomposition(comps, K)


def reassemble(dec):
    """Generator of the intersection of all components: the wedge of norms."""
    gen = None
    for c in dec.components:
        term = E.norm(c.generator)
        gen = term if gen is None else E.wedge(gen, term)
    return gen


def wedge_decompose(K):
    """Component generators u_i with Skel(K) the union of Skel(u_i).

    Components whose skeleton is covered by the remaining ones are dropped,
    lowest dimension first.
    """
    K = kernel(K)
    f = K.generator
    if K.skeleton.is_empty():
        return [f]
    dec = ho_decompose(K)
    comps = dec.hs_components()
    order = sorted(range(len(comps)), key=lambda k: comps[k].cell.sort_key())
    alive = set(range(len(comps)))
    for k in order:
        rest = [comps[m].cell for m in sorted(alive) if m != k]
        c = comps[k].cell
        if rest and region_covered(f.n, c.eqs, c.ges, (), rest):
            alive.discard(k)
    return [comps[k].generator for k in sorted(alive)]


def wedge_of(terms):
    out = E.norm(terms[0])
    for u in terms[1:]:
        out = E.wedge(out, E.norm(u))
    return out


# ---------------------------------------------------------- classification

HP, HS, ORDER, REGION, HO, BOUNDED, GENERAL = (
    "HP", "HS", "order", "region", "HO", "bounded-below", "general")


def single_polyhedron(cx):
    """The complex as one canonical cell if its union is convex, else None."""
    if len(cx) == 1:
        return cx.cells[0]
    if not cx.cells:
        return None
    n = cx.n
    cand_eqs = []
    for r in cx.cells[0].eqs:
        if all(c.vanishes(r) for c in cx.cells):
            cand_eqs.append(r)
    cand_ges = []
    for c in cx.cells:
        for r in c.ges:
            ok = True
            for d in cx.cells:
                if d is c:
                    continue
                res = minimize(n, r, d.eqs, d.ges)
                if res.status != OPTIMAL or res.value < 0:
                    ok = False
                    break
            if ok:
                cand_ges.append(r)
    P = make_cell(n, cand_eqs, cand_ges)
    if P is None or not region_covered(n, P.eqs, P.ges, (), cx.cells):
        return None
    return P


def _integral(row):
    m = 1
    for v in row[1:]:
        m = lcm(m, Fraction(v).denominator)
    return tuple(Fraction(v) * m for v in row)


def candidate_generator(cell):
    """Sum of |m| over the hull equations and |1 + m| over the facets."""
    n = cell.n
    hs = [_integral(r) for r in cell.eqs]
    region = [_integral(r) for r in cell.ges]
    return _component(n, HS_REGION, hs, region, cell).generator


def classify(f):
    cx = skel_complex(f)
    n = f.n
    if cx.is_empty():
        return BOUNDED if bounded_below(f) else GENERAL
    P = single_polyhedron(cx)
    if P is None:
        return GENERAL
    codim = n - P.dim
    if codim == 0:
        kind = ORDER if len(P.ges) == 1 else REGION
    elif P.ges:
        kind = HO
    else:
        kind = HP if codim == 1 else HS
    if not equiv_mod_F(f, candidate_generator(P)):
        return GENERAL
    return kind
