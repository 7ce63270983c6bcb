"""Exact rational polyhedral complexes for corner loci and skeletons.

An affine functional is a tuple ``(c, g1, ..., gn)`` of Fractions standing
for ``c + g.x``.  A cell is a closed polyhedron ``{eqs == 0, ges >= 0}``
stored in a canonical form: the equalities (explicit and implicit) in
reduced row echelon form, and an irredundant list of normalized
inequalities written in the free coordinates of the affine hull.  Two cells
are the same set exactly when their keys agree.
"""

from fractions import Fraction

from .lp import feasible_point, maximize, minimize
from .lp.core import OPTIMAL, UNBOUNDED
from . import linalg

_ZERO = Fraction(0)


def affine(c, grad):
    return (Fraction(c),) + tuple(Fraction(v) for v in grad)


def to_affine(m):
    """Log-scale functional of a monomial; the layer is not part of it."""
    return m.affine()


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def value(row, x):
    v = row[0]
    for c, xi in zip(row[1:], x):
        if c:
            v += c * xi
    return v


def _is_const(row):
    return not any(row[1:])


class _Hull:
    """Affine hull {E x = e} in RREF, used to reduce rows modulo it."""

    def __init__(self, n, eqs):
        self.n = n
        # reorder rows as (g1..gn, c) so pivots land on variables
        mat = [tuple(r[1:]) + (r[0],) for r in eqs if any(r)]
        if mat:
            R, piv = linalg.rref(mat, n)
        else:
            R, piv = [], []
        self.rows = R
        self.pivots = piv
        self.free = [i for i in range(n) if i not in piv]

    def reduce(self, row):
        """Rewrite ``row`` so it no longer involves pivot variables."""
        r = list(row[1:]) + [row[0]]
        for R, p in zip(self.rows, self.pivots):
            f = r[p]
            if f:
                r = [a - f * b for a, b in zip(r, R)]
        return (r[-1],) + tuple(r[:-1])

    def eq_rows(self):
        return tuple((R[-1],) + tuple(R[:-1]) for R in self.rows)

    def vanishes(self, row):
        return not any(self.reduce(row))


def _normalize(row):
    lead = next(abs(v) for v in row[1:] if v)
    if lead == 1:
        return row
    return tuple(v / lead for v in row)


def _interior_slack(n, eqs, ges):
    """max s <= 1 with every ge row >= s.  None if the system is empty."""
    if not ges:
        pt = feasible_point(n, eqs)
        return None if pt is None else (Fraction(1), pt)
    ext_eqs = [r + (_ZERO,) for r in eqs]
    ext_ges = [r + (Fraction(-1),) for r in ges]
    ext_ges.append((Fraction(1),) + (_ZERO,) * n + (Fraction(-1),))
    res = maximize(n + 1, (0,) * (n + 1) + (1,), ext_eqs, ext_ges)
    if res.status != OPTIMAL:
        return None
    return res.value, res.point[:n]


class Cell:
    """A nonempty closed polyhedron in canonical form."""

    __slots__ = ("n", "eqs", "ges", "dim", "label", "point", "_hull")

    def __init__(self, n, eqs, ges, dim, label, point, hull):
        self.n = n
        self.eqs = eqs
        self.ges = ges
        self.dim = dim
        self.label = label
        self.point = point
        self._hull = hull

    @property
    def key(self):
        return (self.eqs, self.ges)

    def sort_key(self):
        return (self.dim, len(self.eqs), self.eqs, len(self.ges), self.ges)

    def __eq__(self, other):
        return isinstance(other, Cell) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def contains_point(self, x):
        return (all(value(r, x) == 0 for r in self.eqs)
                and all(value(r, x) >= 0 for r in self.ges))

    def vanishes(self, row):
        return self._hull.vanishes(row)

    def __repr__(self):
        return "Cell(dim=%d, eq=%s, ge=%s)" % (
            self.dim, [_fmt_row(r) for r in self.eqs],
            [_fmt_row(r) for r in self.ges])


def _fmt_row(r):
    return "[" + ", ".join(str(v) for v in r) + "]"


def make_cell(n, eqs=(), ges=(), label=None):
    """Canonical cell for {eqs == 0, ges >= 0}, or None if it is empty."""
    eqs = [tuple(Fraction(v) for v in r) for r in eqs]
    ges = [tuple(Fraction(v) for v in r) for r in ges]
    for r in eqs:
        if _is_const(r) and r[0] != 0:
            return None
    keep = []
    for r in ges:
        if _is_const(r):
            if r[0] < 0:
                return None
        else:
            keep.append(r)
    ges = keep
    eqs = [r for r in eqs if not _is_const(r)]
    hull = _Hull(n, eqs)
    # inconsistent equalities leave a nonzero constant after reduction
    if any(any(hull.reduce(r)) for r in eqs):
        return None
    # work in reduced coordinates from here on
    ges = [hull.reduce(r) for r in ges]
    for r in ges:
        if _is_const(r) and r[0] < 0:
            return None
    ges = [r for r in ges if not _is_const(r)]
    eqs = list(hull.eq_rows())
    got = _interior_slack(n, eqs, ges)
    if got is None:
        return None
    s, point = got
    if s < 0:
        return None
    if s == 0:
        implicit = _implicit(n, eqs, ges, point)
        if implicit:
            eqs = eqs + [ges[i] for i in implicit]
            hull = _Hull(n, eqs)
            rest = [ges[i] for i in range(len(ges)) if i not in implicit]
            ges = [hull.reduce(r) for r in rest]
            ges = [r for r in ges if not _is_const(r)]
            eqs = list(hull.eq_rows())
    dim = len(hull.free)
    best = {}
    for r in ges:
        r = _normalize(r)
        g = r[1:]
        if g not in best or r[0] < best[g][0]:
            best[g] = r
    ges = sorted(best.values(), key=lambda r: (r[1:], r[0]))
    if dim >= 2 and len(ges) > 2:
        ges = _irredundant(n, eqs, ges)
    point = tuple(point)
    if not all(value(r, point) == 0 for r in eqs):
        point = feasible_point(n, eqs, ges)
    return Cell(n, tuple(eqs), tuple(ges), dim, label, point, hull)


def _implicit(n, eqs, ges, point):
    """Indices of inequalities that vanish on the whole set."""
    maybe = [i for i, r in enumerate(ges) if value(r, point) == 0]
    out = []
    known_pos = set()
    for i in maybe:
        if i in known_pos:
            continue
        res = maximize(n, ges[i], eqs, ges)
        if res.status == OPTIMAL and res.value == 0:
            out.append(i)
        else:
            p = res.point
            for j in maybe:
                if value(ges[j], p) > 0:
                    known_pos.add(j)
    return out


def _irredundant(n, eqs, ges):
    cur = list(ges)
    i = 0
    while i < len(cur):
        others = cur[:i] + cur[i + 1:]
        res = minimize(n, cur[i], eqs, others)
        if res.status == OPTIMAL and res.value >= 0:
            cur = others
        else:
            i += 1
    return cur


# ------------------------------------------------------------- containment

def cell_contains(d, c):
    """Closed containment c ⊆ d."""
    if c.dim > d.dim:
        return False
    if c.point is not None and not d.contains_point(c.point):
        return False
    for r in d.eqs:
        if not c.vanishes(r):
            return False
    for r in d.ges:
        res = minimize(c.n, r, c.eqs, c.ges)
        if res.status == UNBOUNDED or (res.status == OPTIMAL and res.value < 0):
            return False
    return True


def _covered(n, eqs, ges, gts, cells):
    """Is {eqs = 0, ges >= 0, gts > 0} inside the union of ``cells``?"""
    if feasible_point(n, eqs, ges, gts) is None:
        return True
    if not cells:
        return False
    b, rest = cells[0], cells[1:]
    if feasible_point(n, eqs + list(b.eqs), ges + list(b.ges), gts) is None:
        return _covered(n, eqs, ges, gts, rest)
    acc_eqs = list(eqs)
    acc_ges = list(ges)
    for e in b.eqs:
        for piece in (e, neg(e)):
            if not _covered(n, acc_eqs, acc_ges, gts + [piece], rest):
                return False
        acc_eqs.append(e)
    for r in b.ges:
        if not _covered(n, acc_eqs, acc_ges, gts + [neg(r)], rest):
            return False
        acc_ges.append(r)
    return True


def region_covered(n, eqs, ges, gts, cells):
    return _covered(n, list(eqs), list(ges), list(gts), list(cells))


# --------------------------------------------------------------- complexes

class CellComplex:
    """A finite union of canonical cells, sorted and without duplicates."""

    __slots__ = ("n", "cells")

    def __init__(self, n, cells, maximal=True):
        self.n = n
        uniq = {}
        for c in cells:
            if c is None:
                continue
            prev = uniq.get(c.key)
            if prev is None:
                uniq[c.key] = c
            elif c.label and prev.label:
                uniq[c.key] = _relabel(prev, _merge_labels(prev.label, c.label))
        cs = list(uniq.values())
        if maximal:
            cs = _maximal(cs)
        cs.sort(key=Cell.sort_key)
        self.cells = tuple(cs)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def is_empty(self):
        return not self.cells

    def contains_point(self, x):
        return any(c.contains_point(x) for c in self.cells)

    def dimension(self):
        """Largest cell dimension, or None for the empty set."""
        if not self.cells:
            return None
        return max(c.dim for c in self.cells)

    def subset_of(self, other):
        return all(region_covered(self.n, c.eqs, c.ges, (), other.cells)
                   for c in self.cells)

    def set_equal(self, other):
        if self.n != other.n:
            return False
        if self.keys() == other.keys():
            return True
        return self.subset_of(other) and other.subset_of(self)

    def keys(self):
        return tuple(c.key for c in self.cells)

    def union(self, other):
        return CellComplex(self.n, self.cells + other.cells)

    def intersection(self, other):
        out = []
        for a in self.cells:
            for b in other.cells:
                if a.point is not None and b.contains_point(a.point):
                    if cell_contains(b, a):
                        out.append(a)
                        continue
                out.append(make_cell(self.n, a.eqs + b.eqs, a.ges + b.ges))
        return CellComplex(self.n, out)

    def covers_all(self):
        return region_covered(self.n, (), (), (), self.cells)

    def __repr__(self):
        return "CellComplex(n=%d, %s)" % (self.n, list(self.cells))


def _merge_labels(a, b):
    return {k: sorted(set(a.get(k, ())) | set(b.get(k, ()))) for k in ("H", "G")}


def _relabel(c, label):
    return Cell(c.n, c.eqs, c.ges, c.dim, label, c.point, c._hull)


def _maximal(cells):
    cells = sorted(cells, key=lambda c: -c.dim)
    kept = []
    for c in cells:
        if any(cell_contains(d, c) for d in kept):
            continue
        kept.append(c)
    return kept


def union(a, b):
    return a.union(b)


def intersection(a, b):
    return a.intersection(b)


def set_equal(a, b):
    return a.set_equal(b)


def empty(n):
    return CellComplex(n, [])


def whole(n):
    return CellComplex(n, [make_cell(n)])


def cell_dimension(n, eqs=(), ges=()):
    c = make_cell(n, eqs, ges)
    return None if c is None else c.dim


# ------------------------------------------------------- corn and skeleton

def _dominance_rows(affs, i):
    a = affs[i]
    return [sub(a, b) for j, b in enumerate(affs) if j != i]


def corn_complex(p, maximal=True):
    """Ghost locus of a polynomial: ties for the max, or a ghost monomial
    attaining it."""
    n = p.n
    affs = [m.affine() for m in p.terms]
    cells = []
    for i in range(len(affs)):
        dom = _dominance_rows(affs, i)
        if p.terms[i].coeff.ghost:
            cells.append(_labeled(n, [], dom, affs, None, i, None))
        for j in range(i + 1, len(affs)):
            eq = sub(affs[i], affs[j])
            cells.append(_labeled(n, [eq], dom, affs, None, i, None))
    return CellComplex(n, cells, maximal)


def skel_complex(f, maximal=True):
    """{x : max num = max den}, one cell per pair of dominant monomials."""
    n = f.n
    H = [m.affine() for m in f.num.terms]
    G = [m.affine() for m in f.den.terms]
    cells = []
    hdom = [_dominance_rows(H, i) for i in range(len(H))]
    gdom = [_dominance_rows(G, j) for j in range(len(G))]
    for i in range(len(H)):
        for j in range(len(G)):
            eq = sub(H[i], G[j])
            cells.append(_labeled(n, [eq], hdom[i] + gdom[j], H, G, i, j))
    return CellComplex(n, cells, maximal)


def _labeled(n, eqs, ges, H, G, i, j):
    c = make_cell(n, eqs, ges)
    if c is None:
        return None
    hs = [k for k in range(len(H)) if c.vanishes(sub(H[k], H[i]))]
    gs = []
    if G is not None:
        gs = [k for k in range(len(G)) if c.vanishes(sub(G[k], G[j]))]
    c.label = {"H": hs, "G": gs}
    return c


# ---------------------------------------------------------------- JSON

def _q(v):
    return str(Fraction(v))


def complex_to_json(cx):
    cells = []
    for c in cx.cells:
        label = c.label or {"H": [], "G": []}
        cells.append({
            "eq": [[_q(v) for v in r] for r in c.eqs],
            "ge": [[_q(v) for v in r] for r in c.ges],
            "label": {"H": list(label.get("H", [])),
                      "G": list(label.get("G", []))},
        })
    return {"n": cx.n, "cells": cells}


def complex_from_json(doc):
    n = int(doc["n"])
    cells = []
    for c in doc["cells"]:
        eqs = [tuple(Fraction(v) for v in r) for r in c.get("eq", [])]
        ges = [tuple(Fraction(v) for v in r) for r in c.get("ge", [])]
        cell = make_cell(n, eqs, ges)
        if cell is not None and "label" in c:
            cell.label = {"H": list(c["label"].get("H", [])),
                          "G": list(c["label"].get("G", []))}
        cells.append(cell)
    return CellComplex(n, cells, maximal=False)


# ------------------------------------------------------- arrangements

def arrangement(n, polys):
    """Full-dimensional cells of the common refinement of the max-dominance
    subdivisions of ``polys``.

    Yields ``(choice, ges)`` where ``choice[k]`` is the index of the monomial
    of ``polys[k]`` dominating on the cell and ``ges`` the closed cell rows.
    """
    affs = [[m.affine() for m in p.terms] for p in polys]
    out = []

    def rec(level, choice, ges, gts):
        if level == len(affs):
            out.append((tuple(choice), list(ges)))
            return
        A = affs[level]
        if len(A) == 1:
            rec(level + 1, choice + [0], ges, gts)
            return
        for i in range(len(A)):
            rows = _dominance_rows(A, i)
            rows = [r for r in rows if any(r[1:]) or r[0] != 0]
            if any(not any(r[1:]) and r[0] < 0 for r in rows):
                continue
            rows = [r for r in rows if any(r[1:])]
            if feasible_point(n, (), ges + rows, gts + rows) is None:
                continue
            rec(level + 1, choice + [i], ges + rows, gts + rows)

    rec(0, [], [], [])
    return out
