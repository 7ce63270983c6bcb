"""LP front end over exact rationals.

Constraints are affine rows ``(c0, c1, ..., cn)`` read as
``c0 + c1*x1 + ... + cn*xn``.  Rows in ``ges`` must be >= 0, rows in ``eqs``
== 0 and rows in ``gts`` > 0.  Variables are free.

Problems are solved through their dual, which has only ``n`` equality rows:
for  max w.x  s.t.  a_i.x + b_i >= 0  the dual is
min b.y  s.t.  -A^T y = w,  y >= 0, and its simplex multipliers are an
optimal primal point.
"""

from fractions import Fraction
from math import lcm

from . import solve_std

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class LPResult:
    __slots__ = ("status", "value", "point")

    def __init__(self, status, value=None, point=None):
        self.status = status
        self.value = value
        self.point = point

    def __repr__(self):
        return "LPResult(%s, %s, %s)" % (self.status, self.value, self.point)


def _int_row(row):
    m = 1
    for v in row:
        d = v.denominator if isinstance(v, Fraction) else 1
        if d != 1:
            m = lcm(m, d)
    return [int(v * m) for v in row]


def _dual_solve(n, w, eqs, ges):
    """Solve the dual of max w.x; returns (status, pi) of the dual."""
    cols = []
    costs = []
    for row in ges:
        r = _int_row(row)
        costs.append(r[0])
        cols.append([-v for v in r[1:]])
    for row in eqs:
        r = _int_row(row)
        costs.append(r[0])
        cols.append([-v for v in r[1:]])
        costs.append(-r[0])
        cols.append(list(r[1:]))
    rhs = _int_row(w)
    rows = [[c[i] for c in cols] for i in range(n)]
    status, _, pi, D = solve_std(rows, rhs, costs)
    if status != 0:
        return status, None
    return status, tuple(Fraction(p, D) for p in pi)


def _split_const(n, eqs, ges, gts):
    """Drop constant rows; return None when a constant row is violated."""
    out = ([], [], [])
    for src, dst, ok in ((eqs, out[0], lambda c: c == 0),
                         (ges, out[1], lambda c: c >= 0),
                         (gts, out[2], lambda c: c > 0)):
        for r in src:
            if any(r[1:]):
                dst.append(r)
            elif not ok(r[0]):
                return None
    return out


def feasible_point(n, eqs=(), ges=(), gts=()):
    """A rational point satisfying all rows, or None."""
    split = _split_const(n, eqs, ges, gts)
    if split is None:
        return None
    eqs, ges, gts = split
    if n == 0:
        return ()
    if gts:
        # maximize s subject to every strict row >= s, s <= 1
        ext = lambda r: tuple(r) + (Fraction(0),)
        ges2 = [ext(r) for r in ges]
        ges2 += [tuple(r) + (Fraction(-1),) for r in gts]
        ges2.append((Fraction(1),) + (Fraction(0),) * n + (Fraction(-1),))
        res = maximize(n + 1, (0,) * (n + 1) + (1,), [ext(r) for r in eqs],
                       ges2)
        if res.status != OPTIMAL or res.value <= 0:
            return None
        return res.point[:n]
    status, pi = _dual_solve(n, (0,) * n, eqs, ges)
    if status != 0:
        return None
    return pi


def is_feasible(n, eqs=(), ges=(), gts=()):
    return feasible_point(n, eqs, ges, gts) is not None


def maximize(n, objective, eqs=(), ges=()):
    """Maximize the affine ``objective`` over {eqs == 0, ges >= 0}."""
    objective = tuple(Fraction(v) for v in objective)
    split = _split_const(n, eqs, ges, ())
    if split is None:
        return LPResult(INFEASIBLE)
    eqs, ges, _ = split
    if n == 0 or not any(objective[1:]):
        pt = feasible_point(n, eqs, ges)
        if pt is None:
            return LPResult(INFEASIBLE)
        return LPResult(OPTIMAL, objective[0], pt)
    status, pi = _dual_solve(n, objective[1:], eqs, ges)
    if status == 0:
        val = objective[0] + sum(a * b for a, b in zip(objective[1:], pi))
        return LPResult(OPTIMAL, val, pi)
    if status == 2:
        return LPResult(INFEASIBLE)
    # dual infeasible: primal is unbounded or infeasible
    pt = feasible_point(n, eqs, ges)
    if pt is None:
        return LPResult(INFEASIBLE)
    return LPResult(UNBOUNDED, None, pt)


def minimize(n, objective, eqs=(), ges=()):
    res = maximize(n, tuple(-Fraction(v) for v in objective), eqs, ges)
    if res.status == OPTIMAL:
        res.value = -res.value
    return res
