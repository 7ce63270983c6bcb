"""Fourier-Motzkin feasibility for small systems.

Used as an independent check on the simplex route and for tiny systems.
Strictness is tracked per row; equalities are eliminated by substitution
first.
"""

from fractions import Fraction


def _substitute(rows, piv_row, var):
    """Eliminate ``var`` from rows using the equality ``piv_row == 0``."""
    a = piv_row[var]
    out = []
    for r, strict in rows:
        c = r[var]
        if c == 0:
            out.append((r, strict))
            continue
        f = c / a
        out.append((tuple(x - f * y for x, y in zip(r, piv_row)), strict))
    return out


def fm_feasible(n, eqs=(), ges=(), gts=(), limit=4000):
    """Decide {eqs == 0, ges >= 0, gts > 0} over Q^n.

    Raises OverflowError if the number of rows exceeds ``limit`` during
    elimination.
    """
    eqs = [tuple(Fraction(v) for v in r) for r in eqs]
    rows = [(tuple(Fraction(v) for v in r), False) for r in ges]
    rows += [(tuple(Fraction(v) for v in r), True) for r in gts]
    while eqs:
        e = eqs.pop()
        var = next((i for i in range(1, n + 1) if e[i] != 0), None)
        if var is None:
            if e[0] != 0:
                return False
            continue
        eqs = [r for r, _ in _substitute([(q, False) for q in eqs], e, var)]
        rows = _substitute(rows, e, var)
    for var in range(1, n + 1):
        pos, neg, rest = [], [], []
        for r, s in rows:
            if r[var] > 0:
                pos.append((r, s))
            elif r[var] < 0:
                neg.append((r, s))
            else:
                rest.append((r, s))
        if len(pos) * len(neg) + len(rest) > limit:
            raise OverflowError("Fourier-Motzkin row limit exceeded")
        for p, ps in pos:
            for q, qs in neg:
                a, b = p[var], -q[var]
                rest.append((tuple(b * x + a * y for x, y in zip(p, q)),
                             ps or qs))
        rows = _dedupe(rest)
        if rows is None:
            return False
    for r, s in rows:
        if r[0] < 0 or (s and r[0] == 0):
            return False
    return True


def _dedupe(rows):
    """Keep the tightest row per direction; settle constant rows.

    Returns None when a constant row is violated.
    """
    best = {}
    for r, s in rows:
        lead = next((abs(v) for v in r[1:] if v != 0), None)
        if lead is None:
            if r[0] < 0 or (s and r[0] == 0):
                return None
            continue
        key = tuple(v / lead for v in r[1:])
        c = r[0] / lead
        prev = best.get(key)
        if prev is None or c < prev[0] or (c == prev[0] and s):
            best[key] = (c, s)
    return [((c,) + key, s) for key, (c, s) in best.items()]
