"""Regenerate tests/data/frozen.json from the brute-force oracles.

    python3 tests/freeze_oracles.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from supertrop.parser import parse  # noqa: E402

SKEL = {
    "hat_line": ("hat: x1+x2+t(0)", 2),
    "frac_line": ("x1/(x2+t(0))", 2),
    "abs_wedge": ("abs(x1)&t(2)", 1),
    "abs_shift_wedge": ("abs(x1+t(0))&t(2)", 1),
    "order": ("t(0)+x1", 1),
    "standline2": ("x1/(x2+t(0)) + x2/(x1+t(0))", 2),
    "hs_point": ("abs(x1/t(1))+abs(x2/t(2))", 2),
}
CORN = {
    "line": ("x1+x2+t(0)", 2),
    "quadratic": ("t(5)*x1^2+x1+t(7)", 1),
    "conic": ("x1^2+x1*x2+t(1)*x2+t(-1)", 2),
}


def _read(text, n):
    from supertrop.cli import read_expr
    return read_expr(text, n)


def _fmt(pts):
    return [[str(v) for v in p] for p in pts]


def build():
    out = {"grid": {"lo": -3, "hi": 3, "den": 2}, "skel": {}, "corn": {}}
    for name, (text, n) in sorted(SKEL.items()):
        pts = oracles.grid(n)
        out["skel"][name] = {"expr": text, "n": n,
                             "points": _fmt(oracles.skel_points(_read(text, n), pts))}
    for name, (text, n) in sorted(CORN.items()):
        pts = oracles.grid(n)
        out["corn"][name] = {"expr": text, "n": n,
                             "points": _fmt(oracles.corn_points(parse(text, n).num, pts))}
    return out


if __name__ == "__main__":
    path = os.path.join(os.path.dirname(__file__), "data", "frozen.json")
    with open(path, "w") as fh:
        json.dump(build(), fh, indent=1, sort_keys=True)
        fh.write("\n")
