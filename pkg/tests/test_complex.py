import json
import os
from fractions import Fraction

import pytest

from supertrop.cli import read_expr
from supertrop.complex import (CellComplex, arrangement, cell_dimension,
                               complex_from_json, complex_to_json,
                               corn_complex, empty, make_cell, skel_complex,
                               whole)
from supertrop.parser import parse

import gen
import oracles

F = Fraction
HERE = os.path.dirname(__file__)

with open(os.path.join(HERE, "data", "frozen.json")) as fh:
    FROZEN = json.load(fh)


def _pts(rec):
    return sorted(tuple(F(v) for v in p) for p in rec["points"])


def _members(cx, n):
    return sorted(x for x in oracles.grid(n) if cx.contains_point(x))


@pytest.mark.parametrize("name", sorted(FROZEN["skel"]))
def test_skeleton_matches_frozen_grid(name):
    rec = FROZEN["skel"][name]
    f = read_expr(rec["expr"], rec["n"])
    want = _pts(rec)
    # the oracle itself has not drifted
    assert oracles.skel_points(f, oracles.grid(rec["n"])) == want
    assert _members(skel_complex(f), rec["n"]) == want


@pytest.mark.parametrize("name", sorted(FROZEN["corn"]))
def test_corner_locus_matches_frozen_grid(name):
    rec = FROZEN["corn"][name]
    p = parse(rec["expr"], rec["n"]).num
    want = _pts(rec)
    assert oracles.corn_points(p, oracles.grid(rec["n"])) == want
    assert _members(corn_complex(p), rec["n"]) == want


def test_skeleton_grid_oracle_random():
    r = gen.rng(41)
    for _ in range(40):
        n = r.randint(1, 2)
        f = gen.rand_frac(r, n, emin=-1)
        pts = oracles.grid(n, -3, 3, 2)
        assert _members(skel_complex(f), n) == oracles.skel_points(f, pts)


def test_corn_grid_oracle_random():
    r = gen.rng(43)
    for _ in range(40):
        n = r.randint(1, 2)
        p = gen.rand_poly(r, n, 4, bound=3)
        pts = oracles.grid(n, -3, 3, 2)
        assert _members(corn_complex(p), n) == oracles.corn_points(p, pts)


def test_three_ray_skeleton():
    sk = skel_complex(read_expr("hat: x1+x2+t(0)", 2))
    rays = CellComplex(2, [
        make_cell(2, [(0, 1, -1)], [(0, 0, 1)]),
        make_cell(2, [(0, 1, 0)], [(0, 0, -1)]),
        make_cell(2, [(0, 0, 1)], [(0, -1, 0)]),
    ])
    assert sk.keys() == rays.keys()
    assert sk.set_equal(rays)
    assert sk.set_equal(corn_complex(parse("x1+x2+t(0)", 2).num))


def test_cell_dimension():
    assert cell_dimension(2, [], [(0, 1, 0)]) == 2
    assert cell_dimension(2, [(0, 1, -1)], []) == 1
    # x >= 1 and x <= 1 is a line, x >= 1 and x <= 0 is empty
    assert cell_dimension(2, [], [(-1, 1, 0), (1, -1, 0)]) == 1
    assert cell_dimension(2, [], [(-1, 1, 0), (0, -1, 0)]) is None
    assert cell_dimension(2, [(0, 1, 0), (0, 0, 1)], []) == 0


def test_canonical_form_ignores_redundancy_and_scaling():
    a = make_cell(2, [], [(0, 1, 0), (0, 0, 1)])
    b = make_cell(2, [], [(0, 2, 0), (0, 0, 3), (1, 1, 1), (5, 1, 0)])
    assert a.key == b.key
    c = make_cell(2, [], [(0, 1, -1), (0, -1, 1)])
    d = make_cell(2, [(0, 2, -2)], [])
    assert c.key == d.key


def test_set_operations():
    half = CellComplex(2, [make_cell(2, [], [(0, 1, 0)])])
    other = CellComplex(2, [make_cell(2, [], [(0, -1, 0)])])
    assert half.union(other).covers_all()
    assert half.intersection(other).set_equal(
        CellComplex(2, [make_cell(2, [(0, 1, 0)], [])]))
    assert not half.covers_all()
    assert empty(2).is_empty() and whole(2).covers_all()
    assert empty(2).subset_of(half) and half.subset_of(whole(2))


def test_union_of_pieces_equals_whole():
    quads = [make_cell(2, [], [(0, s, 0), (0, 0, u)])
             for s in (1, -1) for u in (1, -1)]
    assert CellComplex(2, quads).set_equal(whole(2))


def test_json_roundtrip():
    for text in ("hat: x1+x2+t(0)", "x1/(x2+t(0))", "abs(x1)&t(2)"):
        n = 1 if "x2" not in text else 2
        cx = skel_complex(read_expr(text, n))
        doc = json.loads(json.dumps(complex_to_json(cx)))
        back = complex_from_json(doc)
        assert back.keys() == cx.keys()
        assert complex_to_json(back) == complex_to_json(cx)


def test_rationals_serialized_as_strings():
    cx = skel_complex(parse("abs(x1/t(1/2))", 1))
    doc = complex_to_json(cx)
    assert doc["cells"][0]["eq"] == [["-1/2", "1"]]


def test_arrangement_covers_space():
    p = parse("x1+x2+t(0)", 2).num
    q = parse("x1^2+t(1)", 2).num
    cells = arrangement(2, [p, q])
    cx = CellComplex(2, [make_cell(2, [], ges) for _, ges in cells])
    assert cx.covers_all()
    assert all(make_cell(2, [], ges).dim == 2 for _, ges in cells)
