from fractions import Fraction

import pytest

from supertrop.cli import read_expr
from supertrop.complex import CellComplex, make_cell, skel_complex
from supertrop.decompose import ho_decompose
from supertrop.render import _dec, clip_vertices, render_svg


def test_three_rays():
    svg = render_svg(skel_complex(read_expr("hat: x1+x2+t(0)", 2)))
    assert svg.count("<line") == 2 + 3
    assert svg == render_svg(skel_complex(read_expr("hat: x1+x2+t(0)", 2)))


def test_empty_complex_axes_only():
    svg = render_svg(CellComplex(2, []))
    assert svg.count("<line") == 2
    assert "<polygon" not in svg and "<circle" not in svg


def test_region_and_point():
    cx = CellComplex(2, [make_cell(2, [], [(0, 1, 0), (0, 0, 1)]),
                         make_cell(2, [(3, 1, 0), (3, 0, 1)], [])])
    svg = render_svg(cx)
    assert svg.count("<polygon") == 1 and svg.count("<circle") == 1


def test_decomposition_figure():
    dec = ho_decompose(read_expr("x1/(x2+t(0))", 2))
    svg = render_svg(dec.skeleton())
    assert svg.count("<line") == 2 + 2


def test_clip_is_exact():
    cell = make_cell(2, [], [(0, 1, 0), (0, 0, 1)])
    box = (Fraction(-1), Fraction(2), Fraction(-1), Fraction(2))
    vs = clip_vertices(cell, box)
    assert sorted(vs) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    # consecutive vertices share an edge of the square
    for a, b in zip(vs, vs[1:] + vs[:1]):
        assert a[0] == b[0] or a[1] == b[1]


def test_decimal_formatting():
    assert _dec(Fraction(1, 3)) == "0.333"
    assert _dec(Fraction(-1, 2)) == "-0.5"
    assert _dec(Fraction(200)) == "200"


def test_wrong_dimension():
    with pytest.raises(ValueError):
        render_svg(CellComplex(1, []))
