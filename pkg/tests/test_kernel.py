from supertrop import expr as E
from supertrop import kernel as K
from supertrop.cli import read_expr
from supertrop.complex import skel_complex

import gen
import oracles


def P(text, n=2):
    return read_expr(text, n)


SL1 = "x1/(x2+t(0)) + x2/(x1+t(0)) + t(0)/(x1+x2)"
SL2 = "x1/(x2+t(0)) + x2/(x1+t(0))"


def test_membership_examples():
    m = K.member(P("x1", 1), P("x1^2", 1))
    assert m.result and m.witness_k == 1
    assert not K.member(P("t(2)", 1), P("x1", 1))
    assert not K.member(P("x1+x2"), P(SL2))


def test_membership_witness_is_a_certificate():
    r = gen.rng(2)
    for _ in range(30):
        f = gen.rand_frac(r, 1, emin=-1)
        h = gen.rand_frac(r, 1, emin=-1)
        m = K.member(h, f)
        if not m.result:
            continue
        pts = oracles.grid(1, -6, 6, 4)
        for x in pts:
            assert abs(h.magnitude_at(x)) <= m.witness_k * abs(f.magnitude_at(x))


def test_power_generates_same_kernel():
    f = P("x1/(x2+t(1))")
    assert K.kernel_equal(f, E.power(f, 3))
    assert K.kernel_equal(f, E.star(f))


def test_mutual_membership_is_kernel_equality():
    r = gen.rng(9)
    for _ in range(15):
        f = gen.rand_frac(r, 1, emin=-1)
        h = gen.rand_frac(r, 1, emin=-1)
        both = K.member(h, f).result and K.member(f, h).result
        assert both == K.kernel_equal(f, h)


def test_standline_generators_share_skeleton():
    a, b = P(SL1), P(SL2)
    assert skel_complex(a).set_equal(skel_complex(b))
    assert K.equiv_mod_F(a, b)


def test_standline_norms_agree_pointwise():
    # |sl1| and |sl2| coincide on Q^2, so the two kernels are equal
    a, b = P(SL1), P(SL2)
    for x in oracles.grid(2, -4, 4, 3):
        assert abs(a.magnitude_at(x)) == abs(b.magnitude_at(x))
    assert K.kernel_equal(a, b)


def test_boundedness():
    b = K.bounded_below(P("abs(x1)+t(2)", 1))
    assert b.result and b.value == 2
    assert not K.bounded_below(P("x1", 1))
    assert K.bounded_above(P("abs(x1)&t(2)", 1)).value == 2
    assert not K.bounded_above(P("x1", 1))


def test_omega():
    assert str(K.omega(P("t(3)", 1))) == "t(1)"


def test_corner_internal_examples():
    assert K.corner_internal(P("x1+t(0)", 1))
    assert not K.corner_internal(P("(x1+t(1))*(x1+t(0))/(x1+t(1))", 1))
    assert K.corner_internal(P("hat: x1+x2+t(0)"))


def test_corner_internal_of_wedge_of_norms():
    f = P("hat: x1+t(0)", 1)
    g = P("hat: x1+t(3)", 1)
    assert K.corner_internal(E.wedge(E.norm(f), E.norm(g)))


def test_regular():
    assert not K.regular(P("t(0)+x1", 1))
    assert K.regular(P("x1", 1))
    assert K.regular_at(P("x1/x2"), (0, 0))
    assert not K.regular_at(P("t(0)+x1", 1), (-1,))
    assert K.regular_at(P("t(0)+x1", 1), (0,))


def test_polars():
    assert K.orthogonal(P("t(0)+x1", 1), P("t(0)+x1^-1", 1))
    assert not K.orthogonal(P("x1"), P("x2"))
    assert K.in_double_polar(P(SL2), P(SL1))


def test_lattice_operations_on_skeletons():
    f, g = P("x1"), P("x2/t(1)")
    prod = K.kernel_product(f, g)
    inter = K.kernel_intersection(f, g)
    assert skel_complex(prod.generator).set_equal(prod.skeleton)
    assert skel_complex(inter.generator).set_equal(inter.skeleton)
    assert prod.skeleton.dimension() == 0
    assert inter.skeleton.dimension() == 1


def test_lattice_laws_up_to_kernel_equality():
    f, g, h = P("x1", 1), P("x1/t(1)", 1), P("t(0)+x1", 1)
    pf = K.kernel_product(f, g).generator
    assert K.kernel_equal(pf, K.kernel_product(g, f).generator)
    assert K.kernel_equal(K.kernel_intersection(f, f).generator, f)
    # product distributes over intersection on skeletons
    lhs = K.kernel_product(f, K.kernel_intersection(g, h)).skeleton
    rhs = K.kernel_intersection(K.kernel_product(f, g),
                                K.kernel_product(f, h)).skeleton
    assert lhs.set_equal(rhs)
