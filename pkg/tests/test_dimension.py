import itertools

import pytest

from supertrop.cli import read_expr
from supertrop.decompose import classify
from supertrop.dimension import (EmptySkeletonError, NotHSError, condeg,
                                 convex_basis, convex_dependent, hdim,
                                 hdim_witness, hs_generator, jh_chain,
                                 quotient_condeg)
from supertrop.expr import Monomial
from supertrop import kernel as K
from supertrop.scalar import t

import gen
import oracles


def M(*e, c=0):
    return Monomial(t(c), e)


def test_convex_dependence():
    assert convex_dependent(M(1, 1), [M(1, 0), M(0, 1)])
    assert not convex_dependent(M(0, 0, 1), [M(1, 0, 0), M(0, 1, 0)])
    with pytest.raises(ValueError):
        convex_dependent(M(0, 0, c=2), [M(1, 0)])


def test_convex_dependence_agrees_with_membership():
    # |f| in <sum |s_i| + |alpha|> exactly when the gradient is in the span
    r = gen.rng(31)
    for _ in range(25):
        f = gen.rand_laurent(r, 2, 1)
        S = [gen.rand_laurent(r, 2, 1) for _ in range(r.randint(1, 2))]
        gen_expr = hs_generator(S + [Monomial(t(1), (0, 0))])
        m = K.member(hs_generator([f]), gen_expr).result
        assert m == convex_dependent(f, S)


def test_basis_and_rank_oracle():
    assert convex_basis([M(1, 0), M(0, 1), M(1, 1)]).rank == 2
    assert convex_basis([M(*[1 if i == k else 0 for i in range(4)], c=k)
                         for k in range(4)]).rank == 4
    r = gen.rng(4)
    for _ in range(100):
        n = r.randint(1, 4)
        S = [gen.rand_laurent(r, n) for _ in range(r.randint(1, 5))]
        b = convex_basis(S)
        assert b.rank == oracles.rank([m.exps for m in S])
        shuffled = S[:]
        r.shuffle(shuffled)
        assert convex_basis(shuffled).rank == b.rank


def test_exchange_property():
    r = gen.rng(6)
    checked = 0
    for _ in range(300):
        n = 3
        S = [gen.rand_laurent(r, n, 1) for _ in range(2)]
        b, f = gen.rand_laurent(r, n, 1), gen.rand_laurent(r, n, 1)
        if convex_dependent(f, S + [b]) and not convex_dependent(f, S):
            assert convex_dependent(b, S + [f])
            checked += 1
    assert checked > 10


def test_condeg():
    assert condeg(3) == 3
    assert condeg(read_expr("abs(x1)+abs(x1*x2)", 2)) == 2
    assert condeg(read_expr("abs(x1)+abs(x1^2)", 2)) == 1
    with pytest.raises(NotHSError):
        condeg(read_expr("t(0)+x1", 2))


def test_condeg_subadditive_on_products():
    r = gen.rng(10)
    for _ in range(50):
        n = 3
        A = [gen.rand_laurent(r, n, 1) for _ in range(r.randint(1, 2))]
        B = [gen.rand_laurent(r, n, 1) for _ in range(r.randint(1, 2))]
        a, b, ab = condeg(A), condeg(B), condeg(A + B)
        assert max(a, b) <= ab <= a + b
        inter = a + b - ab
        assert (ab == a + b) == (inter == 0)


def test_quotient_condeg():
    assert quotient_condeg(read_expr("x1", 2)) == 1
    L = read_expr("abs(x1)+abs(x2)", 3)
    assert quotient_condeg(L, read_expr("t(0)+x3", 3)) == 1
    assert quotient_condeg([M(1, 0), M(0, 1)]) == 0
    with pytest.raises(EmptySkeletonError):
        quotient_condeg([M(1, 0)], [M(-1, 0, c=1)])


def test_quotient_condeg_region_invariance():
    L = [M(1, 1, 0)]
    for R in ([M(0, 0, 1)], [M(0, 0, 1), M(1, 0, 0, c=-3)], None):
        assert quotient_condeg(L, R) == 2


def test_jh_chain():
    c = jh_chain(read_expr("abs(x1/t(1))+abs(x2/t(2))", 2))
    assert c.length == 2 and c.strictly_descending()
    assert all(classify(f) == "HP" for f in c.factors())
    assert jh_chain(read_expr("x1", 2)).length == 1
    S = [M(1, 0, 0), M(0, 1, 0), M(1, 1, 0), M(0, 0, 1)]
    lengths = {jh_chain(S, order).length
               for order in itertools.permutations(range(4))}
    assert lengths == {3}


def test_chain_json_shape():
    doc = jh_chain([M(1, 0), M(0, 1)]).to_json()
    assert doc["length"] == 2
    assert [rec["height"] for rec in doc["chain"]] == [2, 1, 0]
    assert doc["chain"][-1]["generator"] == "t(0)"


def test_hdim():
    assert hdim(1) == 1 and hdim(2) == 2
    w = hdim_witness(2)
    assert w.length == 2 and w.strictly_descending()


def test_no_chain_beyond_rank():
    r = gen.rng(13)
    for _ in range(50):
        n = r.randint(1, 3)
        S = [gen.rand_laurent(r, n) for _ in range(n + 2)]
        assert jh_chain(S).length <= n
