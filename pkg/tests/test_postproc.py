from hypothesis import given, settings, strategies as st

from helpers import M, P, ring
from sigreduce.counters import Counters
from sigreduce.postproc import (buchberger, gb_check, interreduce, minimal_positions, minimalize,
                                reduced_basis, same_basis, usual_reduce)
from sigreduce.systems import gen_cyclic

R = ring("x,y,z")


def test_minimalize_examples():
    out = minimalize([P(R, "x^2 + z"), P(R, "x^3"), P(R, "y")])
    assert out == [P(R, "x^2 + z"), P(R, "y")]
    coprime = [P(R, "x"), P(R, "y^2"), P(R, "z^3")]
    assert minimalize(coprime) == coprime
    assert minimalize([P(R, "x*y + 1"), P(R, "x*y")]) == [P(R, "x*y + 1")]
    assert minimal_positions([M(R, "x"), M(R, "x")], R) == [0]


def test_usual_reduce_examples():
    c = Counters()
    G = [P(R, "x^2 - y")]
    assert usual_reduce(P(R, "x^2*y"), G, c) == P(R, "y^2")
    assert c.usual_red_steps == 1 and c.usual_mults == 2
    f = P(R, "y*z + 1")
    c = Counters()
    assert usual_reduce(f, G, c) is f and c.usual_red_steps == 0


def test_usual_reduce_member_to_zero():
    Rc, F = gen_cyclic(3)
    B = buchberger(F)
    member = F[1] * F[0] + F[2] * Rc.gen(1)
    assert not usual_reduce(member, B)


def test_interreduce_examples():
    R2 = ring("x,y")
    already = [P(R2, "x^2 - y"), P(R2, "x*y - x"), P(R2, "y^2 - y")]
    assert same_basis(interreduce(already), already)
    assert same_basis(interreduce([P(R2, "x + y"), P(R2, "x")]), [P(R2, "x"), P(R2, "y")])
    assert interreduce([P(R2, "3*x + 1")]) == [P(R2, "x + 10668")]


def test_buchberger_examples():
    Rc, F = gen_cyclic(3)
    x, y, z = Rc.names
    expect = [P(Rc, "%s + %s + %s" % (x, y, z)), P(Rc, "%s^2 + %s*%s + %s^2" % (y, y, z, z)),
              P(Rc, "%s^3 - 1" % z)]
    assert same_basis(buchberger(F), expect)
    R2 = ring("x,y")
    assert same_basis(buchberger([P(R2, "x^2 - y"), P(R2, "x*y - x")]),
                      [P(R2, "x^2 - y"), P(R2, "x*y - x"), P(R2, "y^2 - y")])
    assert buchberger([P(R, "2*x*y + 2")]) == [P(R, "x*y + 1")]


def test_gb_check_examples():
    R2 = ring("x,y")
    assert gb_check(buchberger([P(R2, "x^2 - y"), P(R2, "x*y - x")]))
    assert not gb_check([P(R2, "x^2 - y"), P(R2, "x*y - x")])
    assert gb_check([P(R2, "x^3 + y")])


mono = st.tuples(*[st.integers(0, 2)] * 3)
polys = st.lists(st.lists(st.tuples(mono, st.integers(1, 100)), min_size=1, max_size=4),
                 min_size=1, max_size=3)
R101 = ring("a,b,c", 101)


@settings(max_examples=60, deadline=None)
@given(polys, st.lists(st.tuples(mono, st.integers(1, 100)), max_size=5))
def test_reduction_properties(gens, target):
    F = [f for f in (R101.poly(t) for t in gens) if f]
    if not F:
        return
    B = buchberger(F)
    assert gb_check(B)
    # reduced form: monic, no monomial divisible by another element's lead
    for i, g in enumerate(B):
        assert g.lc() == 1
        for j, h in enumerate(B):
            if i != j:
                assert not any(R101.divides(h.lm(), m) for m in g.terms)
    # uniqueness: re-reducing any GB of the ideal gives the same set
    assert same_basis(reduced_basis(B + [B[0] * R101.gen(0)] if B else B), B)
    f = R101.poly(target)
    r = usual_reduce(f, B)
    assert usual_reduce(r, B) == r
    assert not any(R101.divides(g.lm(), m) for g in B for m in r.terms)
    # minimalization keeps the lead ideal
    kept = minimalize(F)
    assert all(any(R101.divides(k.lm(), f.lm()) for k in kept) for f in F)


def _all_pairs_check(G):
    from sigreduce.postproc import _divide, _spoly
    return all(not _divide(_spoly(G[i], G[j]), G) for j in range(len(G)) for i in range(j))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.tuples(mono, st.integers(1, 100)), min_size=1, max_size=4),
                min_size=1, max_size=5))
def test_gb_check_agrees_with_literal_all_pairs(gens):
    G = [f for f in (R101.poly(t) for t in gens) if f]
    assert gb_check(G) == _all_pairs_check(G)
    B = buchberger(G) if G else []
    assert gb_check(B) and _all_pairs_check(B)
