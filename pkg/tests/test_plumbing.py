import json
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from brieskorn.arith import SeifertData, cf_expand, exact_inverse, solve_seifert_diophantine
from brieskorn.families import enumerate_triplets
from brieskorn.lattice import f_eval, lattice_points
from brieskorn.plumbing import (
    PlumbingGraph,
    asl_parameters,
    build_asl_graph,
    build_linear,
    build_simple_linear,
    build_star_graph,
    determinant,
    inverse_entry,
    is_characteristic,
    isomorphic,
    k_squared,
    make_k_am,
    validate,
)
from brieskorn.triplet import Triplet

from _helpers import leibniz_det, random_nd_trees, random_tree


def asl(*t):
    return build_asl_graph(Triplet(*t))


def test_graph_rejects_bad_shapes():
    with pytest.raises(ValueError):
        PlumbingGraph([], [])
    with pytest.raises(ValueError):
        PlumbingGraph([-2, -2, -2], [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        PlumbingGraph([-2, -2, -2, -2], [(0, 1), (2, 3), (2, 3)])
    with pytest.raises(ValueError):
        PlumbingGraph([-2, -2], [(0, 0)])


def test_asl_builder():
    g = asl(3, 5, 7)
    assert len(g) == 12
    assert sorted(g.weights) == [-3] + [-2] * 11
    assert g.valency(1) == 3 and g.weights[1] == -2
    assert g.adjacency[0] == (1,)
    assert len(asl(2, 3, 5)) == 8
    assert len(asl(11, 12, 131)) == 143
    with pytest.raises(ValueError):
        build_asl_graph((3, 5, 8))


def test_asl_e8_shape():
    # E8: arms of 1, 2 and 4 vertices off a trivalent centre.
    g = asl(2, 3, 5)
    arms = sorted(len(c) for c in g.components([1]))
    assert arms == [1, 2, 4]
    assert set(g.weights) == {-2}


def test_star_builder_examples():
    assert isomorphic(build_star_graph(3, 5, 7, SeifertData(-2, 1, 4, 6)), asl(3, 5, 7))
    g = build_star_graph(2, 3, 7, SeifertData(-1, 1, 1, 1))
    assert g.weights == (-1, -2, -3, -7)
    assert g.edges == ((0, 1), (0, 2), (0, 3))
    assert isomorphic(build_star_graph(2, 3, 5, SeifertData(-2, 1, 2, 4)), asl(2, 3, 5))


def test_star_matches_asl_for_small_p():
    for p in range(2, 31):
        for t in enumerate_triplets(p):
            star = build_star_graph(*t, solve_seifert_diophantine(*t))
            assert isomorphic(star, build_asl_graph(t)), t


def test_isomorphism_distinguishes_weights():
    a = build_linear([-2, -3, -2])
    b = build_linear([-3, -2, -2])
    assert not isomorphic(a, b)
    assert isomorphic(b, build_linear([-2, -2, -3]))


def test_simple_linear():
    assert build_simple_linear(1).weights == (-2,)
    assert build_simple_linear(2).edges == ((0, 1),)
    assert abs(determinant(build_simple_linear(8))) == 9
    with pytest.raises(ValueError):
        build_simple_linear(0)


def test_determinant_examples():
    assert determinant(build_simple_linear(4)) == 5
    assert determinant(asl(3, 5, 7)) == 1
    assert determinant(build_simple_linear(2)) == 3
    g = asl(3, 5, 7)
    assert determinant(g, range(len(g))) == 1


def test_validate_examples():
    rep = validate(asl(3, 5, 7))
    assert rep.is_negative_definite and rep.is_unimodular
    assert rep.bad_vertex_count == 1
    assert asl(3, 5, 7).valency(1) > 2
    rep = validate(build_simple_linear(2))
    assert rep.is_negative_definite and not rep.is_unimodular
    assert rep.determinant == 3 and rep.bad_vertex_count == 0
    assert not validate(PlumbingGraph([1], [])).is_negative_definite


def test_negative_definite_two_routes():
    # Leading minors (Sylvester) versus the signs of leaf-first pivots.
    rng = random.Random(5)
    for _ in range(300):
        g = random_tree(rng, rng.randint(1, 9), -4, 1)
        elim = g._elimination
        by_pivots = elim is not None and all(x < 0 for x in elim[2])
        assert validate(g).is_negative_definite == by_pivots


def test_linear_determinant_rule():
    # The chain for n/d = [t1..tk] has determinant (-1)^k n.
    for n in range(2, 51):
        for d in range(1, n):
            if gcd(n, d) == 1:
                terms = cf_expand(n, d)
                g = build_linear([-t for t in terms])
                assert determinant(g) == (-1) ** len(terms) * n


def test_determinant_multiplicative():
    rng = random.Random(11)
    for _ in range(60):
        g = random_tree(rng, rng.randint(2, 9))
        cut = rng.sample(range(len(g)), rng.randint(1, len(g) - 1))
        rest = [v for v in range(len(g)) if v not in cut]
        whole = leibniz_det(g.matrix(rest)) if len(rest) <= 7 else None
        prod = 1
        for comp in g.components(cut):
            prod *= leibniz_det(g.matrix(comp))
        assert determinant(g, cut) == prod
        if whole is not None:
            assert whole == prod


def test_star_determinant_rule():
    rng = random.Random(3)
    done = 0
    while done < 80:
        p, q, r = (rng.randint(2, 30) for _ in range(3))
        if gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            continue
        pp, qp, rp = (rng.choice([x for x in range(1, n) if gcd(x, n) == 1]) for n in (p, q, r))
        e0 = rng.randint(-6, -1)
        g = build_star_graph(p, q, r, SeifertData(e0, pp, qp, rp))
        value = e0 + Fraction(pp, p) + Fraction(qp, q) + Fraction(rp, r)
        assert abs(determinant(g)) == abs(value.numerator)
        done += 1


def test_seifert_stars_are_unimodular():
    for t in [(2, 3, 5), (2, 3, 7), (2, 5, 7), (3, 4, 5), (3, 5, 7), (2, 3, 11)]:
        g = build_star_graph(*t, solve_seifert_diophantine(*t))
        rep = validate(g)
        assert rep.is_unimodular and rep.is_negative_definite, t


@pytest.mark.parametrize("t", [(3, 5, 7), (5, 7, 17), (7, 9, 31), (11, 12, 131)])
def test_asl_inverse_entries(t):
    p, q, r = t
    g = asl(*t)
    assert inverse_entry(g, 0, 0) == -(q + r)
    for m in range(1, (p - 1) // 2 + 1):
        w = q + r - m
        assert inverse_entry(g, 0, w) == -q * m
        assert inverse_entry(g, w, w) == -(q - p) * m * m - m


def test_inverse_entry_a2():
    assert inverse_entry(build_simple_linear(2), 0, 1) == Fraction(-1, 3)
    with pytest.raises(ValueError):
        inverse_entry(PlumbingGraph([1, -2], [(0, 1)]), 0, 0)


def test_inverse_entry_matches_exact_inverse():
    for g in random_nd_trees(seed=17, count=60, max_n=12):
        inv = exact_inverse(g.matrix())
        for v in range(len(g)):
            for w in range(len(g)):
                e = inverse_entry(g, v, w)
                assert e == inv[v][w] and e < 0


def test_cached_inverse_matches_gauss_jordan():
    for g in random_nd_trees(seed=2, count=20, max_n=10):
        assert g.inverse == exact_inverse(g.matrix())


def test_k_squared_examples():
    assert k_squared(build_simple_linear(4), (0, 0, 0, 0)) == 0
    g = asl(3, 5, 7)
    assert k_squared(g, make_k_am(g, 1, 1)) == -4
    g = asl(7, 9, 31)
    assert k_squared(g, make_k_am(g, 1, 2)) == -8
    with pytest.raises(ValueError):
        k_squared(build_simple_linear(2), (1, 0))


def test_make_k_am():
    g = asl(3, 5, 7)
    assert make_k_am(g, 1, 0) == (1,) + (0,) * 11
    k = make_k_am(g, 1, 1)
    assert k[0] == 1 and k[11] == -2 and sum(map(abs, k)) == 3
    assert is_characteristic(g, make_k_am(g, 3, 1))
    with pytest.raises(ValueError):
        make_k_am(g, 2, 0)
    with pytest.raises(ValueError):
        make_k_am(g, 1, 2)
    with pytest.raises(ValueError):
        make_k_am(g, 5, 0)
    with pytest.raises(ValueError):
        make_k_am(build_simple_linear(5), 1, 0)


def test_asl_parameters():
    assert asl_parameters(asl(11, 14, 51)) == Triplet(11, 14, 51)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_k_squared_quadratic_form(p):
    for t in enumerate_triplets(p):
        g = build_asl_graph(t)
        for a, m in lattice_points(t):
            assert k_squared(g, make_k_am(g, a, m)) == f_eval(t, a, m)


unimodular_graphs = st.sampled_from(
    [build_asl_graph(t) for p in (2, 3, 4, 5) for t in enumerate_triplets(p)])


@settings(max_examples=60, deadline=None)
@given(unimodular_graphs, st.data())
def test_unimodular_degree_integral_and_even(g, data):
    k = tuple(data.draw(st.integers(-4, 4)) * 2 + (e % 2) for e in g.weights)
    ks = k_squared(g, k)
    assert ks.denominator == 1
    assert ks == k_squared(g, tuple(-x for x in k))
    assert (ks + len(g)) % 8 == 0


def test_json_and_dot_round_trip():
    g = asl(3, 5, 7)
    doc = json.loads(json.dumps(g.to_json()))
    assert set(doc) == {"vertices", "edges"}
    assert PlumbingGraph.from_json(doc) == g
    dot = g.to_dot()
    assert dot.count("label=") == 12 and dot.count("--") == 11
    with pytest.raises(ValueError):
        PlumbingGraph.from_json({"vertices": [{"id": 1, "weight": -2}], "edges": []})
