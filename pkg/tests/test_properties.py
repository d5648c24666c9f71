"""Randomized properties via hypothesis."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dlambda2.chordal import (
    build_clique_tree,
    clique_tree_is_valid,
    is_chordal,
    minimal_vertex_separators,
)
from dlambda2.classifier import classify_structural, validate_certificate
from dlambda2.graph import (
    Graph,
    are_isomorphic,
    canonical_form,
    is_connected,
    parse_graph6,
    relabel,
    to_graph6,
)
from dlambda2.polynomial import Polynomial, count_distinct_roots_in, div_exact, squarefree_part
from dlambda2.spectral import decide_lambda2_lt_neg_half_exact, lambda2


@st.composite
def graphs(draw, lo=1, hi=9):
    n = draw(st.integers(lo, hi))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, mask) if b])


@st.composite
def connected_graphs(draw, lo=2, hi=9):
    g = draw(graphs(lo, hi))
    # add a spanning path over a random order to force connectivity
    order = draw(st.permutations(range(g.n)))
    extra = [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    return Graph.from_edges(g.n, sorted(set(g.edges()) | set(extra)))


polys = st.lists(st.integers(-20, 20), min_size=1, max_size=7).map(Polynomial).filter(lambda p: not p.is_zero())


@settings(max_examples=200, deadline=None)
@given(graphs(1, 30))
def test_graph6_roundtrip(g):
    assert parse_graph6(to_graph6(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(1, 8), st.randoms(use_true_random=False))
def test_canonical_form_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h)[0] == canonical_form(g)[0]
    assert are_isomorphic(g, h)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(2, 9), st.integers(0, 2 ** 32))
def test_clique_tree_tie_breaks(g, seed):
    if not is_chordal(g):
        return
    rng = random.Random(seed)
    tree = build_clique_tree(g, rng)
    assert clique_tree_is_valid(g, tree)
    assert minimal_vertex_separators(g, rng) == minimal_vertex_separators(g)


@settings(max_examples=150, deadline=None)
@given(connected_graphs(2, 9))
def test_classifier_agrees_and_certifies(g):
    assert is_connected(g)
    c = classify_structural(g)
    assert validate_certificate(g, c)
    assert c.satisfies == decide_lambda2_lt_neg_half_exact(g)
    lam = lambda2(g)
    if abs(lam + 0.5) > 1e-6:
        assert c.satisfies == (lam < -0.5)


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_exact_division_inverts_multiplication(a, b):
    assert div_exact(a * b, b) == a


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=6), min_size=1, max_size=6),
       st.fractions(min_value=-12, max_value=12, max_denominator=7))
def test_root_count_against_roots(roots, a):
    p = Polynomial.const(1)
    for r in roots:
        p = p * Polynomial.linear(r)
    b = a + Fraction(5, 3)
    if p(a) == 0 or p(b) == 0:
        return
    assert count_distinct_roots_in(p, a, b) == len({r for r in roots if a < r <= b})
    assert squarefree_part(p).degree == len(set(roots))
