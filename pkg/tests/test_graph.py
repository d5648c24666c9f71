import itertools
import random

import pytest

from dlambda2 import families as fam
from dlambda2.graph import (
    DisconnectedGraph,
    Graph,
    GraphError,
    are_isomorphic,
    bfs_distances,
    brute_force_contains,
    canonical_form,
    complete,
    cycle,
    diameter,
    disjoint_union,
    empty,
    enumerate_connected,
    find_induced_embedding,
    graph_from_mask,
    induced_subgraph,
    is_connected,
    is_induced_embedding,
    join,
    parse_edge_list,
    parse_edge_lists,
    parse_graph6,
    path,
    relabel,
    to_edge_list,
    to_graph6,
    universal_vertices,
)
from dlambda2.chordal import GEM, P4


def test_graph6_small_cases():
    assert parse_graph6("A_").edges() == [(0, 1)]
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(empty(2)) == "A?"
    assert parse_graph6("@").n == 1
    assert parse_graph6("C~") == complete(4)


def test_graph6_hand_decoded_path():
    # "BW": 'W' - 63 = 24 = 011000; pairs (0,1), (0,2), (1,2) -> bits 0, 1, 1
    g = parse_graph6("BW")
    assert g.edges() == [(0, 2), (1, 2)]
    assert are_isomorphic(g, path(3))


def test_graph6_roundtrip_random():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 40)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3]
        g = Graph.from_edges(n, edges)
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_long_form_and_errors():
    g = path(63)
    text = to_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    for bad in ["", "A", "A~", "Bxyz", "A_x", "\x01"]:
        with pytest.raises(GraphError):
            parse_graph6(bad)


def test_edge_lists():
    text = "# two graphs\n3 2\n0 1\n1 2\n2 1\n0 1\n"
    gs = parse_edge_lists(text)
    assert [g.n for g in gs] == [3, 2]
    assert parse_edge_list(to_edge_list(GEM)) == GEM
    for bad in ["3 1\n0 3\n", "3 2\n0 1\n0 1\n", "2 1\n0 0\n", "3 2\n0 1\n"]:
        with pytest.raises(GraphError):
            parse_edge_lists(bad)


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (2, 0))
    with pytest.raises(GraphError):
        Graph(2, (1, 1))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])


def test_distances():
    rows = [list(r) for r in bfs_distances(P4)]
    assert rows == [[0, 1, 2, 3], [1, 0, 1, 2], [2, 1, 0, 1], [3, 2, 1, 0]]
    d = bfs_distances(complete(4))
    assert all(d[i][j] == (i != j) for i in range(4) for j in range(4))
    with pytest.raises(DisconnectedGraph):
        bfs_distances(empty(2))


def test_diameter():
    assert diameter(complete(5)) == 1
    assert diameter(fam.g_rpq(2, 2, 2)) == 2
    assert diameter(fam.relaxed_block_star(fam.RelaxedBlockStarSpec(((1, 3),), 1, 2))) == 2
    assert diameter(fam.pt2(2, 3)) == 3
    assert diameter(cycle(7)) == 3


def test_joins_and_unions():
    paw = join(complete(1), disjoint_union(complete(1), complete(2)))
    assert (paw.n, paw.m) == (4, 4)
    assert are_isomorphic(paw, fam.paw())
    assert are_isomorphic(join(complete(1), path(3)), fam.diamond())
    fh = join(complete(2), disjoint_union(complete(2), complete(1)))
    assert sorted(fh.degrees(), reverse=True) == [4, 4, 3, 3, 2]
    assert are_isomorphic(fh, fam.full_house())


def test_induced_subgraph():
    fh = fam.full_house()
    for v in (u for u in range(fh.n) if fh.degree(u) == 3):
        rest = [u for u in range(fh.n) if u != v]
        assert are_isomorphic(induced_subgraph(fh, rest), fam.diamond())
    low = next(v for v in range(fh.n) if fh.degree(v) == 2)
    assert induced_subgraph(fh, [u for u in range(fh.n) if u != low]) == complete(4)
    assert induced_subgraph(GEM, [3]).n == 1
    centre = universal_vertices(GEM)[0]
    assert are_isomorphic(induced_subgraph(GEM, [v for v in range(5) if v != centre]), P4)


def test_find_induced_embedding():
    image = find_induced_embedding(GEM, fam.forbidden(11))
    assert image is not None and is_induced_embedding(GEM, fam.forbidden(11), image)
    assert find_induced_embedding(complete(3), cycle(4)) is None
    assert find_induced_embedding(fam.diamond(), fam.full_house()) is not None
    assert find_induced_embedding(complete(3), complete(2)) is None


def test_embedding_matches_brute_force():
    rng = random.Random(7)
    patterns = [P4, cycle(4), fam.paw(), fam.diamond(), complete(3), path(3)]
    for _ in range(150):
        n = rng.randint(4, 8)
        host = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])
        for p in patterns:
            found = find_induced_embedding(p, host)
            assert (found is not None) == brute_force_contains(host, p)
            if found is not None:
                assert is_induced_embedding(p, host, found)


def test_universal_vertices():
    assert universal_vertices(complete(4)) == [0, 1, 2, 3]
    assert universal_vertices(P4) == []
    g = fam.relaxed_block_star(fam.RelaxedBlockStarSpec(((2, 3),), 1, 1))
    assert universal_vertices(g) == [0]


def test_enumeration_counts():
    assert [sum(1 for _ in enumerate_connected(n)) for n in range(2, 6)] == [1, 4, 38, 728]
    assert [sum(1 for _ in enumerate_connected(n, canonical=True)) for n in range(2, 7)] == [1, 2, 6, 21, 112]
    with pytest.raises(GraphError):
        list(enumerate_connected(8))
    assert list(enumerate_connected(2)) == [complete(2)]


def test_canonical_enumeration_is_distinct_and_complete():
    reps = list(enumerate_connected(5, canonical=True))
    codes = {canonical_form(g)[0] for g in reps}
    assert len(codes) == len(reps)
    assert codes == {canonical_form(g)[0] for g in enumerate_connected(5)}


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(3)
    for g in enumerate_connected(6, canonical=True):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_form(h) == canonical_form(g)


def test_enumeration_chunks_cover_the_space():
    whole = list(enumerate_connected(5))
    parts = []
    for lo in range(0, 1 << 10, 100):
        parts += enumerate_connected(5, lo=lo, hi=min(lo + 100, 1 << 10))
    assert parts == whole


def test_graph_from_mask_matches_pair_order():
    # bit k = j(j-1)/2 + i for the pair i < j
    for i, j in itertools.combinations(range(5), 2):
        g = graph_from_mask(5, 1 << (j * (j - 1) // 2 + i))
        assert g.edges() == [(i, j)]
    assert is_connected(graph_from_mask(3, 0b111))
