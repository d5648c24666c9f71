from fractions import Fraction

import pytest

from dlambda2 import families as fam
from dlambda2.chordal import GEM, blocks, is_split, minimal_vertex_separators
from dlambda2.graph import (
    are_isomorphic,
    complete,
    diameter,
    enumerate_connected,
    find_induced_embedding,
    join,
    path,
    union_all,
    universal_vertices,
)
from dlambda2.polynomial import (
    Polynomial,
    charpoly_exact,
    count_distinct_roots_in,
    descartes_sign_changes,
)
from dlambda2.spectral import decide_lambda2_lt_neg_half_exact, distance_charpoly

HALF = Fraction(-1, 2)


def test_fixtures_load():
    for name in fam.FIXTURES:
        g = fam.load_fixture(name)
        assert g.n >= 4
    assert are_isomorphic(fam.forbidden(11), GEM)
    with pytest.raises(fam.FamilyError):
        fam.forbidden(14)


def test_fixture_sizes():
    assert (fam.full_house().n, fam.full_house().m) == (5, 8)
    assert (fam.diamond().n, fam.diamond().m) == (4, 5)
    assert (fam.paw().n, fam.paw().m) == (4, 4)
    assert (fam.pt1().n, fam.pt1().m) == (9, 13)
    assert fam.mvs3a().n == 5


def test_constructions():
    assert fam.pt2(2, 3).n == 10
    assert len(blocks(fam.pt2(3, 4)).blocks) == 3
    g = fam.g_rpq(2, 3, 2)
    assert g.n == 1 + 3 * 2 + 4 * 2
    assert universal_vertices(g) == [0]
    assert fam.bg322(2, 2).n == 7
    assert fam.sp_t(3).n == 8 and is_split(fam.sp_t(3))
    bs = fam.block_star([3, 4, 2])
    assert bs.n == 1 + 2 + 3 + 1 and fam.is_block_star(bs)
    spec = fam.RelaxedBlockStarSpec(((2, 3),), 1, 2)
    want = join(complete(1), union_all([complete(3), complete(3), fam.paw(), path(3), path(3)]))
    assert fam.relaxed_block_star(spec) == want
    with pytest.raises(fam.FamilyError):
        fam.RelaxedBlockStarSpec((), 0, 0)
    with pytest.raises(fam.FamilyError):
        fam.pt2(1, 3)


def test_make_family():
    assert fam.make_family("pt2", ["2", "3"]) == fam.pt2(2, 3)
    assert fam.make_family("block_star", [3, 3]) == fam.block_star([3, 3])
    g = fam.make_family("relaxed_block_star", [1, 2, 2, 3])
    assert g == fam.relaxed_block_star(fam.RelaxedBlockStarSpec(((2, 3),), 1, 2))
    assert fam.make_family("forbidden", [4]) == fam.forbidden(4)
    assert fam.make_family("gem") == fam.gem()
    for bad in [("nope", []), ("pt2", [2]), ("gem", [1]), ("relaxed_block_star", [1])]:
        with pytest.raises(fam.FamilyError):
            fam.make_family(*bad)


def test_partitions_cover_vertices():
    for r, p, q in [(1, 1, 1), (3, 2, 2)]:
        parts = fam.g_rpq_partition(r, p, q)
        assert sorted(v for c in parts for v in c) == list(range(fam.g_rpq(r, p, q).n))
    parts = fam.pt2_partition(3)
    assert sorted(v for c in parts for v in c) == list(range(fam.pt2(3, 3).n))


def test_f_matches_divisor_charpoly():
    for r in range(1, 4):
        for p in range(1, 4):
            for q in range(1, 4):
                assert charpoly_exact(fam.F_pi_matrix(r, p, q)) == fam.f_polynomial(r, p, q)
                f = fam.f_polynomial(r, p, q)
                assert f(HALF) == Fraction(-(2 * r + 1), 32)
                assert f(0) == -((6 * r + 6) * q + 5 * r * p)
                assert descartes_sign_changes(f) == 1


def test_pt2_closed_forms():
    for r in range(2, 11):
        ph = charpoly_exact(fam.H_pi_matrix(r))
        assert ph == fam.pt2_quartic(r)
        assert ph(HALF) == Fraction(-(4 * r + 1), 16)
        assert descartes_sign_changes(ph) == 1


def test_verify_factorization_main_examples():
    for params in [(2, 2, 2), (1, 1, 1), (3, 2, 4)]:
        rep = fam.verify_factorization_main(*params)
        assert rep.ok and rep.checks
    # (1,1,1): only (x+1)^1 times f
    pg = distance_charpoly(fam.g_rpq(1, 1, 1))
    assert pg == (Polynomial.x() + 1) * fam.f_polynomial(1, 1, 1)


def test_verification_detects_wrong_factor(monkeypatch):
    monkeypatch.setattr(fam, "f_polynomial", lambda r, p, q: Polynomial((-1, 0, 0, 0, 0, 1)))
    with pytest.raises(fam.FactorizationMismatch):
        fam.verify_factorization_main(2, 2, 2)
    with pytest.raises(fam.SturmProofFailure):
        fam.verify_sturm_proof_main(2, 2, 2)


def test_verify_sturm_proof_examples():
    for params in [(1, 1, 1), (2, 3, 1), (4, 4, 4)]:
        rep = fam.verify_sturm_proof_main(*params)
        assert rep.ok
        labels = [c[0] for c in rep.checks]
        assert "pattern at 0 is (-,-,+,*)" in labels


def test_verify_pt2_and_p3():
    for r in (2, 5):
        assert fam.verify_factorization_pt2(r).ok
    assert fam.verify_factorization_p3(fam.RelaxedBlockStarSpec((), 0, 2)).ok
    assert fam.verify_factorization_p3(fam.RelaxedBlockStarSpec(((1, 3),), 0, 3)).ok
    with pytest.raises(fam.FamilyError):
        fam.verify_factorization_p3(fam.RelaxedBlockStarSpec((), 0, 1))
    assert fam.verify_divisor_main(2, 2, 2).ok


def test_p3_factor_roots():
    p3 = Polynomial((2, 4, 1))
    assert count_distinct_roots_in(p3, HALF, float("inf")) == 0


def test_recognizer_examples():
    assert fam.is_relaxed_block_star_subgraph(fam.full_house())
    assert not fam.is_relaxed_block_star_subgraph(fam.load_fixture("mvs2d"))
    assert fam.is_pt2_subgraph(fam.pt2(2, 3))
    assert fam.is_pt1_subgraph(fam.pt1())
    g = fam.gem()
    for rec in (fam.is_relaxed_block_star_subgraph, fam.is_pt1_subgraph, fam.is_pt2_subgraph,
                fam.is_block_star, fam.is_loose_block_graph, fam.is_bg322_subgraph,
                fam.is_bga_subgraph, fam.split_satisfies):
        assert not rec(g)
    assert fam.is_bg322_subgraph(fam.bg322(2, 2))
    assert fam.is_bga_subgraph(fam.bga())
    assert fam.is_loose_block_graph(path(5))
    # three pendant edges at one vertex: that separator has multiplicity 2
    assert not fam.is_loose_block_graph(fam.block_star([2, 2, 2]))


def test_relaxed_block_star_has_one_universal_vertex():
    for spec in [fam.RelaxedBlockStarSpec(((2, 3),), 1, 1), fam.RelaxedBlockStarSpec((), 2, 0),
                 fam.RelaxedBlockStarSpec(((1, 2),), 0, 2)]:
        g = fam.relaxed_block_star(spec)
        assert len(universal_vertices(g)) == 1
        assert diameter(g) == 2


def test_recognizer_matches_oracle_n6():
    host = fam.relaxed_block_star_oracle_host(6)
    for g in enumerate_connected(6, canonical=True):
        oracle = find_induced_embedding(g, host) is not None
        assert fam.is_relaxed_block_star_subgraph(g) == oracle


def test_family_members_have_claimed_verdicts():
    sat = [fam.block_star([3, 2, 4]), path(6), fam.bg322(2, 3), fam.bga(), fam.sp1(), fam.sp_t(3),
           fam.g_rpq(2, 2, 2), fam.relaxed_block_star(fam.RelaxedBlockStarSpec(((1, 3),), 1, 2)),
           fam.pt1(), fam.pt2(2, 2), fam.pt2(2, 4)]
    for g in sat:
        assert decide_lambda2_lt_neg_half_exact(g)
    for g in [fam.forbidden(i) for i in range(1, 14)] + [fam.gem(), fam.mvs3a()]:
        assert not decide_lambda2_lt_neg_half_exact(g)


def test_split_satisfies_matches_exact_on_split_graphs():
    for n in range(2, 7):
        for g in enumerate_connected(n, canonical=True):
            if is_split(g):
                assert fam.split_satisfies(g) == decide_lambda2_lt_neg_half_exact(g)


def test_mvs_shapes_of_triple_block():
    mvs = minimal_vertex_separators(fam.pt2(2, 3))
    assert [(len(s), m) for s, m in mvs.entries] == [(1, 1), (1, 1), (2, 1)]
