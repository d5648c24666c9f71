"""The compiled kernels and the pure-Python fallback must agree exactly."""

import random

import pytest

from dlambda2 import _pure
from dlambda2.graph import Graph, enumerate_connected

ck = pytest.importorskip("dlambda2._kernels")


def _random_graphs(seed, count, lo=1, hi=12, p=0.4):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(lo, hi)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        yield Graph.from_edges(n, edges)


def test_connectivity_and_distances():
    for g in _random_graphs(1, 300):
        assert ck.is_connected(g.n, g.adj) == _pure.is_connected(g.n, g.adj)
        assert ck.distance_rows(g.n, g.adj) == _pure.distance_rows(g.n, g.adj)


def test_charpoly():
    for g in _random_graphs(2, 200, hi=14, p=0.3):
        assert ck.distance_charpoly(g.n, g.adj) == _pure.distance_charpoly(g.n, g.adj)
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert ck.charpoly_int(n, rows) == _pure.charpoly_int(n, rows)


def test_charpoly_overflow_is_reported():
    g = Graph.from_edges(40, [(i, i + 1) for i in range(39)])
    with pytest.raises(OverflowError):
        ck.distance_charpoly(g.n, g.adj)


def test_embedding_and_canonical():
    hosts = list(_random_graphs(4, 40, lo=5, hi=10, p=0.5))
    patterns = list(_random_graphs(5, 40, lo=2, hi=5, p=0.5))
    for h in hosts:
        for p in patterns:
            assert ck.induced_embedding(p.n, p.adj, h.n, h.adj) == _pure.induced_embedding(p.n, p.adj, h.n, h.adj)
    for g in enumerate_connected(5):
        assert ck.canonical_code(g.n, g.adj) == _pure.canonical_code(g.n, g.adj)


def test_connected_masks():
    for n in range(1, 6):
        top = 1 << (n * (n - 1) // 2)
        assert ck.connected_masks(n, 0, top) == _pure.connected_masks(n, 0, top)
    assert ck.connected_masks(6, 1000, 5000) == _pure.connected_masks(6, 1000, 5000)


def test_peo_violation():
    for g in enumerate_connected(6):
        assert ck.peo_violation(g.n, g.adj) == _pure.peo_violation(g.n, g.adj)


def test_jacobi():
    for g in _random_graphs(6, 50, lo=2, hi=10, p=0.6):
        rows = _pure.distance_rows(g.n, g.adj)
        if rows is None:
            continue
        flat = [float(v) for r in rows for v in r]
        a = ck.jacobi_eigenvalues(g.n, flat, 1e-12)
        b = _pure.jacobi_eigenvalues(g.n, flat, 1e-12)
        assert a == pytest.approx(b, abs=1e-9)


def test_size_guards():
    with pytest.raises(ValueError):
        ck.is_connected(65, [0] * 65)
    with pytest.raises(ValueError):
        ck.connected_masks(12, 0, 1)


def test_pure_backend_end_to_end():
    import json
    import os
    import subprocess
    import sys

    env = dict(os.environ, DLAMBDA2_PURE="1")
    code = (
        "import json, sys\n"
        "from dlambda2._core import BACKEND\n"
        "from dlambda2.cli import main\n"
        "assert BACKEND == 'python'\n"
        "sys.exit(main(['enumerate', '--max-n', '5', '--json']))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=600)
    assert out.returncode == 0, out.stderr
    doc = json.loads(out.stdout)
    assert doc["ok"] and doc["total"] == 1 + 4 + 38 + 728
