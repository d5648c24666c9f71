"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from dlambda2 import _pure
from dlambda2.graph import Graph

try:
    from dlambda2 import _kernels
except ImportError:
    _kernels = None


def random_graph(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    edges += [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges(n, sorted(set(edges)))


def workloads():
    rng = random.Random(7)
    g12 = [random_graph(rng, 12, 0.3) for _ in range(20)]
    g7 = [random_graph(rng, 7, 0.5) for _ in range(200)]
    host = random_graph(rng, 30, 0.3)
    pats = [random_graph(rng, 6, 0.5) for _ in range(20)]
    flat = []
    for g in g12:
        rows = _pure.distance_rows(g.n, g.adj)
        flat.append([float(v) for r in rows for v in r])
    return {
        "distance_rows n=12 x20": lambda k: [k.distance_rows(g.n, g.adj) for g in g12],
        "distance_charpoly n=12 x20": lambda k: [k.distance_charpoly(g.n, g.adj) for g in g12],
        "canonical_code n=7 x200": lambda k: [k.canonical_code(g.n, g.adj) for g in g7],
        "peo_violation n=7 x200": lambda k: [k.peo_violation(g.n, g.adj) for g in g7],
        "induced_embedding 6 in 30 x20": lambda k: [k.induced_embedding(p.n, p.adj, host.n, host.adj) for p in pats],
        "connected_masks n=6 (32768 masks)": lambda k: k.connected_masks(6, 0, 1 << 15),
        "jacobi_eigenvalues n=12 x20": lambda k: [k.jacobi_eigenvalues(12, f, 1e-12) for f in flat],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run: python3 setup.py build_ext --inplace")
    print(f"{'kernel':36s} {'pure (ms)':>10s} {'compiled (ms)':>14s} {'speedup':>8s}")
    for name, fn in workloads().items():
        t_pure = min(timeit.repeat(lambda: fn(_pure), number=1, repeat=args.repeat)) * 1e3
        if _kernels is None:
            print(f"{name:36s} {t_pure:10.2f} {'-':>14s} {'-':>8s}")
            continue
        t_ext = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:36s} {t_pure:10.2f} {t_ext:14.2f} {t_pure / t_ext:7.1f}x")


if __name__ == "__main__":
    main()
