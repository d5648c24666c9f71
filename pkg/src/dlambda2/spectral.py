"""Distance spectra: a floating eigensolver, the exact lambda_2 < -1/2 test,
equitable partitions and their divisor matrices, interlacing and twin bounds."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import _pure
from ._core import kernels
from .graph import DisconnectedGraph, Graph, GraphError, bfs_distances
from .polynomial import (
    Polynomial,
    charpoly_exact,
    count_distinct_roots_in,
    cauchy_bound,
    divides,
    real_roots,
    sign_at,
    squarefree_part,
)

DEFAULT_TOL = 1e-12
EIG_SLACK = 1e-8
HALF = Fraction(-1, 2)


class NotEquitable(GraphError):
    def __init__(self, vertex, cls):
        super().__init__(f"vertex {vertex} breaks constancy towards class {cls}")
        self.vertex = vertex
        self.cls = cls


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tol: float = DEFAULT_TOL

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def lambda1(self) -> float:
        return self.values[0]

    @property
    def lambda2(self) -> float:
        return self.values[1]


def jacobi_eigenvalues(m: Sequence[Sequence[float]], tol: float = DEFAULT_TOL) -> Spectrum:
    n = len(m)
    if n == 0 or any(len(r) != n for r in m):
        raise ValueError("need a nonempty square matrix")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")
    flat = [float(v) for r in m for v in r]
    return Spectrum(tuple(kernels.jacobi_eigenvalues(n, flat, tol)), tol)


def distance_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return jacobi_eigenvalues(bfs_distances(g), tol)


def lambda2(g: Graph, tol: float = DEFAULT_TOL) -> float:
    if g.n < 2:
        raise GraphError("lambda_2 needs at least 2 vertices")
    return distance_spectrum(g, tol).lambda2


def distance_charpoly(g: Graph) -> Polynomial:
    """Exact characteristic polynomial of D(g)."""
    try:
        coeffs = kernels.distance_charpoly(g.n, g.adj)
    except OverflowError:
        coeffs = _pure.distance_charpoly(g.n, g.adj)
    if coeffs is None:
        raise DisconnectedGraph("graph is not connected")
    return Polynomial(coeffs)


@lru_cache(maxsize=1 << 16)
def _decide_from_coeffs(coeffs: tuple) -> bool:
    q = squarefree_part(Polynomial(coeffs))
    if sign_at(q, HALF) == 0:
        return False
    return count_distinct_roots_in(q, HALF, cauchy_bound(q)) == 1


def decide_lambda2_lt_neg_half_exact(g: Graph) -> bool:
    """Exact test of lambda_2(D(g)) < -1/2 with no floating point.

    lambda_1 is simple (D is nonnegative and irreducible), so the test holds
    iff the square-free part of the characteristic polynomial does not vanish
    at -1/2 and has exactly one distinct root above it.
    """
    if g.n < 2:
        raise GraphError("lambda_2 needs at least 2 vertices")
    try:
        coeffs = kernels.distance_charpoly(g.n, g.adj)
    except OverflowError:
        coeffs = _pure.distance_charpoly(g.n, g.adj)
    if coeffs is None:
        raise DisconnectedGraph("graph is not connected")
    return _decide_from_coeffs(tuple(coeffs))


# equitable partitions -------------------------------------------------------------

@dataclass(frozen=True)
class DivisorMatrix:
    matrix: tuple[tuple[int, ...], ...]
    partition: tuple[tuple[int, ...], ...]


def _check_partition(g: Graph, partition):
    parts = [tuple(sorted(p)) for p in partition]
    seen = [v for p in parts for v in p]
    if any(not p for p in parts) or sorted(seen) != list(range(g.n)):
        raise ValueError("partition must cover the vertices disjointly with nonempty classes")
    return parts


def divisor_matrix(g: Graph, partition) -> DivisorMatrix:
    """b_ij = sum of distances from any v in V_i to V_j; NotEquitable otherwise."""
    parts = _check_partition(g, partition)
    d = bfs_distances(g)
    rows = []
    for i, pi in enumerate(parts):
        row = None
        for v in pi:
            sums = tuple(sum(d[v][u] for u in pj) for pj in parts)
            if row is None:
                row = sums
            elif sums != row:
                j = next(k for k in range(len(parts)) if sums[k] != row[k])
                raise NotEquitable(v, j)
        rows.append(row)
    return DivisorMatrix(tuple(rows), tuple(parts))


def is_distance_equitable(g: Graph, partition) -> bool:
    try:
        divisor_matrix(g, partition)
    except NotEquitable:
        return False
    return True


def check_divisor_divides(g: Graph, partition) -> bool:
    """charpoly(divisor) | charpoly(D) exactly, and its largest root is lambda_1."""
    b = divisor_matrix(g, partition)
    pb = charpoly_exact(b.matrix)
    pd = charpoly_exact(bfs_distances(g))
    if not divides(pb, pd):
        return False
    top = float(real_roots(pb)[-1])
    return abs(top - distance_spectrum(g).lambda1) <= EIG_SLACK * max(1.0, abs(top))


def interlacing_holds(outer: Spectrum, inner: Spectrum, slack: float = EIG_SLACK) -> bool:
    """lambda_i(A) >= lambda_i(B) >= lambda_{n-m+i}(A) for B principal in A."""
    n, m = len(outer), len(inner)
    if m > n:
        raise ValueError("inner spectrum is larger than the outer one")
    for i in range(m):
        if inner[i] > outer[i] + slack or inner[i] < outer[n - m + i] - slack:
            return False
    return True


# twins -------------------------------------------------------------------------------

def true_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Classes of vertices with equal closed neighbourhoods (singletons included)."""
    groups = defaultdict(list)
    for v in range(g.n):
        groups[g.adj[v] | 1 << v].append(v)
    return sorted(tuple(vs) for vs in groups.values())


def twin_multiplicity_bounds(g: Graph) -> list[tuple[int, int]]:
    """Lower bounds (eigenvalue, multiplicity) forced by twin structure.

    A true-twin class of size r forces -1 with multiplicity r - 1. Among
    classes of equal size r sharing the same outside neighbourhood, m of them
    force -(r + 1) with multiplicity m - 1.
    """
    classes = true_twin_classes(g)
    out = defaultdict(int)
    minus_one = sum(len(c) - 1 for c in classes)
    if minus_one:
        out[-1] += minus_one
    if len(classes) > 1:
        by_shape = defaultdict(int)
        for c in classes:
            cm = sum(1 << v for v in c)
            outside = g.adj[c[0]] & ~cm
            by_shape[(len(c), outside)] += 1
        for (r, _), m in by_shape.items():
            if m >= 2:
                out[-(r + 1)] += m - 1
    return sorted(out.items())


def check_multiplicity_bounds(g: Graph, p: Polynomial | None = None) -> bool:
    """Each bound (e, k) holds: (x - e)^k divides the exact characteristic polynomial."""
    if p is None:
        p = charpoly_exact(bfs_distances(g))
    return all(divides(Polynomial.linear(e) ** k, p) for e, k in twin_multiplicity_bounds(g))


__all__ = [
    "DivisorMatrix",
    "NotEquitable",
    "Spectrum",
    "check_divisor_divides",
    "check_multiplicity_bounds",
    "decide_lambda2_lt_neg_half_exact",
    "distance_charpoly",
    "distance_spectrum",
    "divisor_matrix",
    "interlacing_holds",
    "is_distance_equitable",
    "jacobi_eigenvalues",
    "lambda2",
    "true_twin_classes",
    "twin_multiplicity_bounds",
]
