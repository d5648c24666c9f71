"""Chordal structure: elimination orders, clique trees, separators, blocks and
the small hereditary classes (block, split, Ptolemaic, quasi-threshold)."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations

from ._core import kernels
from .graph import (
    Graph,
    GraphError,
    bfs_distances,
    bits,
    connected_induced_subsets,
    find_induced_embedding,
    induced_subgraph,
    is_connected,
)


class NotChordal(GraphError):
    """Raised by operations that require a chordal graph."""

    def __init__(self, cycle):
        super().__init__(f"graph is not chordal; chordless cycle {cycle}")
        self.cycle = cycle


GEM = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def is_clique_mask(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~g.adj[v] & ~(1 << v):
            return False
    return True


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the smallest vertex."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            weight[u] += 1
    return order


def _earlier_masks(g: Graph, order):
    earlier = {}
    seen = 0
    for v in order:
        earlier[v] = g.adj[v] & seen
        seen |= 1 << v
    return earlier


def _peo_violation(g: Graph, order):
    """First (v, x, y) with x, y earlier neighbours of v and xy not an edge."""
    earlier = _earlier_masks(g, order)
    for v in order:
        e = earlier[v]
        for x in bits(e):
            rest = e & ~g.adj[x] & ~(1 << x)
            if rest:
                return v, x, bits(rest)[0]
    return None


def _shortest_path(g: Graph, allowed: int, src: int, dst: int):
    parent = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits(g.adj[u] & allowed):
                if w not in parent:
                    parent[w] = u
                    if w == dst:
                        path = [w]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(w)
        frontier = nxt
    return None


def _cycle_through(g: Graph, v: int, x: int, y: int):
    # path x..y avoiding v and its other neighbours; with v it closes a chordless cycle
    allowed = g.vertex_mask & ~(g.adj[v] | 1 << v) | (1 << x) | (1 << y)
    p = _shortest_path(g, allowed, x, y)
    if p is None:
        return None
    return [v] + p


def chordless_cycle(g: Graph):
    """A chordless cycle of length >= 4 as a vertex list, or None if g is chordal."""
    bad = kernels.peo_violation(g.n, g.adj)
    if bad is None:
        return None
    cyc = _cycle_through(g, *bad)
    if cyc is not None:
        return cyc
    for v in range(g.n):
        for x, y in combinations(bits(g.adj[v]), 2):
            if not g.has_edge(x, y):
                cyc = _cycle_through(g, v, x, y)
                if cyc is not None:
                    return cyc
    raise AssertionError("elimination test failed but no chordless cycle found")


def is_chordal(g: Graph, certificate: bool = False):
    """True iff g is chordal. With ``certificate=True`` returns ``(flag, cycle)``."""
    if not certificate:
        return kernels.peo_violation(g.n, g.adj) is None
    cyc = chordless_cycle(g)
    return cyc is None, cyc


def is_chordless_cycle(g: Graph, cycle) -> bool:
    """Independent check of a chordality certificate."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != adjacent:
                return False
    return True


def _require_chordal(g: Graph):
    order = mcs_order(g)
    if _peo_violation(g, order) is not None:
        raise NotChordal(chordless_cycle(g))
    return order


def maximal_cliques_chordal(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques of a chordal graph, each a sorted tuple, in sorted order."""
    order = _require_chordal(g)
    earlier = _earlier_masks(g, order)
    cands = {earlier[v] | (1 << v) for v in order}
    maximal = [c for c in cands if not any(c != d and c & d == c for d in cands)]
    return sorted(tuple(bits(c)) for c in maximal)


@dataclass(frozen=True)
class CliqueTree:
    cliques: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def separators(self):
        return [tuple(sorted(set(self.cliques[i]) & set(self.cliques[j]))) for i, j in self.tree_edges]


def build_clique_tree(g: Graph, rng: random.Random | None = None) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Ties are broken by clique index unless ``rng`` is given, in which case
    they are broken at random.
    """
    cliques = maximal_cliques_chordal(g)
    masks = [sum(1 << v for v in c) for c in cliques]
    cand = []
    for i, j in combinations(range(len(cliques)), 2):
        w = bin(masks[i] & masks[j]).count("1")
        if w:
            tie = rng.random() if rng is not None else 0.0
            cand.append((-w, tie, i, j))
    cand.sort()
    parent = list(range(len(cliques)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = []
    for _, _, i, j in cand:
        a, b = find(i), find(j)
        if a != b:
            parent[a] = b
            edges.append((i, j))
    if len(edges) != len(cliques) - 1:
        raise GraphError("clique intersection graph is disconnected; graph not connected")
    return CliqueTree(tuple(cliques), tuple(sorted(edges)))


def clique_tree_is_valid(g: Graph, tree: CliqueTree) -> bool:
    """Spanning tree plus the induced-subtree property for every vertex."""
    k = len(tree.cliques)
    if len(tree.tree_edges) != k - 1:
        return False
    for v in range(g.n):
        holding = {i for i, c in enumerate(tree.cliques) if v in c}
        if not holding:
            return False
        start = min(holding)
        seen, stack = {start}, [start]
        while stack:
            a = stack.pop()
            for i, j in tree.tree_edges:
                for x, y in ((i, j), (j, i)):
                    if x == a and y in holding and y not in seen:
                        seen.add(y)
                        stack.append(y)
        if seen != holding:
            return False
    return True


@dataclass(frozen=True)
class MvsMultiset:
    """Minimal vertex separators with multiplicities, sorted by (size, vertices)."""

    entries: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def from_tree(cls, tree: CliqueTree) -> "MvsMultiset":
        c = Counter(tree.separators())
        return cls(tuple(sorted(c.items(), key=lambda e: (len(e[0]), e[0]))))

    def as_counter(self) -> Counter:
        return Counter(dict(self.entries))

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def max_size(self) -> int:
        return max((len(s) for s, _ in self.entries), default=0)

    def summary(self) -> dict[str, int]:
        """Count of separators per (size, multiplicity), keyed 'sxm'."""
        out = Counter(f"{len(s)}x{m}" for s, m in self.entries)
        return dict(sorted(out.items()))


def minimal_vertex_separators(g: Graph, rng: random.Random | None = None) -> MvsMultiset:
    return MvsMultiset.from_tree(build_clique_tree(g, rng))


def simplicial_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if is_clique_mask(g, g.adj[v])]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (Hopcroft-Tarjan, iterative) and cut vertices."""
    n = g.n
    if n == 1:
        return BlockDecomposition(((0,),), ())
    disc = [-1] * n
    low = [0] * n
    found = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        estack = []
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, par, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                if w != par and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if par >= 0:
                low[par] = min(low[par], low[v])
                if low[v] >= disc[par]:
                    comp = set()
                    while True:
                        a, b = estack.pop()
                        comp.update((a, b))
                        if (a, b) == (par, v):
                            break
                    found.append(tuple(sorted(comp)))
        if g.adj[root] == 0:
            found.append((root,))
    count = Counter(v for b in found for v in b)
    cuts = tuple(sorted(v for v, c in count.items() if c >= 2))
    return BlockDecomposition(tuple(sorted(found)), cuts)


def is_block_graph(g: Graph) -> bool:
    return all(is_clique_mask(g, sum(1 << v for v in b)) for b in blocks(g).blocks)


def is_split(g: Graph) -> bool:
    """Hammer-Simeone degree-sequence test."""
    d = sorted(g.degrees(), reverse=True)
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def split_partition(g: Graph):
    """(clique, independent set) partition by brute force; None if not split."""
    for size in range(g.n, -1, -1):
        for k in combinations(range(g.n), size):
            km = sum(1 << v for v in k)
            rest = g.vertex_mask & ~km
            if is_clique_mask(g, km) and all(not g.adj[v] & rest for v in bits(rest)):
                return k, tuple(bits(rest))
    return None


def is_ptolemaic(g: Graph) -> bool:
    return is_chordal(g) and find_induced_embedding(GEM, g) is None


def is_quasi_threshold(g: Graph) -> bool:
    return find_induced_embedding(C4, g) is None and find_induced_embedding(P4, g) is None


def ptolemy_inequality_holds(g: Graph) -> bool:
    d = bfs_distances(g)
    for u, v, w, x in permutations(range(g.n), 4):
        if d[u][v] * d[w][x] > d[u][w] * d[v][x] + d[u][x] * d[v][w]:
            return False
    return True


def is_distance_hereditary(g: Graph) -> bool:
    """Brute force: every connected induced subgraph keeps the host distances."""
    d = bfs_distances(g)
    for sel in connected_induced_subsets(g, min_size=3):
        vs = bits(sel)
        sub = bfs_distances(induced_subgraph(g, vs))
        for i, a in enumerate(vs):
            for j, b in enumerate(vs):
                if sub[i][j] != d[a][b]:
                    return False
    return True


__all__ = [
    "BlockDecomposition",
    "CliqueTree",
    "MvsMultiset",
    "NotChordal",
    "blocks",
    "build_clique_tree",
    "chordless_cycle",
    "clique_tree_is_valid",
    "is_block_graph",
    "is_chordal",
    "is_chordless_cycle",
    "is_connected",
    "is_distance_hereditary",
    "is_ptolemaic",
    "is_quasi_threshold",
    "is_split",
    "maximal_cliques_chordal",
    "mcs_order",
    "minimal_vertex_separators",
    "ptolemy_inequality_holds",
    "simplicial_vertices",
    "split_partition",
]
