"""Graphs on at most 64 vertices stored as neighbour bitsets.

Also holds the graph6 and edge-list codecs, the standard constructions
(join, disjoint union, complete, path), BFS distances and the induced
subgraph search used by every recognizer in the package.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from ._core import kernels

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or encoding."""


class DisconnectedGraph(GraphError):
    """An operation that needs a connected graph got a disconnected one."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set when ``uv`` is an edge.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise GraphError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(a):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at {v},{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _raw(cls, n: int, adj: tuple) -> "Graph":
        # trusted constructor for hot loops: no validation
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._raw, (self.n, self.adj))

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def mask_of(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


# graph6 ------------------------------------------------------------------

def _pairs(n):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (no ``>>graph6<<`` header)."""
    s = text.strip()
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError(f"graph6 character out of range in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("malformed graph6 length field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 encodes {n} vertices; at most {MAX_VERTICES} supported")
    if n == 0:
        raise GraphError("graph6 encodes the empty graph")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    adj = [0] * n
    k = 0
    for i, j in _pairs(n):
        if body[k // 6] >> (5 - k % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    # padding bits must be zero
    for k in range(nbits, 6 * len(body)):
        if body[k // 6] >> (5 - k % 6) & 1:
            raise GraphError("graph6 padding bits are not zero")
    return Graph(n, adj)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    bitlist = [g.adj[j] >> i & 1 for i, j in _pairs(n)]
    while len(bitlist) % 6:
        bitlist.append(0)
    body = []
    for k in range(0, len(bitlist), 6):
        x = 0
        for b in bitlist[k:k + 6]:
            x = (x << 1) | b
        body.append(x)
    return "".join(chr(x + 63) for x in head + body)


# edge-list text: "n m" then m lines "u v", 0-based; '#' starts a comment

def parse_edge_lists(text: str) -> list[Graph]:
    """Parse one or more concatenated edge-list records."""
    tokens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.extend(line.split())
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    graphs = []
    pos = 0
    while pos < len(nums):
        if pos + 2 > len(nums):
            raise GraphError("truncated edge-list header")
        n, m = nums[pos], nums[pos + 1]
        pos += 2
        if m < 0 or pos + 2 * m > len(nums):
            raise GraphError("edge list shorter than its header says")
        edges = [(nums[pos + 2 * k], nums[pos + 2 * k + 1]) for k in range(m)]
        pos += 2 * m
        g = Graph.from_edges(n, edges)
        if g.m != m:
            raise GraphError("duplicate edges in edge list")
        graphs.append(g)
    return graphs


def parse_edge_list(text: str) -> Graph:
    graphs = parse_edge_lists(text)
    if len(graphs) != 1:
        raise GraphError(f"expected one edge-list record, found {len(graphs)}")
    return graphs[0]


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# distances -----------------------------------------------------------------

DistanceMatrix = tuple  # tuple of row tuples of ints


def is_connected(g: Graph) -> bool:
    return kernels.is_connected(g.n, g.adj)


def bfs_distances(g: Graph) -> DistanceMatrix:
    rows = kernels.distance_rows(g.n, g.adj)
    if rows is None:
        raise DisconnectedGraph("graph is not connected")
    return rows


def diameter(g: Graph) -> int:
    return max(max(r) for r in bfs_distances(g))


def universal_vertices(g: Graph) -> list[int]:
    full = g.vertex_mask
    return [v for v in range(g.n) if g.adj[v] | (1 << v) == full]


# constructions ---------------------------------------------------------------

def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise GraphError(f"union has {a.n + b.n} vertices; limit is {MAX_VERTICES}")
    return Graph(a.n + b.n, list(a.adj) + [x << a.n for x in b.adj])


def join(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise GraphError(f"join has {a.n + b.n} vertices; limit is {MAX_VERTICES}")
    left = (1 << a.n) - 1
    right = ((1 << b.n) - 1) << a.n
    adj = [x | right for x in a.adj] + [(x << a.n) | left for x in b.adj]
    return Graph(a.n + b.n, adj)


def union_all(graphs: Iterable[Graph]) -> Graph:
    graphs = list(graphs)
    out = graphs[0]
    for h in graphs[1:]:
        out = disjoint_union(out, h)
    return out


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``; new label ``i`` is the ``i``-th smallest of ``vs``."""
    vs = sorted(set(vs))
    if not vs:
        raise GraphError("induced subgraph of an empty vertex set")
    index = {v: i for i, v in enumerate(vs)}
    sel = mask_of(vs)
    adj = []
    for v in vs:
        a = 0
        for u in _bits(g.adj[v] & sel):
            a |= 1 << index[u]
        adj.append(a)
    return Graph._raw(len(vs), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``perm[i]``."""
    inv = [0] * g.n
    for new, old in enumerate(perm):
        inv[old] = new
    adj = []
    for old in perm:
        a = 0
        for u in _bits(g.adj[old]):
            a |= 1 << inv[u]
        adj.append(a)
    return Graph._raw(g.n, tuple(adj))


# embeddings --------------------------------------------------------------------

def find_induced_embedding(pattern: Graph, host: Graph) -> tuple[int, ...] | None:
    """Injective map ``m`` (``m[p] = host vertex``) realizing ``pattern`` as an
    induced subgraph of ``host``, or None. Deterministic."""
    return kernels.induced_embedding(pattern.n, pattern.adj, host.n, host.adj)


def is_induced_embedding(pattern: Graph, host: Graph, image: Sequence[int]) -> bool:
    """Check a claimed embedding independently of the search."""
    if len(image) != pattern.n or len(set(image)) != pattern.n:
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != host.has_edge(image[i], image[j]):
                return False
    return True


def contains_induced(host: Graph, pattern: Graph) -> bool:
    return find_induced_embedding(pattern, host) is not None


def brute_force_contains(host: Graph, pattern: Graph) -> bool:
    """Oracle: scan vertex subsets and compare canonical forms."""
    if pattern.n > host.n:
        return False
    target = canonical_form(pattern)[0]
    pm = pattern.m
    for vs in combinations(range(host.n), pattern.n):
        h = induced_subgraph(host, vs)
        if h.m == pm and canonical_form(h)[0] == target:
            return True
    return False


# canonical forms and enumeration ----------------------------------------------------

def canonical_form(g: Graph) -> tuple[int, Graph]:
    """(code, relabelled graph) minimizing the graph6-order adjacency string."""
    code, perm = kernels.canonical_code(g.n, g.adj)
    return code, relabel(g, perm)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a)[0] == canonical_form(b)[0]


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose edge set is ``mask`` in graph6 pair order."""
    adj = [0] * n
    k = 0
    for i, j in _pairs(n):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    return Graph._raw(n, tuple(adj))


def _mask_decoder(n):
    pairs = list(_pairs(n))

    def decode(mask):
        adj = [0] * n
        x = mask
        while x:
            low = x & -x
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            x ^= low
        return Graph._raw(n, tuple(adj))

    return decode


_CHUNK = 1 << 16


def enumerate_connected(n: int, canonical: bool = False, lo: int = 0, hi: int | None = None) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices (2..7).

    Labeled mode yields every labeled connected graph once, in increasing
    edge-mask order; ``lo``/``hi`` restrict the mask range (for splitting
    work across processes). Canonical mode yields one canonical
    representative per isomorphism class, in increasing code order.
    """
    if not 2 <= n <= 7:
        raise GraphError(f"enumeration supports 2 <= n <= 7, got {n}")
    if canonical:
        yield from _canonical_connected(n)
        return
    top = 1 << (n * (n - 1) // 2)
    hi = top if hi is None else min(hi, top)
    decode = _mask_decoder(n)
    start = lo
    while start < hi:
        stop = min(start + _CHUNK, hi)
        for mask in kernels.connected_masks(n, start, stop):
            yield decode(mask)
        start = stop


def _all_canonical(n: int) -> dict[int, Graph]:
    """Canonical representatives of all graphs (connected or not) on n vertices."""
    if n == 1:
        return {0: Graph._raw(1, (0,))}
    out = {}
    for g in _cached_all_canonical(n - 1).values():
        for sub in range(1 << (n - 1)):
            adj = list(g.adj) + [sub]
            for u in _bits(sub):
                adj[u] |= 1 << (n - 1)
            code, perm = kernels.canonical_code(n, adj)
            if code not in out:
                out[code] = relabel(Graph._raw(n, tuple(adj)), perm)
    return out


_canon_cache: dict[int, dict[int, Graph]] = {}


def _cached_all_canonical(n):
    if n not in _canon_cache:
        _canon_cache[n] = _all_canonical(n)
    return _canon_cache[n]


def _canonical_connected(n):
    reps = _cached_all_canonical(n)
    for code in sorted(reps):
        g = reps[code]
        if is_connected(g):
            yield g


def connected_induced_subsets(g: Graph, min_size: int = 1) -> Iterator[int]:
    """Vertex masks of all connected induced subgraphs (brute force over subsets)."""
    for sel in range(1, 1 << g.n):
        size = bin(sel).count("1")
        if size < min_size:
            continue
        start = sel & -sel
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & sel & ~seen
            seen |= frontier
        if seen == sel:
            yield sel
