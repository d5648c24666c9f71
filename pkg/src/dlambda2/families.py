"""Named graphs and parameterized families, their recognizers, and exact
checks of the factorization identities for their distance polynomials."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .chordal import (
    blocks,
    is_block_graph,
    is_split,
    minimal_vertex_separators,
)
from .graph import (
    Graph,
    GraphError,
    complete,
    find_induced_embedding,
    induced_subgraph,
    join,
    parse_edge_list,
    path,
    union_all,
    universal_vertices,
)
from .polynomial import (
    INF,
    Polynomial,
    charpoly_exact,
    count_distinct_roots_in,
    derivative,
    descartes_sign_changes,
    div_exact,
    divmod_poly,
    InexactDivision,
    sign,
    sign_pattern,
    sign_variations,
    sturm_chain,
)
from .spectral import distance_charpoly, divisor_matrix

X = Polynomial.x()
HALF = Fraction(-1, 2)
CUBIC = Polynomial((5, 13, 7, 1))
P3_FACTOR = Polynomial((2, 4, 1))


class FamilyError(ValueError):
    """Unknown family name or invalid parameters."""


class VerificationFailure(AssertionError):
    def __init__(self, check: str, detail: str = ""):
        super().__init__(f"{check}: {detail}" if detail else check)
        self.check = check


class FactorizationMismatch(VerificationFailure):
    pass


class RootLocationFailure(VerificationFailure):
    pass


class SturmProofFailure(VerificationFailure):
    pass


# fixtures -------------------------------------------------------------------------

FIXTURES = (
    "f01", "f02", "f03", "f04", "f05", "f06", "f07", "f08", "f09", "f10", "f11",
    "f12", "f13", "gem", "diamond", "paw", "full_house", "sp1", "bga", "pt1",
    "mvs3a", "mvs2c", "mvs2d", "mvs12a", "mvs12b", "mvs12c", "diam3a_d",
    "diam3b_b", "diam3b_c", "relaxed_example",
)


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Graph:
    if name not in FIXTURES:
        raise FamilyError(f"no fixture named {name!r}")
    text = resources.files("dlambda2").joinpath("data", f"{name}.edges").read_text()
    return parse_edge_list(text)


def forbidden(i: int) -> Graph:
    if not 1 <= i <= 13:
        raise FamilyError(f"forbidden graphs are numbered 1..13, got {i}")
    return load_fixture(f"f{i:02d}")


def gem() -> Graph:
    return load_fixture("gem")


def diamond() -> Graph:
    return load_fixture("diamond")


def paw() -> Graph:
    return load_fixture("paw")


def full_house() -> Graph:
    return load_fixture("full_house")


def sp1() -> Graph:
    return load_fixture("sp1")


def bga() -> Graph:
    return load_fixture("bga")


def pt1() -> Graph:
    return load_fixture("pt1")


def mvs3a() -> Graph:
    return load_fixture("mvs3a")


# parameterized constructions --------------------------------------------------------

def _need(cond, msg):
    if not cond:
        raise FamilyError(msg)


def sp_t(t: int) -> Graph:
    """K4 on 0..3, vertex 4 adjacent to 1 and 3, and t pendants at 3."""
    _need(t >= 0, "sp_t needs t >= 0")
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(1, 4), (3, 4)]
    edges += [(3, 5 + k) for k in range(t)]
    return Graph.from_edges(5 + t, edges)


def bg322(p: int, q: int) -> Graph:
    """Triangle b-c-d with pendant a at d, a K_p through d, a bridge, then a K_q.

    Vertices: a=0, b=1, c=2, d=3, K_p = {3, 4..p+1, h=p+2}, i=p+3, K_q = {i..p+q+2}.
    """
    _need(p >= 2 and q >= 2, "bg322 needs p, q >= 2")
    n = p + q + 3
    h, i = p + 2, p + 3
    kp = [3] + list(range(4, p + 2)) + [h]
    kq = list(range(i, i + q))
    edges = [(0, 3), (1, 3), (1, 2), (2, 3), (h, i)]
    edges += [(a, b) for k, a in enumerate(kp) for b in kp[k + 1:]]
    edges += [(a, b) for k, a in enumerate(kq) for b in kq[k + 1:]]
    return Graph.from_edges(n, edges)


def block_star(sizes) -> Graph:
    """Cliques of the given sizes (each >= 2) glued at vertex 0."""
    sizes = list(sizes)
    _need(sizes and all(s >= 2 for s in sizes), "block sizes must be >= 2")
    n = 1 + sum(s - 1 for s in sizes)
    edges = []
    nxt = 1
    for s in sizes:
        members = [0] + list(range(nxt, nxt + s - 1))
        edges += [(a, b) for k, a in enumerate(members) for b in members[k + 1:]]
        nxt += s - 1
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class RelaxedBlockStarSpec:
    """K1 joined to sum p_i K_{r_i}, q paws and s copies of P3."""

    cliques: tuple[tuple[int, int], ...] = field(default=())  # (p_i, r_i)
    q: int = 0
    s: int = 0

    def __post_init__(self):
        cl = tuple((int(p), int(r)) for p, r in self.cliques)
        object.__setattr__(self, "cliques", cl)
        if any(p < 1 or r < 1 for p, r in cl) or self.q < 0 or self.s < 0:
            raise FamilyError("relaxed block star parameters must be positive")
        if not cl and self.q == 0 and self.s == 0:
            raise FamilyError("relaxed block star needs at least one component")


def relaxed_block_star(spec: RelaxedBlockStarSpec) -> Graph:
    """Universal vertex 0, then the clique copies, paws (center, isolated, pair), P3s."""
    parts = []
    for p, r in spec.cliques:
        parts += [complete(r)] * p
    parts += [paw()] * spec.q
    parts += [path(3)] * spec.s
    return join(complete(1), union_all(parts))


def g_rpq(r: int, p: int, q: int) -> Graph:
    _need(min(r, p, q) >= 1, "g_rpq needs r, p, q >= 1")
    return relaxed_block_star(RelaxedBlockStarSpec(((p, r),), q, 0))


def g_rpq_partition(r: int, p: int, q: int):
    """Universal vertex, clique vertices, paw centers, paw isolated vertices, paw pairs."""
    base = 1 + p * r
    centers = [base + 4 * k for k in range(q)]
    isolated = [c + 1 for c in centers]
    pairs = [c + j for c in centers for j in (2, 3)]
    return [[0], list(range(1, base)), centers, isolated, pairs]


def pt2(p: int, q: int) -> Graph:
    """Full house with p new vertices cliqued onto one separator vertex and q onto the other.

    Vertices: apex 0, pair 1-2, separator 3-4, then the p side, then the q side.
    """
    _need(p >= 2 and q >= 2, "pt2 needs p, q >= 2")
    return _pt2(p, q)


def _pt2(p, q):
    n = 5 + p + q
    edges = [(0, 3), (0, 4)]
    edges += [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    side_p = [3] + list(range(5, 5 + p))
    side_q = [4] + list(range(5 + p, n))
    for side in (side_p, side_q):
        edges += [(a, b) for k, a in enumerate(side) for b in side[k + 1:]]
    return Graph.from_edges(n, edges)


def pt2_partition(r: int):
    return [[0], [1, 2], [3, 4], list(range(5, 2 * r + 5))]


_BUILDERS = {
    "full_house": (0, full_house),
    "diamond": (0, diamond),
    "gem": (0, gem),
    "paw": (0, paw),
    "sp1": (0, sp1),
    "bga": (0, bga),
    "pt1": (0, pt1),
    "mvs3a": (0, mvs3a),
    "sp_t": (1, sp_t),
    "bg322": (2, bg322),
    "g_rpq": (3, g_rpq),
    "pt2": (2, pt2),
    "forbidden": (1, forbidden),
}

FAMILY_NAMES = tuple(sorted(set(_BUILDERS) | {"block_star", "relaxed_block_star"} | set(FIXTURES)))


def make_family(name: str, params=()) -> Graph:
    """Build a named graph.

    ``block_star`` takes the block sizes. ``relaxed_block_star`` takes
    ``q, s`` followed by ``p_i, r_i`` pairs. Plain fixture names take nothing.
    """
    params = [int(x) for x in params]
    if name == "block_star":
        return block_star(params)
    if name == "relaxed_block_star":
        _need(len(params) >= 2 and len(params) % 2 == 0,
              "relaxed_block_star takes q s [p1 r1 ...]")
        q, s, rest = params[0], params[1], params[2:]
        cliques = tuple(zip(rest[0::2], rest[1::2]))
        return relaxed_block_star(RelaxedBlockStarSpec(cliques, q, s))
    if name in _BUILDERS:
        arity, fn = _BUILDERS[name]
        _need(len(params) == arity, f"{name} takes {arity} parameter(s), got {len(params)}")
        return fn(*params)
    if name in FIXTURES:
        _need(not params, f"{name} takes no parameters")
        return load_fixture(name)
    raise FamilyError(f"unknown family {name!r}")


# closed forms --------------------------------------------------------------------------

@dataclass(frozen=True)
class FCoefficients:
    A: int
    B: int
    C: int
    D: int
    E: int


def f_coefficients(r: int, p: int, q: int) -> FCoefficients:
    return FCoefficients(
        A=8 * q + 2 * r * p - r - 8,
        B=(8 * r + 36) * q + 15 * r * p - 7 * r - 20,
        C=(28 * r + 52) * q + 33 * r * p - 13 * r - 18,
        D=(24 * r + 30) * q + 23 * r * p - 5 * r - 5,
        E=(6 * r + 6) * q + 5 * r * p,
    )


def f_polynomial(r: int, p: int, q: int) -> Polynomial:
    """x^5 - A x^4 - B x^3 - C x^2 - D x - E."""
    _need(min(r, p, q) >= 1, "f needs r, p, q >= 1")
    c = f_coefficients(r, p, q)
    return Polynomial((-c.E, -c.D, -c.C, -c.B, -c.A, 1))


def F_pi_matrix(r: int, p: int, q: int):
    _need(min(r, p, q) >= 1, "F_pi needs r, p, q >= 1")
    return (
        (0, p * r, q, q, 2 * q),
        (1, r - 1 + 2 * (p - 1) * r, 2 * q, 2 * q, 4 * q),
        (1, 2 * p * r, 2 * (q - 1), 1 + 2 * (q - 1), 2 + 4 * (q - 1)),
        (1, 2 * p * r, 1 + 2 * (q - 1), 2 * (q - 1), 4 * q),
        (1, 2 * p * r, 1 + 2 * (q - 1), 2 * q, 1 + 2 * (2 * q - 2)),
    )


def H_pi_matrix(r: int):
    _need(r >= 2, "H_pi needs r >= 2")
    return (
        (0, 4, 2, 4 * r),
        (2, 1, 2, 4 * r),
        (1, 2, 1, 3 * r),
        (2, 4, 3, 4 * r - 1),
    )


def pt2_quartic(r: int) -> Polynomial:
    return Polynomial((-(16 * r + 6), -(43 * r + 19), -(25 * r + 15), -(4 * r + 1), 1))


def pt2_quadratic(r: int) -> Polynomial:
    return Polynomial((r + 1, 2 * (r + 1), 1))


# verification of the factorization identities ------------------------------------------

@dataclass
class Report:
    name: str
    params: tuple
    checks: list = field(default_factory=list)  # (label, ok, detail)

    def add(self, label, ok, detail=""):
        self.checks.append((label, bool(ok), detail))
        return ok

    @property
    def ok(self):
        return all(c[1] for c in self.checks)


def _peel(report, poly, factor, exponent, label):
    """Divide ``factor**exponent`` out of ``poly`` one copy at a time."""
    rest = poly
    for k in range(exponent):
        try:
            rest = div_exact(rest, factor)
        except InexactDivision as exc:
            report.add(label, False, f"copy {k + 1} of {exponent}")
            raise FactorizationMismatch(label, f"{factor} does not divide {exponent} times") from exc
    report.add(label, True, f"exponent {exponent}")
    return rest


def verify_factorization_main(r: int, p: int, q: int) -> Report:
    """P_G = (x+1)^{p(r-1)+q} (x+r+1)^{p-1} (cubic)^{q-1} f  for G = g_rpq(r, p, q)."""
    rep = Report("factorization_main", (r, p, q))
    pg = distance_charpoly(g_rpq(r, p, q))
    f = f_polynomial(r, p, q)
    rest = _peel(rep, pg, X + 1, p * (r - 1) + q, "(x+1)")
    rest = _peel(rep, rest, X + (r + 1), p - 1, "(x+r+1)")
    rest = _peel(rep, rest, CUBIC, q - 1, "cubic")
    rest = _peel(rep, rest, f, 1, "f")
    if rest != Polynomial.const(1):
        rep.add("cofactor", False, str(rest))
        raise FactorizationMismatch("cofactor", f"left over {rest}")
    product = (X + 1) ** (p * (r - 1) + q) * (X + (r + 1)) ** (p - 1) * CUBIC ** (q - 1) * f
    if product != pg:
        raise FactorizationMismatch("product", "expanded product differs from P_G")
    rep.add("product", True)
    return rep


def _require(report, exc, label, ok, detail=""):
    report.add(label, ok, detail)
    if not ok:
        raise exc(label, detail)


def verify_sturm_proof_main(r: int, p: int, q: int) -> Report:
    """Re-run every step of the sign argument showing f has no root in [-1/2, 0]."""
    rep = Report("sturm_proof_main", (r, p, q))
    fail = SturmProofFailure
    c = f_coefficients(r, p, q)
    A, B, C, E = c.A, c.B, c.C, c.E
    f = f_polynomial(r, p, q)
    _require(rep, fail, "f = charpoly(F_pi)", charpoly_exact(F_pi_matrix(r, p, q)) == f)
    _require(rep, fail, "coefficients positive", min(A, B, C, c.D, E) > 0)
    _require(rep, fail, "descartes(f) = 1", descartes_sign_changes(f) == 1)
    _require(rep, fail, "f(-1/2) = -(2r+1)/32", f(HALF) == Fraction(-(2 * r + 1), 32))
    _require(rep, fail, "f(0) = -E < 0", f(0) == -E and E > 0)

    g = Polynomial((-2 * C, -6 * B, -12 * A, 20))
    _require(rep, fail, "g = f''", derivative(derivative(f)) == g)
    chain = sturm_chain(g, normalize=False).polys
    _require(rep, fail, "chain length 4", len(chain) == 4, str(len(chain)))
    g1 = Polynomial((-6 * B, -24 * A, 60))
    g2 = Polynomial((Fraction(10 * C + 2 * A * B, 5), Fraction(20 * B + 8 * A * A, 5)))
    g3 = Polynomial.const(-Fraction(
        375 * C * C + (450 * A * B + 120 * A ** 3) * C - 150 * B ** 3 - 45 * A * A * B * B,
        25 * B * B + 20 * A * A * B + 4 * A ** 4,
    ))
    _require(rep, fail, "g1 closed form", chain[1] == g1)
    _require(rep, fail, "g2 closed form", chain[2] == g2)
    _require(rep, fail, "g3 closed form", chain[3] == g3)
    _require(rep, fail, "g0(-1/2) closed form",
             g(HALF) == Fraction(-64 * r * q - 40 * q - 54 * r * p + 16 * r - 5, 2))
    _require(rep, fail, "g1(-1/2) closed form",
             g1(HALF) == -3 * r * (16 * q + 22 * p - 10) - 3 * (40 * q - 13))
    _require(rep, fail, "g2(-1/2) closed form",
             g2(HALF) == Fraction(10 * C + (2 * A - 10) * B - 4 * A * A, 5))

    sc = sturm_chain(g, normalize=False)
    at0 = sign_pattern(sc, 0)
    at_half = sign_pattern(sc, HALF)
    _require(rep, fail, "pattern at 0 is (-,-,+,*)", at0[:3] == (-1, -1, 1), str(at0))
    _require(rep, fail, "pattern at -1/2 is (-,-,+,*)", at_half[:3] == (-1, -1, 1), str(at_half))
    _require(rep, fail, "omega(-1/2) = omega(0)", sign_variations(sc, HALF) == sign_variations(sc, 0))
    _require(rep, fail, "no root of f in (-1/2, 0]", count_distinct_roots_in(f, HALF, 0) == 0)
    return rep


def verify_factorization_pt2(r: int) -> Report:
    """P_D(Pt2(r,r)) = (x+1)^{2r-1} (x^2 + 2(r+1)x + (r+1)) P_H, plus root locations."""
    _need(r >= 2, "pt2 factorization needs r >= 2")
    rep = Report("factorization_pt2", (r,))
    g = pt2(r, r)
    pd = distance_charpoly(g)
    ph = charpoly_exact(H_pi_matrix(r))
    quad = pt2_quadratic(r)
    _require(rep, FactorizationMismatch, "H_pi is the divisor matrix",
             divisor_matrix(g, pt2_partition(r)).matrix == H_pi_matrix(r))
    _require(rep, FactorizationMismatch, "charpoly(H_pi) closed form", ph == pt2_quartic(r))
    rest = _peel(rep, pd, X + 1, 2 * r - 1, "(x+1)")
    rest = _peel(rep, rest, quad, 1, "quadratic")
    rest = _peel(rep, rest, ph, 1, "P_H")
    _require(rep, FactorizationMismatch, "cofactor is 1", rest == Polynomial.const(1), str(rest))
    fail = RootLocationFailure
    _require(rep, fail, "quadratic roots < -1/2",
             quad(HALF) != 0 and count_distinct_roots_in(quad, HALF, INF) == 0)
    # x2 = -(r+1) + sqrt(r^2+r) < -1/2  <=>  4(r^2+r) < (2r+1)^2
    _require(rep, fail, "x2 < -1/2 by squaring", 4 * (r * r + r) < (2 * r + 1) ** 2)
    _require(rep, fail, "P_H(-1/2) = -(4r+1)/16", ph(HALF) == Fraction(-(4 * r + 1), 16))
    _require(rep, fail, "P_H(0) = -(16r+6)", ph(0) == -(16 * r + 6))
    _require(rep, fail, "P_H'(-1/2) = -21r-21/4",
             derivative(ph)(HALF) == -21 * r - Fraction(21, 4))
    _require(rep, fail, "descartes(P_H) = 1", descartes_sign_changes(ph) == 1)
    _require(rep, fail, "P_H'' < 0 on [-1/2, 0]",
             _negative_on(derivative(derivative(ph)), HALF, 0))
    _require(rep, fail, "P_H has no root in [-1/2, 0]",
             ph(HALF) != 0 and count_distinct_roots_in(ph, HALF, 0) == 0)
    _require(rep, fail, "exactly one positive root", count_distinct_roots_in(ph, 0, INF) == 1)
    return rep


def _negative_on(poly, a, b):
    return sign(poly(a)) < 0 and sign(poly(b)) < 0 and count_distinct_roots_in(poly, a, b) == 0


def verify_factorization_p3(spec: RelaxedBlockStarSpec) -> Report:
    _need(spec.s >= 2, "P3 factor needs s >= 2")
    rep = Report("factorization_p3", (spec.cliques, spec.q, spec.s))
    pg = distance_charpoly(relaxed_block_star(spec))
    _peel(rep, pg, P3_FACTOR, spec.s - 1, "(x^2+4x+2)")
    _require(rep, RootLocationFailure, "roots of x^2+4x+2 < -1/2",
             P3_FACTOR(HALF) != 0 and count_distinct_roots_in(P3_FACTOR, HALF, INF) == 0)
    return rep


def verify_divisor_main(r: int, p: int, q: int) -> Report:
    rep = Report("divisor_main", (r, p, q))
    g = g_rpq(r, p, q)
    b = divisor_matrix(g, g_rpq_partition(r, p, q))
    _require(rep, FactorizationMismatch, "divisor matrix = F_pi", b.matrix == F_pi_matrix(r, p, q))
    _, rem = divmod_poly(distance_charpoly(g), f_polynomial(r, p, q))
    _require(rep, FactorizationMismatch, "f divides P_G", rem.is_zero())
    return rep


# recognizers -------------------------------------------------------------------------------

def _is_clique_graph(h: Graph) -> bool:
    return h.m == h.n * (h.n - 1) // 2


_P3 = path(3)


def _component_masks(g: Graph, alive: int):
    out = []
    rest = alive
    while rest:
        start = rest & -rest
        seen = frontier = start
        while frontier:
            nxt = 0
            x = frontier
            while x:
                low = x & -x
                nxt |= g.adj[low.bit_length() - 1]
                x ^= low
            frontier = nxt & alive & ~seen
            seen |= frontier
        out.append(seen)
        rest &= ~seen
    return out


def _is_rbs_component(h: Graph) -> bool:
    if _is_clique_graph(h):
        return True
    if h.n == 3:
        return True  # connected, not a triangle: P3
    if h.n == 4 and h.m == 4:
        degs = sorted(h.degrees())
        return degs == [1, 2, 2, 3]
    return False


def relaxed_block_star_center(g: Graph):
    """A universal vertex v with every component of g - v a clique, P3 or paw; else None."""
    for v in universal_vertices(g):
        alive = g.vertex_mask & ~(1 << v)
        comps = _component_masks(g, alive)
        if all(_is_rbs_component(induced_subgraph(g, _mask_bits(c))) for c in comps):
            return v
    return None


def _mask_bits(m):
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def is_relaxed_block_star_subgraph(g: Graph) -> bool:
    return relaxed_block_star_center(g) is not None


def relaxed_block_star_oracle_host(n: int) -> Graph:
    """Host containing every relaxed-block-star subgraph on n vertices."""
    k = max(n - 1, 1)
    return relaxed_block_star(RelaxedBlockStarSpec(((k, k),), k, 0))


def pt1_embedding(g: Graph):
    return find_induced_embedding(g, pt1())


def pt2_host(n: int) -> Graph:
    k = max(n, 2)
    return _pt2(k, k)


def pt2_embedding(g: Graph):
    return find_induced_embedding(g, pt2_host(g.n))


def bg322_host(n: int) -> Graph:
    k = max(n, 2)
    return bg322(k, k)


def bg322_embedding(g: Graph):
    return find_induced_embedding(g, bg322_host(g.n))


def bga_embedding(g: Graph):
    return find_induced_embedding(g, bga())


def is_pt1_subgraph(g: Graph) -> bool:
    return pt1_embedding(g) is not None


def is_pt2_subgraph(g: Graph) -> bool:
    return pt2_embedding(g) is not None


def is_bg322_subgraph(g: Graph) -> bool:
    return g.n >= 2 and bg322_embedding(g) is not None


def is_bga_subgraph(g: Graph) -> bool:
    return g.n >= 2 and bga_embedding(g) is not None


def block_star_center(g: Graph):
    """A vertex lying in every block of a block graph, or None."""
    if not is_block_graph(g):
        return None
    common = g.vertex_mask
    for b in blocks(g).blocks:
        common &= sum(1 << v for v in b)
    return (common & -common).bit_length() - 1 if common else None


def is_block_star(g: Graph) -> bool:
    return block_star_center(g) is not None


def is_loose_block_graph(g: Graph) -> bool:
    return is_block_graph(g) and all(m == 1 for _, m in minimal_vertex_separators(g).entries)


def _split_block_clauses(g: Graph) -> bool:
    if not is_block_graph(g):
        return False
    mult = sorted(m for _, m in minimal_vertex_separators(g).entries)
    if len(mult) <= 1:
        return True
    if len(mult) == 2 and mult[0] == 1 and mult[1] <= 2:
        return True
    return all(m == 1 for m in mult)


def split_satisfies(g: Graph) -> bool:
    """Split graphs with lambda_2 < -1/2: induced in SP1 or some SP^t, or a
    block graph with at most one separator, two separators of multiplicities
    1 and at most 2, or all multiplicities 1."""
    if not is_split(g):
        return False
    if find_induced_embedding(g, sp1()) is not None:
        return True
    if find_induced_embedding(g, sp_t(g.n)) is not None:
        return True
    return _split_block_clauses(g)


__all__ = [
    "FAMILY_NAMES",
    "FCoefficients",
    "F_pi_matrix",
    "FactorizationMismatch",
    "FamilyError",
    "H_pi_matrix",
    "RelaxedBlockStarSpec",
    "Report",
    "RootLocationFailure",
    "SturmProofFailure",
    "bg322",
    "block_star",
    "f_coefficients",
    "f_polynomial",
    "forbidden",
    "g_rpq",
    "g_rpq_partition",
    "is_bg322_subgraph",
    "is_bga_subgraph",
    "is_block_star",
    "is_loose_block_graph",
    "is_pt1_subgraph",
    "is_pt2_subgraph",
    "is_relaxed_block_star_subgraph",
    "load_fixture",
    "make_family",
    "pt2",
    "pt2_partition",
    "relaxed_block_star",
    "sp_t",
    "split_satisfies",
    "verify_divisor_main",
    "verify_factorization_main",
    "verify_factorization_p3",
    "verify_factorization_pt2",
    "verify_sturm_proof_main",
]
