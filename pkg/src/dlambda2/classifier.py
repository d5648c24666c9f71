"""Structural decision procedure for lambda_2 < -1/2 with checkable
certificates, plus cross-validation against the exact spectral test."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from multiprocessing import get_context

from . import families as fam
from .chordal import (
    blocks,
    chordless_cycle,
    is_block_graph,
    is_chordless_cycle,
    is_clique_mask,
    minimal_vertex_separators,
)
from .graph import (
    DisconnectedGraph,
    Graph,
    are_isomorphic,
    bfs_distances,
    enumerate_connected,
    find_induced_embedding,
    induced_subgraph,
    is_connected,
    is_induced_embedding,
    to_graph6,
)
from .spectral import decide_lambda2_lt_neg_half_exact, lambda2


class Verdict(str, enum.Enum):
    SATISFIES = "Satisfies"
    VIOLATES = "Violates"


class Reason(str, enum.Enum):
    TRIVIAL_K1 = "TrivialK1"
    NOT_CHORDAL = "NotChordal"
    MVS_CARD3 = "MvsCard3"
    MVS_CARD2_MULT2 = "MvsCard2Mult2"
    DIAMETER_OVER3 = "DiameterOver3"
    FORBIDDEN_SUBGRAPH = "ForbiddenSubgraph"
    BLOCK_STAR = "BlockStar"
    LOOSE_BLOCK_GRAPH = "LooseBlockGraph"
    BG322_SUBGRAPH = "BG322Subgraph"
    BGA_SUBGRAPH = "BGASubgraph"
    RELAXED_BLOCK_STAR_SUBGRAPH = "RelaxedBlockStarSubgraph"
    PT1_SUBGRAPH = "Pt1Subgraph"
    PT2_SUBGRAPH = "Pt2Subgraph"
    FAMILY_NON_MEMBERSHIP = "FamilyNonMembership"


# catalog order: F1..F13, then the gem and the K5-minus-an-edge graph
CATALOG_NAMES = tuple(f"F{i}" for i in range(1, 14)) + ("gem", "mvs3a")


@lru_cache(maxsize=1)
def catalog() -> tuple[Graph, ...]:
    return tuple(fam.forbidden(i) for i in range(1, 14)) + (fam.gem(), fam.mvs3a())


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: Reason
    certificate: dict = field(default_factory=dict)

    @property
    def satisfies(self) -> bool:
        return self.verdict is Verdict.SATISFIES

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason.value,
                "certificate": _jsonable(self.certificate)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _sat(reason, **cert):
    return Classification(Verdict.SATISFIES, reason, cert)


def _vio(reason, **cert):
    return Classification(Verdict.VIOLATES, reason, cert)


def find_forbidden_subgraph(g: Graph):
    """First catalog member embedded in g as ``(index, image)``; index is 1-based."""
    for idx, h in enumerate(catalog(), start=1):
        if h.n <= g.n:
            image = find_induced_embedding(h, g)
            if image is not None:
                return idx, image
    return None


def _catalog_or_nonmember(g: Graph, host: str):
    hit = find_forbidden_subgraph(g)
    if hit is not None:
        idx, image = hit
        return _vio(Reason.FORBIDDEN_SUBGRAPH, index=idx, name=CATALOG_NAMES[idx - 1],
                    embedding=list(image))
    return _vio(Reason.FAMILY_NON_MEMBERSHIP, host=host)


def _classify_block_graph(g: Graph, mvs) -> Classification:
    center = fam.block_star_center(g)
    if center is not None:
        return _sat(Reason.BLOCK_STAR, center=center)
    if all(m == 1 for _, m in mvs.entries):
        return _sat(Reason.LOOSE_BLOCK_GRAPH, separators=[list(s) for s, _ in mvs.entries])
    image = fam.bg322_embedding(g)
    if image is not None:
        k = max(g.n, 2)
        return _sat(Reason.BG322_SUBGRAPH, host=["bg322", k, k], embedding=list(image))
    image = fam.bga_embedding(g)
    if image is not None:
        return _sat(Reason.BGA_SUBGRAPH, host=["bga"], embedding=list(image))
    return _catalog_or_nonmember(g, "block graph families")


def classify_structural(g: Graph) -> Classification:
    """Decide lambda_2 < -1/2 from structure alone, with a certificate."""
    if g.n == 1:
        return _sat(Reason.TRIVIAL_K1, trivial=True)
    if not is_connected(g):
        raise DisconnectedGraph("classification needs a connected graph")
    cycle = chordless_cycle(g)
    if cycle is not None:
        return _vio(Reason.NOT_CHORDAL, cycle=cycle)
    mvs = minimal_vertex_separators(g)
    if mvs.max_size() <= 1:
        # connected chordal with every mvs a single vertex: a block graph
        return _classify_block_graph(g, mvs)
    for s, m in mvs.entries:
        if len(s) >= 3:
            return _vio(Reason.MVS_CARD3, separator=list(s), multiplicity=m)
    for s, m in mvs.entries:
        if len(s) == 2 and m >= 2:
            return _vio(Reason.MVS_CARD2_MULT2, separator=list(s), multiplicity=m)
    d = bfs_distances(g)
    diam = max(max(row) for row in d)
    if diam >= 4:
        u, v = next((u, v) for u in range(g.n) for v in range(g.n) if d[u][v] == diam)
        sep = next(list(s) for s, _ in mvs.entries if len(s) == 2)
        return _vio(Reason.DIAMETER_OVER3, pair=[u, v], distance=diam, separator=sep)
    if diam == 2:
        center = fam.relaxed_block_star_center(g)
        if center is not None:
            return _sat(Reason.RELAXED_BLOCK_STAR_SUBGRAPH, center=center)
        return _catalog_or_nonmember(g, "relaxed block star")
    image = fam.pt2_embedding(g)
    if image is not None:
        k = max(g.n, 2)
        return _sat(Reason.PT2_SUBGRAPH, host=["pt2", k, k], embedding=list(image))
    image = fam.pt1_embedding(g)
    if image is not None:
        return _sat(Reason.PT1_SUBGRAPH, host=["pt1"], embedding=list(image))
    return _catalog_or_nonmember(g, "Pt1 / Pt2")


# certificate checks -------------------------------------------------------------------

def _full_components(g: Graph, sep):
    """Components of g - sep in which every separator vertex has a neighbour."""
    sm = sum(1 << v for v in sep)
    alive = g.vertex_mask & ~sm
    out = []
    for comp in fam._component_masks(g, alive):
        if all(g.adj[v] & comp for v in sep):
            out.append(comp)
    return out


def separator_multiplicity(g: Graph, sep) -> int:
    """For a clique separator of a chordal graph: (#full components) - 1."""
    return len(_full_components(g, sep)) - 1


def _host(spec):
    name = spec[0]
    if name == "bg322":
        return fam.bg322(spec[1], spec[2])
    if name == "pt2":
        return fam._pt2(spec[1], spec[2])
    return fam.make_family(name)


def validate_certificate(g: Graph, c: Classification) -> bool:
    """Re-check a certificate without re-running the decision procedure."""
    cert = c.certificate
    r = c.reason
    if r is Reason.TRIVIAL_K1:
        return g.n == 1
    if r is Reason.NOT_CHORDAL:
        return is_chordless_cycle(g, cert["cycle"])
    if r is Reason.FORBIDDEN_SUBGRAPH:
        h = catalog()[cert["index"] - 1]
        image = cert["embedding"]
        return (is_induced_embedding(h, g, image)
                and are_isomorphic(induced_subgraph(g, image), h))
    if r in (Reason.MVS_CARD3, Reason.MVS_CARD2_MULT2):
        sep = cert["separator"]
        m = separator_multiplicity(g, sep)
        size_ok = len(sep) >= 3 if r is Reason.MVS_CARD3 else (len(sep) == 2 and m >= 2)
        return (is_clique_mask(g, sum(1 << v for v in sep)) and m >= 1
                and m == cert["multiplicity"] and size_ok)
    if r is Reason.DIAMETER_OVER3:
        u, v = cert["pair"]
        sep = cert["separator"]
        return (bfs_distances(g)[u][v] >= 4 and len(sep) == 2
                and g.has_edge(*sep) and separator_multiplicity(g, sep) >= 1)
    if r is Reason.BLOCK_STAR:
        v = cert["center"]
        return is_block_graph(g) and all(v in b for b in blocks(g).blocks)
    if r is Reason.LOOSE_BLOCK_GRAPH:
        return is_block_graph(g) and all(
            separator_multiplicity(g, [v]) <= 1 for v in range(g.n))
    if r in (Reason.BG322_SUBGRAPH, Reason.BGA_SUBGRAPH, Reason.PT1_SUBGRAPH, Reason.PT2_SUBGRAPH):
        return is_induced_embedding(g, _host(cert["host"]), cert["embedding"])
    if r is Reason.RELAXED_BLOCK_STAR_SUBGRAPH:
        v = cert["center"]
        if g.adj[v] | (1 << v) != g.vertex_mask:
            return False
        alive = g.vertex_mask & ~(1 << v)
        return all(fam._is_rbs_component(induced_subgraph(g, fam._mask_bits(m)))
                   for m in fam._component_masks(g, alive))
    if r is Reason.FAMILY_NON_MEMBERSHIP:
        # no isolated witness exists; re-run the recognizers
        return classify_structural(g).reason is Reason.FAMILY_NON_MEMBERSHIP
    return False


# cross validation -------------------------------------------------------------------------

@dataclass(frozen=True)
class Agreement:
    graph6: str
    structural: bool
    exact: bool
    lambda2: float | None
    classification: Classification

    @property
    def agree(self) -> bool:
        return self.structural == self.exact


def cross_validate(g: Graph, with_float: bool = True) -> Agreement:
    if g.n < 2:
        raise ValueError("cross validation needs at least 2 vertices")
    c = classify_structural(g)
    exact = decide_lambda2_lt_neg_half_exact(g)
    lam = lambda2(g) if with_float else None
    return Agreement(to_graph6(g), c.satisfies, exact, lam, c)


@dataclass
class EnumerationSummary:
    counts: dict = field(default_factory=dict)  # n -> {"Satisfies": k, "Violates": k}
    reasons: dict = field(default_factory=dict)  # reason -> count
    disagreements: list = field(default_factory=list)  # graph6 strings
    bad_certificates: list = field(default_factory=list)
    total: int = 0

    def merge(self, other: "EnumerationSummary"):
        for n, c in other.counts.items():
            mine = self.counts.setdefault(n, {"Satisfies": 0, "Violates": 0})
            for k, v in c.items():
                mine[k] += v
        for k, v in other.reasons.items():
            self.reasons[k] = self.reasons.get(k, 0) + v
        self.disagreements += other.disagreements
        self.bad_certificates += other.bad_certificates
        self.total += other.total

    def finalize(self):
        self.counts = dict(sorted(self.counts.items()))
        self.reasons = dict(sorted(self.reasons.items()))
        self.disagreements.sort()
        self.bad_certificates.sort()
        return self

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.bad_certificates


def _run_chunk(args):
    n, canonical, lo, hi, validate = args
    out = EnumerationSummary()
    for g in enumerate_connected(n, canonical=canonical, lo=lo, hi=hi):
        c = classify_structural(g)
        exact = decide_lambda2_lt_neg_half_exact(g)
        counts = out.counts.setdefault(n, {"Satisfies": 0, "Violates": 0})
        counts[c.verdict.value] += 1
        out.reasons[c.reason.value] = out.reasons.get(c.reason.value, 0) + 1
        out.total += 1
        if c.satisfies != exact:
            out.disagreements.append(to_graph6(g))
        if validate and not validate_certificate(g, c):
            out.bad_certificates.append(to_graph6(g))
    return out


def run_enumeration(max_n: int, jobs: int = 1, canonical: bool = False,
                    validate: bool = True, min_n: int = 2) -> EnumerationSummary:
    """Classify every connected graph on min_n..max_n vertices and compare verdicts."""
    tasks = []
    for n in range(min_n, max_n + 1):
        if canonical:
            tasks.append((n, True, 0, None, validate))
            continue
        top = 1 << (n * (n - 1) // 2)
        parts = max(1, min(jobs * 4, top // 4096)) if jobs > 1 else 1
        step = -(-top // parts)
        tasks += [(n, False, lo, min(lo + step, top), validate) for lo in range(0, top, step)]
    summary = EnumerationSummary()
    if jobs > 1:
        with get_context("fork").Pool(jobs) as pool:
            for part in pool.imap_unordered(_run_chunk, tasks):
                summary.merge(part)
    else:
        for t in tasks:
            summary.merge(_run_chunk(t))
    return summary.finalize()


__all__ = [
    "Agreement",
    "CATALOG_NAMES",
    "Classification",
    "EnumerationSummary",
    "Reason",
    "Verdict",
    "catalog",
    "classify_structural",
    "cross_validate",
    "find_forbidden_subgraph",
    "run_enumeration",
    "separator_multiplicity",
    "validate_certificate",
]
