"""Command-line front end.

Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from . import families as fam
from ._core import BACKEND
from .chordal import (
    is_block_graph,
    is_chordal,
    is_ptolemaic,
    is_split,
    minimal_vertex_separators,
)
from .classifier import classify_structural, run_enumeration
from .graph import (
    DisconnectedGraph,
    GraphError,
    diameter,
    is_connected,
    parse_edge_lists,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .spectral import (
    DEFAULT_TOL,
    decide_lambda2_lt_neg_half_exact,
    distance_charpoly,
    distance_spectrum,
)

SCHEMA = 1
BOUNDARY = 1e-6

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# input -------------------------------------------------------------------------------------

def _read_sources(paths):
    if not paths or paths == ["-"]:
        return [("<stdin>", sys.stdin.read())]
    out = []
    for p in paths:
        try:
            with open(p, encoding="ascii") as fh:
                out.append((p, fh.read()))
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"{p}: {e}") from e
    return out


def read_graphs(paths, fmt):
    """(identifier, graph) pairs from files or stdin."""
    graphs = []
    for name, text in _read_sources(paths):
        try:
            if fmt == "edges":
                for k, g in enumerate(parse_edge_lists(text), start=1):
                    graphs.append((f"{name}#{k}", g))
            else:
                for k, line in enumerate(text.splitlines(), start=1):
                    line = line.strip()
                    if line and not line.startswith("#"):
                        graphs.append((f"{name}:{k}", parse_graph6(line)))
        except GraphError as e:
            raise InputError(f"{name}: {e}") from e
    if not graphs:
        raise InputError("no graphs in input")
    return graphs


# reports -------------------------------------------------------------------------------------

def build_report(ident, g, tol=DEFAULT_TOL, timings=False):
    if not is_connected(g):
        raise DisconnectedGraph(f"{ident}: graph is not connected")
    t0 = time.perf_counter()
    chordal = is_chordal(g)
    rep = {
        "input": ident,
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "diameter": diameter(g),
        "chordal": chordal,
        "ptolemaic": is_ptolemaic(g),
        "split": is_split(g),
        "block_graph": is_block_graph(g),
        "mvs": minimal_vertex_separators(g).summary() if chordal else None,
    }
    t1 = time.perf_counter()
    rep["classification"] = classify_structural(g).to_dict()
    t2 = time.perf_counter()
    rep["exact"] = None
    rep["lambda2"] = None
    rep["boundary"] = False
    if g.n >= 2:
        rep["exact"] = decide_lambda2_lt_neg_half_exact(g)
        t3 = time.perf_counter()
        lam = distance_spectrum(g, tol).lambda2
        rep["lambda2"] = lam
        rep["boundary"] = abs(lam + 0.5) < BOUNDARY
        t4 = time.perf_counter()
    else:
        t3 = t4 = t2
    rep["agree"] = rep["exact"] is None or rep["exact"] == (
        rep["classification"]["verdict"] == "Satisfies")
    rep["timings"] = None
    if timings:
        rep["timings"] = {"structure": t1 - t0, "classify": t2 - t1,
                          "exact": t3 - t2, "float": t4 - t3}
    return rep


def _print_report(rep, out):
    c = rep["classification"]
    lines = [
        f"input: {rep['input']}",
        f"graph6: {rep['graph6']}",
        f"n={rep['n']} m={rep['m']} diameter={rep['diameter']}",
        "flags: " + " ".join(f"{k}={'yes' if rep[k] else 'no'}"
                             for k in ("chordal", "ptolemaic", "split", "block_graph")),
    ]
    if rep["mvs"] is not None:
        mvs = ", ".join(f"{k}:{v}" for k, v in rep["mvs"].items()) or "none"
        lines.append(f"mvs (size x multiplicity: count): {mvs}")
    lines.append(f"structural: {c['verdict']} ({c['reason']}) {json.dumps(c['certificate'])}")
    if rep["exact"] is not None:
        lines.append(f"exact: {'Satisfies' if rep['exact'] else 'Violates'}")
        tag = " (boundary)" if rep["boundary"] else ""
        lines.append(f"lambda2: {rep['lambda2']:.8f}{tag}")
    if not rep["agree"]:
        lines.append("DISAGREEMENT between structural and exact verdicts")
    if rep["timings"]:
        lines.append("timings: " + " ".join(f"{k}={v * 1e3:.2f}ms" for k, v in rep["timings"].items()))
    print("\n".join(lines), file=out)


def _emit(payload, args, human):
    if args.json:
        print(json.dumps(dict(schema=SCHEMA, **payload), indent=2, sort_keys=True))
    else:
        human(sys.stdout)


# commands ----------------------------------------------------------------------------------

def cmd_check(args):
    reports = [build_report(i, g, args.tol, args.timings) for i, g in read_graphs(args.files, args.format)]

    def human(out):
        for k, r in enumerate(reports):
            if k:
                print(file=out)
            _print_report(r, out)

    _emit({"command": "check", "reports": reports}, args, human)
    return EXIT_OK if all(r["agree"] for r in reports) else EXIT_FAIL


def cmd_spectrum(args):
    items = []
    for ident, g in read_graphs(args.files, args.format):
        if not is_connected(g):
            raise DisconnectedGraph(f"{ident}: graph is not connected")
        p = distance_charpoly(g)
        items.append({
            "input": ident,
            "graph6": to_graph6(g),
            "eigenvalues": list(distance_spectrum(g, args.tol).values),
            "charpoly": [int(c) for c in reversed(p.coeffs)],
        })

    def human(out):
        for it in items:
            print(f"{it['input']} {it['graph6']}", file=out)
            print("eigenvalues: " + " ".join(f"{v:.8f}" for v in it["eigenvalues"]), file=out)
            print("charpoly (highest degree first): " + " ".join(map(str, it["charpoly"])), file=out)

    _emit({"command": "spectrum", "spectra": items}, args, human)
    return EXIT_OK


def cmd_family(args):
    g = fam.make_family(args.name, args.params)
    if args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        print(to_graph6(g))
    return EXIT_OK


def cmd_enumerate(args):
    if not 2 <= args.max_n <= 7:
        raise InputError("--max-n must be between 2 and 7")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    t0 = time.perf_counter()
    s = run_enumeration(args.max_n, jobs=args.jobs, canonical=args.canonical,
                        validate=not args.no_validate)
    elapsed = time.perf_counter() - t0
    payload = {
        "command": "enumerate",
        "max_n": args.max_n,
        "canonical": args.canonical,
        "total": s.total,
        "counts": {str(n): c for n, c in s.counts.items()},
        "reasons": s.reasons,
        "disagreements": s.disagreements,
        "bad_certificates": s.bad_certificates,
        "ok": s.ok,
        "seconds": elapsed if args.timings else None,
    }

    def human(out):
        kind = "canonical" if args.canonical else "labeled"
        print(f"{kind} connected graphs, n = 2..{args.max_n}: {s.total}", file=out)
        for n, c in s.counts.items():
            print(f"  n={n}: Satisfies={c['Satisfies']} Violates={c['Violates']}", file=out)
        for r, k in s.reasons.items():
            print(f"  {r}: {k}", file=out)
        print(f"disagreements: {len(s.disagreements)}", file=out)
        for x in s.disagreements:
            print(f"  {x}", file=out)
        print(f"invalid certificates: {len(s.bad_certificates)}", file=out)
        for x in s.bad_certificates:
            print(f"  {x}", file=out)
        if args.timings:
            print(f"elapsed: {elapsed:.1f}s", file=out)

    _emit(payload, args, human)
    return EXIT_OK if s.ok else EXIT_FAIL


def _theorem_runs(args):
    rng = lambda hi: range(1, hi + 1)
    for r in rng(args.max_r):
        for p in rng(args.max_p):
            for q in rng(args.max_q):
                yield lambda r=r, p=p, q=q: fam.verify_factorization_main(r, p, q)
                yield lambda r=r, p=p, q=q: fam.verify_sturm_proof_main(r, p, q)
                yield lambda r=r, p=p, q=q: fam.verify_divisor_main(r, p, q)
    for r in range(2, args.max_pt2 + 1):
        yield lambda r=r: fam.verify_factorization_pt2(r)
    for s in range(2, args.max_s + 1):
        for cliques in ((), ((1, 3), (2, 2))):
            for q in (0, 1):
                spec = fam.RelaxedBlockStarSpec(cliques, q, s)
                yield lambda spec=spec: fam.verify_factorization_p3(spec)


def cmd_verify_theorems(args):
    for name in ("max_r", "max_p", "max_q", "max_s"):
        if getattr(args, name) < 1:
            raise InputError(f"--{name.replace('_', '-')} must be at least 1")
    if args.max_pt2 < 2:
        raise InputError("--max-pt2 must be at least 2")
    rows = []
    for run in _theorem_runs(args):
        try:
            rep = run()
            rows.append({"name": rep.name, "params": repr(rep.params), "ok": rep.ok,
                         "checks": len(rep.checks),
                         "failed": [c[0] for c in rep.checks if not c[1]]})
        except fam.VerificationFailure as e:
            rows.append({"name": type(e).__name__, "params": "", "ok": False,
                         "checks": 0, "failed": [str(e)]})
    ok = all(r["ok"] for r in rows)

    def human(out):
        for r in rows:
            status = "pass" if r["ok"] else "FAIL"
            extra = "" if r["ok"] else "  " + "; ".join(r["failed"])
            print(f"{status}  {r['name']:<20} {r['params']:<32} {r['checks']} checks{extra}", file=out)
        print(f"{sum(r['ok'] for r in rows)}/{len(rows)} passed", file=out)

    _emit({"command": "verify-theorems", "results": rows, "ok": ok}, args, human)
    return EXIT_OK if ok else EXIT_FAIL


# argument parsing ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document (schema 1)")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("files", nargs="*", help="input files (default: standard input)")
    graph_in.add_argument("--format", choices=("graph6", "edges"), default="graph6",
                          help="input format (default: graph6, one graph per line)")
    graph_in.add_argument("--tol", type=float, default=DEFAULT_TOL,
                          help=f"Jacobi tolerance for the float path (default: {DEFAULT_TOL})")

    ap = argparse.ArgumentParser(
        prog="dlambda2",
        description="Decide whether the second largest distance eigenvalue is below -1/2.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common, graph_in],
                       help="structural and exact verdicts for each input graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spectrum", parents=[common, graph_in],
                       help="distance eigenvalues and exact characteristic polynomial")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("family", help="print a named graph",
                       description="Families: " + ", ".join(fam.FAMILY_NAMES))
    p.add_argument("name", choices=fam.FAMILY_NAMES, metavar="name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=("graph6", "edges"), default="graph6",
                   help="output format (default: graph6)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", parents=[common],
                       help="cross-validate every connected graph up to --max-n vertices")
    p.add_argument("--max-n", type=int, default=6, help="largest order (default: 6)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    p.add_argument("--canonical", action="store_true",
                   help="one graph per isomorphism class instead of all labeled graphs")
    p.add_argument("--no-validate", action="store_true", help="skip certificate re-validation")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-theorems", parents=[common],
                       help="exact factorization and root-location checks over a parameter grid")
    p.add_argument("--max-r", type=int, default=3, help="largest r (default: 3)")
    p.add_argument("--max-p", type=int, default=3, help="largest p (default: 3)")
    p.add_argument("--max-q", type=int, default=3, help="largest q (default: 3)")
    p.add_argument("--max-pt2", type=int, default=8, help="largest r for the triple block (default: 8)")
    p.add_argument("--max-s", type=int, default=4, help="largest number of P3 blocks (default: 4)")
    p.set_defaults(func=cmd_verify_theorems)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DisconnectedGraph as e:
        print(f"error: DisconnectedGraph: {e}", file=sys.stderr)
    except (InputError, GraphError, fam.FamilyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
