"""Command line front end.

Verbs: construct (named families), check (pattern containment in a file),
search (extremal boundary values), verify (registered claims with
certificates), multigraph (layer-multigraph tools).  Exit codes: 0 pass or
found, 1 fail or not found, 2 bad usage or malformed input, 3 a request
beyond configured capability limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .errors import CapabilityError, FormatError, ParameterError, VerificationError
from .fano import (
    DetectionMethod,
    contains_fano,
    find_clique,
    find_fano_crossing,
    find_fano_embedding,
    find_fano_pasch,
    embedding_edges,
)
from .hypergraph import Hypergraph, construct, format_text, from_json_dict, parse_text, to_json_dict
from .multigraph import (
    PMultigraph,
    extremal_4multigraph,
    f4_formula,
    f5_lower_constructions,
    has_three_crossing_pairs,
    max_edges_no_crossing,
)
from .search import CLAIM_ORDER, LONG_RUN_CLAIMS, max_fano_free_edges, run_claim

_FAMILIES = ("complete", "balanced_bipartite", "j7", "fano", "pasch")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_hypergraph(path: str) -> Hypergraph:
    text = _read_input(path)
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return from_json_dict(obj)
    return parse_text(text)


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _cmd_construct(args: argparse.Namespace) -> int:
    h = construct(args.family, args.n)
    if args.format == "json":
        out = json.dumps(to_json_dict(h), indent=2)
    else:
        out = format_text(h)
    _write_output(out, args.output)
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _check_fano(h: Hypergraph, method: str):
    if method == "embedding":
        images = find_fano_embedding(h)
        return (images is not None), (list(map(list, embedding_edges(images))) if images else None)
    if method == "crossing_pairs":
        w = find_fano_crossing(h)
        return (w is not None), (list(map(list, w.fano_edges())) if w else None)
    if method == "pasch_matching":
        w = find_fano_pasch(h)
        return (w is not None), (list(map(list, w.fano_edges())) if w else None)
    raise ParameterError(f"unknown method {method!r}")


def _cmd_check(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.file)
    pattern = args.pattern
    results: dict[str, dict] = {}
    if pattern == "fano":
        methods = (
            ("embedding", "crossing_pairs", "pasch_matching")
            if args.method == "all"
            else (args.method,)
        )
        verdicts = set()
        for m in methods:
            found, witness = _check_fano(h, m)
            verdicts.add(found)
            results[m] = {"found": found, "witness": witness}
        if len(verdicts) != 1:
            print("error: detection methods disagree", file=sys.stderr)
            print(json.dumps(results, indent=2), file=sys.stderr)
            return 1
        found = verdicts.pop()
    else:
        k = int(pattern[1])
        clique = find_clique(h, k)
        found = clique is not None
        results[pattern] = {"found": found, "witness": list(clique) if clique else None}
    payload = {"pattern": pattern, "n": h.n, "edges": h.edge_count, "found": found,
               "methods": results}
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"pattern={pattern} found={str(found).lower()}")
        for name, res in results.items():
            print(f"  {name}: {res['witness'] if res['found'] else 'no witness'}")
    return 0 if found else 1


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _cmd_search(args: argparse.Namespace) -> int:
    value, classes = max_fano_free_edges(args.n, long_run=args.long_run)
    payload = {
        "n": args.n,
        "max_edges": value,
        "extremal_classes": [to_json_dict(f.to_hypergraph()) for f in classes],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"n={args.n} max_edges={value} classes={len(classes)}")
        for f in classes:
            print(format_text(f.to_hypergraph()).rstrip())
            print()
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def emit_report(certs: list[dict], fmt: str) -> str:
    """Render a list of certificate dicts as a text table or JSON array."""
    if fmt == "json":
        return json.dumps(certs, indent=2)
    if not certs:
        return "no claims run"
    lines = [f"{'claim':<16} {'verdict':<8} {'space':>12} {'visited':>12} {'elapsed':>10}"]
    for c in certs:
        lines.append(
            f"{c['claim']:<16} {c['verdict']:<8} {c['space']:>12} {c['visited']:>12}"
            f" {c['elapsed_ms']:>8}ms"
        )
        if c["verdict"] == "fail":
            lines.append(f"  witness: {json.dumps(c['witnesses'][0])}")
    npass = sum(1 for c in certs if c["verdict"] == "pass")
    lines.append(f"summary: {npass} passed, {len(certs) - npass} failed")
    return "\n".join(lines)


def _verify_worker(payload: tuple) -> tuple[str, object]:
    claim, seed, long_run, checkpoint = payload
    try:
        cert = run_claim(claim, seed=seed, long_run=long_run, checkpoint_path=checkpoint)
        return ("ok", cert.to_json_dict())
    except VerificationError as exc:
        return ("fail", exc.certificate.to_json_dict())
    except CapabilityError as exc:
        return ("capability", f"{claim}: {exc}")


def _cmd_verify(args: argparse.Namespace) -> int:
    requested: list[str] = []
    for name in args.claims:
        if name == "all":
            requested.extend(
                c for c in CLAIM_ORDER if args.long_run or c not in LONG_RUN_CLAIMS
            )
        elif name in CLAIM_ORDER:
            requested.append(name)
        else:
            print(
                f"error: unknown claim {name!r}; valid ids: {', '.join(CLAIM_ORDER)} (or all)",
                file=sys.stderr,
            )
            return 2
    seen = set()
    claims = [c for c in requested if not (c in seen or seen.add(c))]
    if not claims:
        print("error: no claims requested", file=sys.stderr)
        return 2

    jobs = args.jobs if args.jobs is not None else int(os.environ.get("FANOTURAN_JOBS", "1"))
    if jobs < 1:
        raise ParameterError(f"jobs must be at least 1, got {jobs}")
    payloads = [
        (c, args.seed, args.long_run, args.checkpoint if c == "ex-8" else None) for c in claims
    ]
    if jobs == 1 or len(claims) == 1:
        outcomes = [_verify_worker(p) for p in payloads]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(claims))) as pool:
            outcomes = list(pool.map(_verify_worker, payloads))

    certs: list[dict] = []
    for status, data in outcomes:
        if status == "capability":
            print(f"capability: {data}", file=sys.stderr)
            return 3
        certs.append(data)  # type: ignore[arg-type]
    print(emit_report(certs, args.format))
    return 0 if all(c["verdict"] == "pass" for c in certs) else 1


# ---------------------------------------------------------------------------
# multigraph
# ---------------------------------------------------------------------------

def _print_multigraph(g: PMultigraph, fmt: str, extra: dict | None = None) -> None:
    payload = dict(extra or {})
    payload["multigraph"] = g.to_json_dict()
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for k, v in payload.items():
            if k != "multigraph":
                print(f"{k}={v}")
        print(json.dumps(payload["multigraph"]))


def _cmd_multigraph(args: argparse.Namespace) -> int:
    if args.action == "extremal4":
        g = extremal_4multigraph(args.n)
        _print_multigraph(g, args.format, {"edge_total": g.edge_total(), "formula": f4_formula(args.n)})
        return 0
    if args.action == "constructions":
        (g1, t1), (g2, t2) = f5_lower_constructions(args.n)
        payload = {
            "n": args.n,
            "constructions": [
                {"total": t1, "multigraph": g1.to_json_dict()},
                {"total": t2, "multigraph": g2.to_json_dict()},
            ],
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(f"n={args.n} totals=({t1}, {t2})")
            print(json.dumps(payload["constructions"][0]["multigraph"]))
            print(json.dumps(payload["constructions"][1]["multigraph"]))
        return 0
    if args.action == "search":
        value, g = max_edges_no_crossing(
            args.p, args.n, node_budget=args.node_budget, long_run=args.long_run
        )
        _print_multigraph(g, args.format, {"p": args.p, "n": args.n, "max_edges": value})
        return 0
    if args.action == "check":
        text = _read_input(args.file)
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        g = PMultigraph.from_json_dict(obj)
        w = has_three_crossing_pairs(g)
        if w is None:
            print("crossing=none")
            return 1
        print(f"crossing quad={list(w.quad)} layers={list(w.layers)}")
        return 0
    raise ParameterError(f"unknown multigraph action {args.action!r}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoturan",
        description="Exact verification toolkit for plane-free hypergraph extremal facts.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named hypergraph family member")
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="test a hypergraph file for a pattern")
    p.add_argument("file", help="input path, or - for stdin")
    p.add_argument("--pattern", choices=("fano", "k4", "k5", "k6"), default="fano")
    p.add_argument(
        "--method",
        choices=("embedding", "crossing_pairs", "pasch_matching", "all"),
        default="embedding",
        help="plane detection method (fano pattern only)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="exact extremal boundary search")
    searchsub = p.add_subparsers(dest="target", required=True)
    pe = searchsub.add_parser("ex", help="maximum plane-free edge count")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--long-run", action="store_true")
    pe.add_argument("--format", choices=("text", "json"), default="text")
    pe.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run registered claims and report certificates")
    p.add_argument("claims", nargs="+", metavar="claim", help="claim ids, or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None, help="parallel claim workers (env FANOTURAN_JOBS)")
    p.add_argument("--long-run", action="store_true", help="include budget-gated claims")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--checkpoint", default=None, help="checkpoint file for the ex-8 scan")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("multigraph", help="layer multigraph tools")
    msub = p.add_subparsers(dest="action", required=True)
    pm = msub.add_parser("extremal4", help="the extremal 4-layer construction")
    pm.add_argument("n", type=int)
    pm.add_argument("--format", choices=("text", "json"), default="text")
    pm.set_defaults(func=_cmd_multigraph)
    pm = msub.add_parser("constructions", help="the two 5-layer lower bound constructions")
    pm.add_argument("n", type=int)
    pm.add_argument("--format", choices=("text", "json"), default="text")
    pm.set_defaults(func=_cmd_multigraph)
    pm = msub.add_parser("search", help="exact crossing-free maximum")
    pm.add_argument("--p", type=int, required=True)
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--node-budget", type=int, default=200_000_000)
    pm.add_argument("--long-run", action="store_true")
    pm.add_argument("--format", choices=("text", "json"), default="text")
    pm.set_defaults(func=_cmd_multigraph)
    pm = msub.add_parser("check", help="report a three-crossing-pair witness")
    pm.add_argument("file", help="multigraph JSON path, or - for stdin")
    pm.set_defaults(func=_cmd_multigraph)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        note = f" (best_found={exc.best_found})" if exc.best_found is not None else ""
        print(f"capability: {exc}{note}", file=sys.stderr)
        return 3
    except VerificationError as exc:
        if exc.certificate is not None:
            print(emit_report([exc.certificate.to_json_dict()], "text"))
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
