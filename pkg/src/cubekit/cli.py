"""``cubekit`` command line.

Exit codes: 0 success, 1 negative verdict or property violation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any

from . import __version__
from .checks import run_corpus
from .classes import class_report
from .classify import classify
from .convexity import enumerate_convex_cycles, enumerate_convex_cycles_bruteforce
from .errors import CubekitError, NotPartialCubeError, ParamRangeError, ParseError
from .families import build_family, parse_family
from .graph import Graph
from .io import read_graph, write_graph
from .theta import (
    LABELING_NOT_ISOMETRIC,
    NOT_BIPARTITE,
    THETA_NOT_TRANSITIVE,
    is_partial_cube,
    require_partial_cube,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _edge_names(g: Graph, e) -> list[str]:
    return [g.name(e[0]), g.name(e[1])]


def _recognize_payload(g: Graph) -> tuple[dict[str, Any], bool]:
    pc = is_partial_cube(g)
    out: dict[str, Any] = {"partial_cube": pc.is_partial_cube, "reason": pc.reason, "witness": None}
    if pc.reason == NOT_BIPARTITE:
        out["witness"] = {"odd_cycle": [g.name(v) for v in pc.witness]}
    elif pc.reason == THETA_NOT_TRANSITIVE:
        out["witness"] = {"theta_triple": [_edge_names(g, e) for e in pc.witness]}
    elif pc.reason == LABELING_NOT_ISOMETRIC:
        out["witness"] = {"pair": [g.name(v) for v in pc.witness]}
    if pc:
        tp = pc.partition
        out["idim"] = tp.class_count
        out["theta_classes"] = [[_edge_names(g, g.edges[e]) for e in members] for members in tp.classes]
        out["labeling"] = _labeling_rows(g, pc.labeling)
    else:
        out["idim"] = None
    return out, pc.is_partial_cube


def _labeling_rows(g: Graph, lab) -> list[dict[str, str]]:
    return [{"vertex": g.name(v), "bits": lab.bits(v)} for v in range(g.n)]


def _convex_payload(g: Graph, oracle: bool) -> tuple[dict[str, Any], bool]:
    pc = require_partial_cube(g)
    ccs = enumerate_convex_cycles(g, pc.distances, pc.partition)
    out: dict[str, Any] = {
        "count": len(ccs),
        "spectrum": {str(k): v for k, v in ccs.length_spectrum.items()},
        "uniform_length": ccs.uniform_length,
        "cycles": [[g.name(v) for v in c.vertices] for c in ccs.cycles],
        "oracle": None,
    }
    ok = True
    if oracle:
        ref = enumerate_convex_cycles_bruteforce(g, pc.distances)
        ok = ref.vertex_sets() == ccs.vertex_sets()
        out["oracle"] = "MATCH" if ok else "MISMATCH"
    return out, ok


def _classify_payload(g: Graph, certify: bool) -> tuple[dict[str, Any], bool]:
    c = classify(g, certify=certify)
    cert: dict[str, Any] | None = None
    if c.labeling is not None:
        cert = {"labeling": _labeling_rows(g, c.labeling)}
    if c.isomorphism is not None:
        from .families import doubled_odd

        target = doubled_odd(c.parameter)
        cert = {"isomorphism": [{"vertex": g.name(v), "image": target.name(w)} for v, w in sorted(c.isomorphism.items())]}
    out = {
        "label": c.label,
        "outcome": c.outcome,
        "parameter": c.parameter,
        "reason": c.reason,
        "convex_length": c.convex_length,
        "degree": c.degree,
        "idim": c.idim,
        "spectrum": {str(k): v for k, v in c.spectrum.items()},
        "certificate": cert,
        "notes": list(c.notes),
    }
    return out, True


def _jsonable_witness(g: Graph, w: Any) -> Any:
    if isinstance(w, tuple) and all(isinstance(x, int) for x in w):
        return [g.name(v) for v in w]
    if isinstance(w, dict):
        return {str(k): _jsonable_witness(g, v) for k, v in w.items()}
    if isinstance(w, tuple):
        return [_jsonable_witness(g, x) for x in w]
    return w if isinstance(w, (str, int, bool, type(None))) else str(w)


def _classes_payload(g: Graph, seed: int) -> tuple[dict[str, Any], bool]:
    rep = class_report(g, seed=seed)
    out = dict(rep.flags())
    out["median_mode"] = rep.median_mode
    out["witnesses"] = {k: _jsonable_witness(g, v) for k, v in sorted(rep.witnesses.items())}
    return out, True


def _embed_payload(g: Graph) -> tuple[dict[str, Any], bool]:
    pc = require_partial_cube(g)
    return {"width": pc.labeling.width, "labels": _labeling_rows(g, pc.labeling)}, True


def _load(args) -> tuple[Graph, dict[str, Any]]:
    if args.family and args.graph:
        raise ParseError("give either a graph file or --family, not both")
    if args.family:
        spec = parse_family(args.family)
        g = spec.build()
        desc = {"kind": "family", "descriptor": str(spec)}
    elif args.graph:
        g = read_graph(args.graph, args.format)
        desc = {"kind": "file", "descriptor": args.graph}
    else:
        raise ParseError("no input: give a graph file or --family SPEC")
    desc.update(vertices=g.n, edges=g.edge_count)
    return g, desc


def _emit(args, report: dict[str, Any], text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _text(command: str, payload: dict[str, Any]) -> str:
    if command == "recognize":
        if payload["partial_cube"]:
            lines = [f"partial cube: yes (isometric dimension {payload['idim']})"]
        else:
            lines = [f"partial cube: no ({payload['reason']})", f"witness: {payload['witness']}"]
        return "\n".join(lines)
    if command == "convex-cycles":
        spec = ", ".join(f"{k}:{v}" for k, v in payload["spectrum"].items()) or "none"
        lines = [f"convex cycles: {payload['count']}", f"length spectrum: {{{spec}}}"]
        if payload["oracle"]:
            lines.append(f"oracle: {payload['oracle']}")
        lines += ["  " + " ".join(c) for c in payload["cycles"]]
        return "\n".join(lines)
    if command == "classify":
        lines = [payload["label"]]
        for key in ("degree", "idim", "convex_length"):
            if payload[key] is not None:
                lines.append(f"{key}: {payload[key]}")
        if payload["certificate"]:
            lines.append("certificate: " + ", ".join(payload["certificate"]))
        lines += [f"note: {n}" for n in payload["notes"]]
        return "\n".join(lines)
    if command == "classes":
        rows = [f"{k:30s} {'yes' if v else 'no'}" for k, v in payload.items() if k.startswith("is_")]
        rows.append(f"{'median test':30s} {payload['median_mode']}")
        return "\n".join(rows)
    if command == "embed":
        width = max((len(r["vertex"]) for r in payload["labels"]), default=1)
        return "\n".join(f"{r['vertex']:>{width}s}  {r['bits']}" for r in payload["labels"])
    return json.dumps(payload)


def _corpus_text(results: list[dict[str, Any]]) -> str:
    lines = []
    for r in results:
        s = r["summary"]
        status = "ok" if not r["violations"] else "VIOLATION " + ",".join(r["violations"])
        lines.append(f"{r['name']:18s} n={s['vertices']:<4d} {str(s.get('classification')):32s} {status}")
    bad = sum(1 for r in results if r["violations"])
    lines.append(f"{len(results)} graphs, {bad} with violations")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubekit", description="Partial cube toolkit")
    parser.add_argument("--version", action="version", version=f"cubekit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--timing", action="store_true", help="add elapsed milliseconds to the report")
    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", nargs="?", help="graph6 (.g6) or edge-list file")
    graph_in.add_argument("--family", help="family spec such as Q:3, DO:3, C:10, PROD(Q:2,C:6)")
    graph_in.add_argument("--format", choices=("g6", "edges"), help="input format (default: by extension)")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("recognize", parents=[common, graph_in], help="partial cube recognition")
    p = sub.add_parser("convex-cycles", parents=[common, graph_in], help="enumerate convex cycles")
    p.add_argument("--oracle", action="store_true", help="compare with brute-force enumeration")
    p = sub.add_parser("classify", parents=[common, graph_in], help="hypercube / doubled odd / even cycle")
    p.add_argument("--certify", action="store_true", help="certify doubled odd outcomes by isomorphism")
    sub.add_parser("classes", parents=[common, graph_in], help="graph class membership")
    sub.add_parser("embed", parents=[common, graph_in], help="hypercube labeling")
    p = sub.add_parser("generate", help="write a family graph to a file")
    p.add_argument("spec")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("-o", "--output", required=True)
    p = sub.add_parser("corpus", parents=[common], help="run the property suite on the corpus")
    p.add_argument("--profile", choices=("SMALL", "FULL"), default="SMALL")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _base(command: str) -> dict[str, Any]:
    return {"tool": "cubekit", "version": __version__, "command": command}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "generate":
        try:
            g = build_family(args.spec)
            write_graph(g, args.output, args.format)
        except (ParseError, ParamRangeError) as exc:
            print(f"cubekit: {exc.code}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    start = time.perf_counter()
    report = _base(cmd)
    if cmd == "corpus":
        results = run_corpus(args.profile, seed=args.seed, jobs=args.jobs)
        report.update(profile=args.profile, seed=args.seed, graphs=results)
        report["violations"] = [f"{r['name']}: {v}" for r in results for v in r["violations"]]
        if args.timing:
            report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
        _emit(args, report, _corpus_text(results))
        return EXIT_NEGATIVE if report["violations"] else EXIT_OK

    try:
        g, desc = _load(args)
    except (ParseError, ParamRangeError) as exc:
        report["error"] = {"code": exc.code, "message": str(exc)}
        _emit(args, report, f"error: {exc.code}: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        report["error"] = {"code": "IO_ERROR", "message": str(exc)}
        _emit(args, report, f"error: {exc}")
        return EXIT_USAGE
    report["input"] = desc
    try:
        if cmd == "recognize":
            payload, ok = _recognize_payload(g)
        elif cmd == "convex-cycles":
            payload, ok = _convex_payload(g, args.oracle)
        elif cmd == "classify":
            payload, ok = _classify_payload(g, args.certify)
        elif cmd == "classes":
            payload, ok = _classes_payload(g, args.seed)
        else:
            payload, ok = _embed_payload(g)
    except CubekitError as exc:
        report["error"] = {"code": exc.code, "message": str(exc)}
        if isinstance(exc, NotPartialCubeError):
            report["error"]["reason"] = exc.details.get("reason")
        _emit(args, report, f"error: {exc.code}: {exc}")
        return EXIT_NEGATIVE
    report["result"] = payload
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(args, report, _text(cmd, payload))
    return EXIT_OK if ok else EXIT_NEGATIVE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
