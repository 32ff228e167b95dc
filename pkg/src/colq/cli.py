"""Command-line front door: one verb per core operation."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from pathlib import Path

from . import jsonio
from .classify import classify_D
from .cycles import (
    cycle_colouration,
    euler_characteristic,
    holes,
    maximal_cliques,
    triangles,
)
from .errors import ColqError, DisconnectedError
from .gabriel import gabriel_report, zero_part
from .mutation import find_mutation_path, mutate_seq
from .orbit import mutation_class, closure_check, theorem_A_verdict
from .quiver import (
    ColouredQuiver,
    from_text,
    standard_d_quiver,
    to_dot,
    to_text,
)

log = logging.getLogger("colq")


def _load(path: str) -> ColouredQuiver:
    return from_text(Path(path).read_text(encoding="utf-8"))


def _emit(args, q: ColouredQuiver) -> None:
    text = jsonio.quiver_json(q) + "\n" if getattr(args, "json", False) else to_text(q)
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    q = _load(args.file)
    print(f"ok: n={q.n} m={q.m} arrows={q.total_arrow_count // 2} pairs")
    return 0


def _cmd_mutate(args) -> int:
    q = _load(args.file)
    result = mutate_seq(q, args.vertices)
    _emit(args, result)
    return 0


def _cmd_path(args) -> int:
    q1, q2 = _load(args.file_a), _load(args.file_b)
    path = find_mutation_path(q1, q2, cap=args.cap)
    if path is None:
        print("not found", file=sys.stderr)
        return 1
    print(" ".join(map(str, path)))
    return 0


def _cmd_analyze(args) -> int:
    q = _load(args.file)
    try:
        print(f"chi={euler_characteristic(q)}")
    except DisconnectedError:
        print("chi=undefined (disconnected)")
    for hole in holes(q):
        print("hole " + " ".join(map(str, hole)))
    for tri in triangles(q):
        report = cycle_colouration(q, tri)
        print(
            "triangle "
            + " ".join(map(str, tri))
            + f" colouration={report.colouration}"
        )
    for clique in maximal_cliques(q):
        if len(clique) >= 3:
            print("clique " + " ".join(map(str, clique)))
    return 0


def _cmd_classify(args) -> int:
    q = _load(args.file)
    print(jsonio.dumps(jsonio.classification_dict(classify_D(q))))
    return 0


def _cmd_enumerate(args) -> int:
    q = _load(args.file)
    report = mutation_class(q, cap=args.cap, compute_stats=args.stats)
    print(f"members={len(report.members)} capped={report.capped} diameter={report.diameter}")
    if args.stats and report.stats:
        print(jsonio.dumps(report.stats))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        index = []
        for key in sorted(report.members):
            digest = hashlib.sha1(key).hexdigest()[:12]
            (out / f"{digest}.cq").write_text(to_text(report.reps[key]), encoding="utf-8")
            index.append(digest)
        edges = [
            [hashlib.sha1(a).hexdigest()[:12], v, hashlib.sha1(b).hexdigest()[:12]]
            for a, v, b in report.edges
        ]
        orbit_doc = {
            "n": report.n,
            "m": report.m,
            "seed": hashlib.sha1(report.seed).hexdigest()[:12],
            "members": index,
            "edges": edges,
            "diameter": report.diameter,
            "capped": report.capped,
        }
        (out / "orbit.json").write_text(json.dumps(orbit_doc, indent=2), encoding="utf-8")
    return 0


def _cmd_zero_part(args) -> int:
    q = _load(args.file)
    zp = zero_part(q)
    for i, j in sorted(zp.arrows):
        print(f"{i} {j}")
    if args.verify:
        print(jsonio.dumps(jsonio.gabriel_report_dict(gabriel_report(zp))))
    return 0


def _cmd_verify_theorems(args) -> int:
    verdict = theorem_A_verdict(args.n, args.m, cap=args.cap, budget=args.budget)
    print(f"theorem-A n={args.n} m={args.m}: {verdict}")
    report = mutation_class(standard_d_quiver(args.n, args.m), cap=args.cap)
    violations = closure_check(report, kind="D")
    print(f"closure: {len(violations)} violations")
    period_bad = 0
    for rep in report.reps.values():
        for v in rep.vertices:
            if mutate_seq(rep, [v] * (args.m + 1)) != rep:
                period_bad += 1
    print(f"periodicity: {period_bad} violations")
    return 0 if verdict.equal and not violations and not period_bad else 1


def _cmd_export(args) -> int:
    q = _load(args.file)
    if args.dot:
        sys.stdout.write(to_dot(q))
    else:
        print(jsonio.quiver_json(q))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(enumeration_cap=args.cap, session_ttl=args.session_ttl)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colq", description="coloured quiver mutation toolkit"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="parse a quiver file and check the axioms")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("mutate", help="apply mutations and print the result")
    p.add_argument("file")
    p.add_argument("vertices", nargs="+", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("path", help="shortest mutation sequence between two quivers")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("analyze", help="Euler characteristic, holes, triangles, cliques")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="Type I / Type II membership verdict as JSON")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="BFS the mutation class of a quiver")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=500_000)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("zero-part", help="print the colour-0 subquiver")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_zero_part)

    p = sub.add_parser("verify-theorems", help="desk-scale orbit/class checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap", type=int, default=500_000)
    p.add_argument("--budget", type=int, default=10**8)
    p.set_defaults(func=_cmd_verify_theorems)

    p = sub.add_parser("export", help="DOT or JSON export")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8477)
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--session-ttl", type=int, default=3600)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("COLQ_LOG", "WARNING").upper())
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ColqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
