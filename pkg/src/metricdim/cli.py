"""Batch command-line front end.

Subcommands: ``dim``, ``twin``, ``check-min`` (graph6 argument or ``-`` for
one graph6 per stdin line), ``gen-broom``, ``gen-max`` (emit graph6),
``verify`` and ``bounds`` (exhaustive sweeps).  Machine output is selected
with ``--json``; ``check-min`` always prints JSON verdicts.

Exit codes: 0 success, 1 usage error, 2 parse/precondition error,
3 check-min rejection, 4 verification counterexample.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from typing import Iterator, Optional

from .characterize import decide_min_order
from .enumeration import verify_bounds, verify_characterization
from .extremal import build_broom, build_max_graph
from .graph_core import Graph6Error, diameter, parse_graph6, serialize_graph6
from .metric import metric_dimension
from .twins import quotient_diameter_relation, twin_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_INPUT = 2
EXIT_REJECTED = 3
EXIT_COUNTEREXAMPLE = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to the documented code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def run(argv: Optional[list[str]] = None) -> int:
    """Parse and execute one invocation; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except Graph6Error as e:
        print(f"metricdim: graph6 error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as e:
        print(f"metricdim: error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


def _build_parser() -> _Parser:
    p = _Parser(prog="metricdim", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dim = sub.add_parser("dim", help="exact metric dimension, witness, diameter")
    dim.add_argument("graph", help="graph6 string, or - for one graph per stdin line")
    dim.add_argument("--json", action="store_true")
    dim.add_argument("--jobs", type=int, default=None, help="parallel workers")
    dim.set_defaults(func=_cmd_dim)

    twin = sub.add_parser("twin", help="twin classes, quotient, diameters")
    twin.add_argument("graph")
    twin.add_argument("--json", action="store_true")
    twin.set_defaults(func=_cmd_twin)

    chk = sub.add_parser("check-min", help="decide beta = n - D (JSON verdict)")
    chk.add_argument("graph")
    chk.set_defaults(func=_cmd_check_min)

    broom = sub.add_parser("gen-broom", help="emit the minimum-order broom")
    broom.add_argument("--beta", type=int, required=True)
    broom.add_argument("--diam", type=int, required=True)
    broom.set_defaults(func=_cmd_gen_broom)

    gmax = sub.add_parser("gen-max", help="emit the maximum-order lattice graph")
    gmax.add_argument("--beta", type=int, required=True)
    gmax.add_argument("--diam", type=int, required=True)
    gmax.add_argument("--meta", metavar="PATH", help="write sidecar JSON here")
    gmax.set_defaults(func=_cmd_gen_max)

    ver = sub.add_parser("verify", help="exhaustive characterization check")
    ver.add_argument("--nmax", type=int, required=True)
    ver.add_argument("--jobs", type=int, default=None)
    ver.add_argument("--out", metavar="PATH", help="write JSON-lines reports here")
    ver.add_argument(
        "--counterexamples", metavar="PATH", help="dump disagreeing graph6 lines here"
    )
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    bnd = sub.add_parser("bounds", help="observed min/max order per (beta, D)")
    bnd.add_argument("--nmax", type=int, required=True)
    bnd.add_argument("--json", action="store_true")
    bnd.set_defaults(func=_cmd_bounds)
    return p


def _input_graphs(arg: str) -> Iterator[tuple[str, Graph]]:
    """The argument itself, or stdin lines when the argument is '-'."""
    if arg == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                yield line, parse_graph6(line)
    else:
        yield arg, parse_graph6(arg)


def _dim_worker(line: str) -> tuple[int, int, tuple[int, ...]]:
    g = parse_graph6(line)
    r = metric_dimension(g)
    return g.n, diameter(g), r.witness


def _cmd_dim(args) -> int:
    if args.graph == "-":
        lines = [ln.strip() for ln in sys.stdin if ln.strip()]
    else:
        lines = [args.graph]
    jobs = args.jobs if args.jobs is not None else os.cpu_count() or 1
    if jobs > 1 and len(lines) >= 4:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_dim_worker, lines)
    else:
        results = [_dim_worker(ln) for ln in lines]
    for n, diam, witness in results:
        beta = len(witness)
        if args.json:
            print(
                json.dumps(
                    {"n": n, "beta": beta, "witness": list(witness), "diameter": diam}
                )
            )
        else:
            wtxt = ",".join(map(str, witness))
            print(f"beta={beta} witness={wtxt} diameter={diam}")
    return EXIT_OK


def _cmd_twin(args) -> int:
    for _line, g in _input_graphs(args.graph):
        tg = twin_graph(g)
        rel = quotient_diameter_relation(g) if g.n > 1 else None
        q6 = serialize_graph6(tg.quotient).decode("ascii")
        if args.json:
            print(
                json.dumps(
                    {
                        "n": g.n,
                        "classes": [
                            {"members": list(c.members), "kind": c.kind.value}
                            for c in tg.classes
                        ],
                        "quotient_graph6": q6,
                        "diam": rel.diam_g if rel else 0,
                        "quotient_diam": rel.diam_quotient if rel else 0,
                        "collapsed": rel.collapsed if rel else False,
                    }
                )
            )
        else:
            ctxt = " ".join(
                "{%s}(%s)" % (",".join(map(str, c.members)), c.kind.value)
                for c in tg.classes
            )
            dg = rel.diam_g if rel else 0
            dq = rel.diam_quotient if rel else 0
            print(f"classes={ctxt} quotient={q6} diamG={dg} diamG*={dq}")
    return EXIT_OK


def _cmd_check_min(args) -> int:
    status = EXIT_OK
    for _line, g in _input_graphs(args.graph):
        verdict = decide_min_order(g)
        print(json.dumps(verdict.as_json_dict()))
        if not verdict.accepted:
            status = EXIT_REJECTED
    return status


def _cmd_gen_broom(args) -> int:
    g = build_broom(args.beta, args.diam)
    print(serialize_graph6(g).decode("ascii"))
    return EXIT_OK


def _cmd_gen_max(args) -> int:
    mg = build_max_graph(args.beta, args.diam)
    print(serialize_graph6(mg.graph).decode("ascii"))
    if args.meta:
        meta = {
            "beta": mg.beta,
            "D": mg.D,
            "A": mg.A,
            "B": mg.B,
            "order": len(mg.points),
            "points": [list(p) for p in mg.points],
            "basis": list(mg.basis),
        }
        with open(args.meta, "w") as fh:
            json.dump(meta, fh)
            fh.write("\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    out = open(args.out, "w") if args.out else None
    counts: dict[str, int] = {}
    bad: list[str] = []
    total = 0
    try:
        for rep in verify_characterization(args.nmax, jobs=args.jobs):
            total += 1
            counts[rep.verdict.case_label] = counts.get(rep.verdict.case_label, 0) + 1
            if not rep.agrees:
                bad.append(rep.graph6)
            if out:
                out.write(json.dumps(rep.as_json_dict()) + "\n")
    finally:
        if out:
            out.close()
    if bad and args.counterexamples:
        with open(args.counterexamples, "w") as fh:
            fh.write("\n".join(bad) + "\n")
    if args.json:
        print(
            json.dumps(
                {
                    "nmax": args.nmax,
                    "graphs": total,
                    "disagreements": len(bad),
                    "case_counts": dict(sorted(counts.items())),
                }
            )
        )
    else:
        print(f"checked {total} connected graphs up to n={args.nmax}")
        for label, cnt in sorted(counts.items()):
            print(f"  {label}: {cnt}")
        print(f"disagreements: {len(bad)}")
    if bad:
        for g6 in bad:
            print(f"counterexample: {g6}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_bounds(args) -> int:
    summary = verify_bounds(args.nmax)
    if args.json:
        print(
            json.dumps(
                {
                    "nmax": summary.n_max,
                    "rows": [vars(r) for r in summary.rows],
                    "violations": list(summary.violations),
                }
            )
        )
    else:
        print("beta D  count  min(expect)  max(expect)")
        for r in summary.rows:
            print(
                f"{r.beta:4d} {r.D:2d} {r.count:6d}  "
                f"{r.min_n:3d} ({r.min_expected:3d})  "
                f"{r.max_n:3d} ({r.max_expected:3d})"
            )
        for v in summary.violations:
            print(f"violation: {v}")
    return EXIT_COUNTEREXAMPLE if summary.violations else EXIT_OK
