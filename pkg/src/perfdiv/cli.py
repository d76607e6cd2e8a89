"""Command-line entry point.

Exit status: 0 when every verdict is consistent, 1 when a campaign found a
counterexample (the report is still written), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .campaigns import BUILTIN, CAMPAIGNS, CampaignError, default_spec, resolve_campaign, run_campaign
from .canon import CapExceeded, enumerate_nonisomorphic
from .detectors import ClassSpec, is_class_member, pattern_for
from .divisibility import BudgetExceeded
from .graph import GraphError
from .graph6 import encode_graph6, load_corpus, write_corpus
from .report import emit_report
from .structure import build_graph_F

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def _cmd_enumerate(args) -> int:
    graphs = enumerate_nonisomorphic(args.n, cap=args.cap)
    if args.out:
        count = write_corpus(graphs, args.out)
        print(f"wrote {count} graphs to {args.out}", file=sys.stderr)
    else:
        for g in graphs:
            sys.stdout.write(encode_graph6(g) + "\n")
    return EXIT_OK


def _cmd_check(args) -> int:
    spec = ClassSpec.parse(args.cls)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    members_ = total = 0
    try:
        for i, g in enumerate(load_corpus(args.input)):
            ok, w = is_class_member(g, spec)
            total += 1
            members_ += ok
            rec = {"index": i, "graph6": encode_graph6(g), "member": ok, "witness": None if w is None else w.as_dict()}
            out.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{members_} of {total} graphs are {spec}-free", file=sys.stderr)
    return EXIT_OK


def _cmd_campaign(args) -> int:
    name = resolve_campaign(args.name)
    overrides = {
        "wmax": args.wmax,
        "jobs": args.jobs,
        "weighted_max_n": args.weighted_max_n,
        "append": tuple(args.append),
        "timing": args.timing,
        "source": args.input or BUILTIN,
    }
    if args.max_n is not None:
        overrides["max_n"] = args.max_n
    spec = default_spec(name, **overrides)
    report = run_campaign(spec)
    emit_report(report, args.out)
    summary = report.summary()
    bad = summary["counterexamples"]
    print(
        f"{name}: {summary['total']} graphs, {summary['members']} members, "
        f"{len(bad)} counterexamples -> {args.out}",
        file=sys.stderr,
    )
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def _cmd_named(args) -> int:
    g = build_graph_F() if args.pattern == "F" else pattern_for(args.pattern)
    if g is None:
        raise GraphError(f"{args.pattern!r} names a family, not a single graph")
    line = encode_graph6(g)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(line + "\n")
    else:
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="perfdiv", description="Divisibility verification toolkit for small graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="write one graph per isomorphism class on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="graph6 output file (default: stdout)")
    p.add_argument("--cap", type=int, default=8, help="largest order allowed (default: 8)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="test class membership of every graph in a graph6 file")
    p.add_argument("--input", required=True)
    p.add_argument("--class", dest="cls", required=True, help="comma-separated forbidden subgraphs, e.g. bull,odd-torch")
    p.add_argument("--out", help="JSON lines output (default: stdout)")
    p.set_defaults(func=_cmd_check)

    names = sorted(CAMPAIGNS) + [c.alias for c in CAMPAIGNS.values()]
    p = sub.add_parser("campaign", help="run a verification campaign and write its report")
    p.add_argument("name", help="one of: " + ", ".join(names))
    p.add_argument("--max-n", type=int, default=None, help="vertex cap (default depends on the campaign)")
    p.add_argument("--wmax", type=int, default=2)
    p.add_argument("--weighted-max-n", type=int, default=7, help="largest order for weighted checks")
    p.add_argument("--input", help="graph6 file to use instead of the builtin enumeration")
    p.add_argument("--append", action="append", default=[], help="extra graph6 file, read after the source")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="record per-graph times (reports stop being byte-stable)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_campaign)

    p = sub.add_parser("named", help="write a named pattern (or F) as graph6")
    p.add_argument("pattern")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_named)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, CampaignError, CapExceeded, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
