"""Command-line interface: audit definition files, list and show the bundled
fixtures. The audit path prints one delimited line per law, optionally writes
the machine-readable JSON report and a summary figure.

Exit codes: 0 all audits pass, 1 at least one audit fails, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import deffile, fixtures
from .errors import WitnessError
from .report import as_document, delimited_lines, render_figure, render_json

SEED_ENV = "TWOCHECK_SEED"


def _default_seed():
    try:
        return int(os.environ.get(SEED_ENV, "0"))
    except ValueError:
        return 0


def build_parser():
    p = argparse.ArgumentParser(prog="twocheck", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("audit", help="run the audits named in a definition file")
    a.add_argument("file", help="definition file path or bundled fixture name")
    a.add_argument("--only", help="comma-separated law names to keep", default=None)
    a.add_argument("--seed", type=int, default=None, help="sampling seed")
    a.add_argument("--json", dest="json_out", help="write the machine-readable report here")
    a.add_argument("--figure", help="render a summary figure (PNG) here")
    a.add_argument(
        "--max-counterexamples", type=int, default=5, help="counterexamples kept per law"
    )

    f = sub.add_parser("fixtures", help="bundled fixture library")
    fsub = f.add_subparsers(dest="fixtures_command", required=True)
    fsub.add_parser("list", help="list bundled fixture names")
    s = fsub.add_parser("show", help="print a bundled fixture document")
    s.add_argument("name")
    return p


def _load(path):
    if os.path.exists(path):
        return deffile.parse(path)
    if path in fixtures.FIXTURES:
        return deffile.parse_document(fixtures.load_fixture(path), source=f"fixture:{path}")
    raise WitnessError(f"no such file or fixture: {path}", witness=path)


def cmd_audit(args):
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        defs = _load(args.file)
        only = args.only.split(",") if args.only else None
        t0 = time.monotonic()
        times = {}
        reports = []
        for entry in defs.audits:
            kind = entry.get("run")
            if kind not in deffile.AUDIT_RUNNERS:
                raise WitnessError(f"unknown audit {kind!r}", witness=kind)
            start = time.monotonic()
            batch = deffile.AUDIT_RUNNERS[kind](defs, entry, seed)
            dur = (time.monotonic() - start) * 1000.0
            for r in batch:
                times[(r.target, r.law)] = dur / max(len(batch), 1)
            reports.extend(batch)
        if only:
            wanted = set(only)
            reports = [r for r in reports if r.law in wanted]
        total = (time.monotonic() - t0) * 1000.0
    except WitnessError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    for line in delimited_lines(reports, times):
        print(line)
    failed = [r for r in reports if not r.passed]
    print(f"# {len(reports)} audits, {len(failed)} failing, {total:.1f} ms")
    for r in failed:
        for c in r.failures[: args.max_counterexamples]:
            print(f"# counterexample {r.law}@{r.target}: {c['instance']}")
    doc = as_document(
        reports, seed=seed, source=defs.source, max_counterexamples=args.max_counterexamples
    )
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(render_json(doc))
    if args.figure:
        render_figure(reports, args.figure, title=os.path.basename(defs.source))
    return 1 if failed else 0


def cmd_fixtures(args):
    if args.fixtures_command == "list":
        for name in fixtures.fixture_names():
            print(name)
        return 0
    if args.fixtures_command == "show":
        try:
            doc = fixtures.load_fixture(args.name)
        except KeyError:
            print(f"error: unknown fixture {args.name!r}", file=sys.stderr)
            return 2
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    return 2


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "audit":
        return cmd_audit(args)
    if args.command == "fixtures":
        return cmd_fixtures(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
