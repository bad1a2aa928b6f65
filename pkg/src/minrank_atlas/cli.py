"""Command-line front end for reproducible batch runs.

Commands: bounds, table, diff, verify-witnesses, derive-forbidden, and
the single-value helpers zf, cc, diam.  Exit status: 0 success,
1 verification or diff failure, 2 usage or I/O error.  Data paths
default to ./data and are overridable per run; there is no environment
configuration.
"""

from __future__ import annotations

import argparse
import json
import sys

from minrank_atlas import bounds, catalog, graphs, witness
from minrank_atlas.graph6 import from_graph6

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_ATLAS = "data/atlas.g6"
DEFAULT_FIXTURES = "data/table1.tsv"
DEFAULT_WITNESSES = "data/witnesses.txt"
DEFAULT_FORBIDDEN = "data/forbidden_mr2.g6"


def _add_data_flags(p: argparse.ArgumentParser, *names: str) -> None:
    flags = {
        "atlas": ("--atlas-file", DEFAULT_ATLAS),
        "fixtures": ("--fixtures", DEFAULT_FIXTURES),
        "witnesses": ("--witnesses", DEFAULT_WITNESSES),
        "forbidden": ("--forbidden", DEFAULT_FORBIDDEN),
    }
    for name in names:
        flag, default = flags[name]
        p.add_argument(flag, default=default, metavar="PATH")


def _add_target_flags(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--atlas", type=int, metavar="N", help="atlas number")
    grp.add_argument("--graph6", metavar="G6", help="graph6 string")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="minrank-atlas",
        description="Minimum-rank bound tables and certificate checks for the small-graph atlas.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="bound row for one graph")
    _add_target_flags(p)
    _add_data_flags(p, "atlas", "forbidden")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="computed rows for the whole corpus")
    _add_data_flags(p, "atlas", "forbidden")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1, metavar="N")

    p = sub.add_parser("diff", help="computed table against the transcribed reference")
    _add_data_flags(p, "atlas", "fixtures", "forbidden")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1, metavar="N")

    p = sub.add_parser("verify-witnesses", help="check the optimal-matrix certificates")
    _add_data_flags(p, "atlas", "fixtures", "witnesses")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("derive-forbidden", help="recompute the forbidden-subgraph family")
    _add_data_flags(p, "atlas", "fixtures")
    p.add_argument("--out", default=DEFAULT_FORBIDDEN, metavar="PATH")

    for name, help_text in (
        ("zf", "zero forcing number"),
        ("cc", "clique cover number"),
        ("diam", "diameter"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_target_flags(p)
        _add_data_flags(p, "atlas")
    return top


def _load_target(args) -> graphs.Graph:
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    entries = catalog.load_atlas(args.atlas_file)
    if not 1 <= args.atlas <= len(entries):
        raise ValueError(f"atlas number {args.atlas} outside 1..{len(entries)}")
    return entries[args.atlas - 1].graph


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_bounds(args) -> int:
    g = _load_target(args)
    row = bounds.combine(g, bounds.read_forbidden_list(args.forbidden))
    label = str(args.atlas) if args.graph6 is None else "-"
    if args.json:
        number = args.atlas if args.graph6 is None else None
        print(json.dumps(catalog.bounds_row_dict(number, row)))
    else:
        print("\t".join(catalog.bounds_row_fields(label, row)))
    return EXIT_OK


def cmd_table(args) -> int:
    entries = catalog.load_atlas(args.atlas_file)
    forbidden = bounds.read_forbidden_list(args.forbidden)
    computed = catalog.compute_all(entries, forbidden, jobs=args.jobs)
    if args.json:
        payload = [catalog.bounds_row_dict(a, computed[a]) for a in sorted(computed)]
        _emit(json.dumps(payload, indent=None) + "\n", args.out)
    else:
        _emit("".join(line + "\n" for line in catalog.table_lines(computed)), args.out)
    return EXIT_OK


def cmd_diff(args) -> int:
    entries = catalog.load_atlas(args.atlas_file)
    fixtures = catalog.load_fixtures(args.fixtures)
    forbidden = bounds.read_forbidden_list(args.forbidden)
    computed = catalog.compute_all(entries, forbidden, jobs=args.jobs)
    report = catalog.diff(fixtures, computed)
    if args.json:
        print(json.dumps({
            "rows_checked": report.rows_checked,
            "mismatches": [
                {"atlas": m.atlas_number, "column": m.column,
                 "expected": str(m.expected), "computed": str(m.computed)}
                for m in report.mismatches
            ],
        }))
        return EXIT_OK if report.ok else EXIT_FAIL
    for m in report.mismatches:
        print(f"{m.atlas_number}\t{m.column}\t{m.expected}\t{m.computed}")
    status = "ok" if report.ok else f"{len(report.mismatches)} mismatches"
    print(f"# checked {report.rows_checked} rows: {status}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify_witnesses(args) -> int:
    entries = catalog.load_atlas(args.atlas_file)
    fixtures = catalog.load_fixtures(args.fixtures)
    lb_by_atlas = {f.atlas_number: f.lb for f in fixtures}
    with open(args.witnesses, encoding="utf-8") as fh:
        records = witness.parse_witness_file(fh.read(), lb_by_atlas)
    graphs_by_atlas = {e.atlas_number: e.graph for e in entries}
    all_ok = True
    results = []
    for rec in sorted(records, key=lambda r: r.atlas_number):
        report = witness.verify_witness(rec, graphs_by_atlas[rec.atlas_number])
        reasons = report.reasons()
        if rec.atlas_number in witness.KNOWN_UNWITNESSED:
            reasons.append("unexpected")
        ok = report.passed and rec.atlas_number not in witness.KNOWN_UNWITNESSED
        all_ok &= ok
        results.append((rec.atlas_number, report.rank_found, ok, reasons))
    if args.json:
        print(json.dumps([
            {"atlas": a, "rank": r, "passed": ok, "reasons": reasons}
            for a, r, ok, reasons in results
        ]))
    else:
        for a, r, ok, reasons in results:
            verdict = "pass" if ok else "fail(" + ",".join(reasons) + ")"
            print(f"{a}\t{r}\t{verdict}")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_derive_forbidden(args) -> int:
    entries = catalog.load_atlas(args.atlas_file)
    fixtures = catalog.load_fixtures(args.fixtures)
    corpus = [e.graph for e in entries]
    mr_by_atlas = {f.atlas_number: f.mr for f in fixtures}
    try:
        derived = bounds.derive_forbidden_list(corpus, mr_by_atlas)
    except bounds.ForbiddenDerivationError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    bounds.write_forbidden_list(args.out, derived)
    orders = ",".join(str(p.order) for p in derived.patterns)
    print(f"wrote {len(derived.patterns)} patterns (orders {orders}) to {args.out}")
    return EXIT_OK


def cmd_single_value(args) -> int:
    g = _load_target(args)
    if args.command == "zf":
        print(bounds.zero_forcing_number(g))
    elif args.command == "cc":
        print(bounds.clique_cover_number(g))
    else:
        print(graphs.diameter(g))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handlers = {
        "bounds": cmd_bounds,
        "table": cmd_table,
        "diff": cmd_diff,
        "verify-witnesses": cmd_verify_witnesses,
        "derive-forbidden": cmd_derive_forbidden,
        "zf": cmd_single_value,
        "cc": cmd_single_value,
        "diam": cmd_single_value,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
