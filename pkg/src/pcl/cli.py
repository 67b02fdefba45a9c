"""Command line front end.

Exit codes: 0 success (and agreement), 1 a disagreement was found,
2 input error, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes, report
from .catalog import (build_entry, default_catalog, load_catalog_file,
                      load_catalog_pairs)
from .errors import GroupSpecError, PclError, PreconditionError, SizeLimitError
from .specs import build_family
from .structure import all_subgroups, subgroup_generated

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT = 2
EXIT_SIZE = 3


def _write(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload if payload.endswith("\n") else payload + "\n")


def _cmd_build(args) -> int:
    group = build_family(args.spec)
    payload = {
        "label": group.label,
        "spec": args.spec,
        "order": group.order,
        "identity": 0,
        "mult": group.mult.tolist(),
        "inv": group.inv.tolist(),
    }
    _write(json.dumps(payload, sort_keys=True), args.out)
    return EXIT_OK


def _cmd_subgroups(args) -> int:
    group = build_family(args.spec)
    subgroups = all_subgroups(group)
    payload = {
        "label": group.label,
        "order": group.order,
        "count": len(subgroups),
        "subgroups": [{"elements": s.members.tolist(), "order": s.order,
                       "generators": list(s.generators)} for s in subgroups],
    }
    _write(json.dumps(payload, sort_keys=True), args.out)
    return EXIT_OK


def _parse_methods(raw: str | None) -> tuple[str, ...]:
    if raw is None:
        return report.METHODS
    methods = tuple(m.strip() for m in raw.split(",") if m.strip())
    for m in methods:
        if m not in report.METHODS:
            raise GroupSpecError(
                f"unknown method {m!r}; choose from {', '.join(report.METHODS)}")
    if not methods:
        raise GroupSpecError("no methods selected")
    return methods


def _cmd_classify(args) -> int:
    entry = build_entry(args.spec, args.spec)
    methods = _parse_methods(args.methods)
    if args.subgroup:
        try:
            gens = [int(x) for x in args.subgroup.split(",") if x.strip() != ""]
        except ValueError:
            raise GroupSpecError(f"bad --subgroup list: {args.subgroup!r}")
        for g in gens:
            if not 0 <= g < entry.group.order:
                raise GroupSpecError(f"subgroup generator {g} out of range")
        targets = [subgroup_generated(entry.group, gens)]
    else:
        targets = all_subgroups(entry.group)
    lines = []
    disagreement = False
    for H in targets:
        record = report.record_for(entry, H, methods)
        disagreement = disagreement or not record["agreement"]
        lines.append(json.dumps(record, sort_keys=True))
    _write("\n".join(lines), args.out)
    return EXIT_DISAGREEMENT if disagreement else EXIT_OK


def _cmd_verify(args) -> int:
    if args.catalog == "default":
        entries: list = default_catalog()
    else:
        # pass (label, spec) pairs so a too-large entry surfaces in its own
        # row instead of aborting the whole run
        entries = load_catalog_pairs(args.catalog)
    methods = _parse_methods(args.methods)
    workers = args.workers or int(os.environ.get("PCL_WORKERS", "1"))
    summary = report.run_verification_matrix(entries, methods, out=args.out,
                                             workers=workers)
    if args.out is None:
        for record in summary["records"]:
            sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")
    if args.summary == "table":
        sys.stdout.write(report.render_summary_table(summary["rows"]) + "\n")
    elif args.summary == "classes":
        built = entries if args.catalog == "default" else load_catalog_file(args.catalog)
        sys.stdout.write(report.render_summary_table(
            report.conjugacy_class_rows(built)) + "\n")
    if summary["disagreements"]:
        return EXIT_DISAGREEMENT
    if summary["size_limited"]:
        return EXIT_SIZE
    return EXIT_OK


def _cmd_codeperfect(args) -> int:
    group = build_family(args.spec)
    witness = codes.order4_witness(group)
    payload = {"group": group.label, "code_perfect": codes.is_code_perfect(group),
               "order4_witness": witness}
    _write(json.dumps(payload, sort_keys=True), None)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcl",
        description="Decide which subgroups of a finite group are perfect codes "
                    "in some Cayley graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a group and emit its tables")
    p.add_argument("spec")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("subgroups", help="enumerate the subgroup lattice")
    p.add_argument("spec")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_subgroups)

    p = sub.add_parser("classify", help="run decision methods on subgroups")
    p.add_argument("spec")
    p.add_argument("--subgroup", default=None,
                   help="comma separated generator indices; default: all subgroups")
    p.add_argument("--methods", default=None,
                   help="comma separated subset of: " + ",".join(report.METHODS))
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the verification matrix over a catalog")
    p.add_argument("--catalog", default="default",
                   help="'default' or a JSON file of specs")
    p.add_argument("--methods", default=None)
    p.add_argument("--out", default=None, help="write JSON lines here")
    p.add_argument("--summary", choices=("table", "classes", "none"), default="none",
                   help="'classes' collapses subgroups to conjugacy classes")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel worker processes (default: PCL_WORKERS or 1)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("codeperfect", help="test whether every subgroup is a perfect code")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_codeperfect)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (GroupSpecError, PreconditionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PclError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
