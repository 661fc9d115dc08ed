"""Command-line front end: ``gcob table|compute|verify|list``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify as _verify
from .catalog import load_catalog, parse_family_spec
from .errors import GcobError
from .invariant import DEFAULT_BUDGET
from .report import build_report, family_of, report_for

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


def _default_threads():
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _columns(genus_max, timing):
    cols = ["name", "order", "abelian", "subgroups", "abelian_subgroups",
            "cyclic_subgroups", "com", "r1"]
    cols += [f"r{n}" for n in range(2, genus_max + 1)]
    cols += ["r1_method", "match"]
    if timing:
        cols.append("seconds")
    return cols


def _row(rep, genus_max, timing):
    row = {
        "name": rep.name, "order": rep.order, "abelian": rep.abelian,
        "subgroups": rep.subgroups, "abelian_subgroups": rep.abelian_subgroups,
        "cyclic_subgroups": rep.cyclic_subgroups, "com": rep.com, "r1": rep.r1,
        "r1_method": rep.methods.get("r1"),
    }
    for n in range(2, genus_max + 1):
        row[f"r{n}"] = rep.r.get(n)
    if rep.errors:
        row["match"] = "ERROR"
    elif not rep.expected:
        row["match"] = "-"
    else:
        row["match"] = "ok" if rep.ok else "MISMATCH"
    if timing:
        row["seconds"] = f"{sum(rep.timings.values()):.3f}"
    return row


def render(reports, fmt, genus_max=1, timing=True) -> str:
    if fmt == "json":
        doc = {"groups": [r.to_dict(timing=timing) for r in reports]}
        return json.dumps(doc, indent=2) + "\n"
    cols = _columns(genus_max, timing)
    rows = [_row(r, genus_max, timing) for r in reports]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([_fmt(row[c]) for c in cols])
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "|".join("---" for _ in cols) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_fmt(row[c]) for c in cols) + " |")
    notes = [f"- {r.name}: {k}: {v}" for r in reports for k, v in r.diagnostics.items()]
    notes += [f"- {r.name}: {m}" for r in reports for m in r.mismatches]
    notes += [f"- {r.name}: error: {e}" for r in reports for e in r.errors]
    if notes:
        lines += ["", *notes]
    return "\n".join(lines) + "\n"


def _budget_for(args, order, genus):
    """Budget for one computation, honouring the genus >= 3 acknowledgement."""
    budget = args.budget
    size = order ** (2 * genus)
    if genus >= 3 and size > DEFAULT_BUDGET and not args.huge:
        raise GcobError(
            f"genus {genus} on order {order} needs {size} states; "
            "pass --i-know-this-is-huge to proceed"
        )
    if args.huge:
        budget = max(budget, size)
    return budget


def cmd_table(args, out) -> int:
    catalog = load_catalog()
    entries = catalog.all_entries(args.max_order)

    def one(e):
        G = catalog.by_name(e.name)
        budget = _budget_for(args, G.order, args.genus_max)
        return build_report(G, e, family_of(e), genus_max=args.genus_max,
                            diagnostics=args.diagnostics, budget=budget)

    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        reports = list(pool.map(one, entries))
    out.write(render(reports, args.format, args.genus_max, timing=not args.no_timing))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_compute(args, out) -> int:
    genus = args.genus
    kw = dict(genus_max=genus, diagnostics=args.diagnostics, workers=max(1, args.threads))
    if genus >= 3:
        # order is needed before the budget can be judged
        catalog = load_catalog()
        fam = parse_family_spec(args.group)
        G = catalog.resolve(args.group) if (fam or args.group in catalog) else None
        if G is not None:
            kw["budget"] = _budget_for(args, G.order, genus)
        else:
            kw["budget"] = args.budget
    else:
        kw["budget"] = args.budget
    rep = report_for(args.group, **kw)
    out.write(render([rep], args.format, genus, timing=not args.no_timing))
    if rep.errors:
        return EXIT_ERROR
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    results = _verify.run(args.level)
    if args.format == "json":
        doc = {"level": args.level, "passed": _verify.passed(results), "checks": [
            {"name": c.name, "passed": c.passed, "blocking": c.blocking, "detail": c.detail,
             **({"seconds": round(c.seconds, 6)} if not args.no_timing else {})}
            for c in results]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for c in results:
            line = c.line()
            if args.no_timing:
                line = line.rsplit(" (", 1)[0]
            out.write(line + "\n")
        ok = _verify.passed(results)
        out.write(f"{'all blocking checks passed' if ok else 'verification FAILED'}\n")
    return EXIT_OK if _verify.passed(results) else EXIT_MISMATCH


def cmd_list(args, out) -> int:
    catalog = load_catalog()
    entries = sorted(catalog.all_entries(args.max_order), key=lambda e: e.order)
    if args.format == "json":
        doc = {"groups": [{"name": e.name, "order": e.order, "kind": e.kind,
                           "abelian": e.abelian, "typeset": e.typeset} for e in entries]}
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "order", "kind", "abelian"])
        for e in entries:
            w.writerow([e.name, e.order, e.kind, _fmt(e.abelian)])
        out.write(buf.getvalue())
        return EXIT_OK
    for e in entries:
        out.write(f"{e.order:>3}  {e.name:<16} {e.kind:<9} {e.typeset}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "csv", "json"), default="md")
    common.add_argument("--threads", type=int, default=_default_threads())
    common.add_argument("--no-timing", action="store_true")
    common.add_argument("--diagnostics", action="store_true",
                        help="evaluate the table's higher-genus annotations (never affects exit code)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest state space |G|^(2n) to enumerate")
    common.add_argument("--i-know-this-is-huge", dest="huge", action="store_true",
                        help="allow genus >= 3 beyond the default budget")

    p = argparse.ArgumentParser(prog="gcob", description="Genus-graded invariants of small finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="reproduce the table of groups")
    t.add_argument("--max-order", type=int, default=30)
    t.add_argument("--genus-max", type=int, default=1)
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("compute", parents=[common], help="invariants of one group")
    c.add_argument("group", help="catalog name, family spec (cyclic:12, elemab:3,2) or generator file")
    c.add_argument("--genus", type=int, default=1)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", parents=[common], help="run the property suites")
    v.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", parents=[common], help="list catalog entries")
    ls.add_argument("--max-order", type=int, default=None)
    ls.set_defaults(func=cmd_list)
    return p


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    for attr in ("genus", "genus_max"):
        if getattr(args, attr, 1) < 1:
            print(f"gcob: --{attr.replace('_', '-')} must be at least 1", file=sys.stderr)
            return EXIT_ERROR
    try:
        return args.func(args, out)
    except GcobError as exc:
        print(f"gcob: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
