"""``hamred`` command line: verification suites, reductions and identification.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import QuotientAlgebra
from .catalog import CatalogError, entry, load_action, names
from .fuzz import default_seed
from .identify import identify
from .reduction import ReductionError
from .suites import TARGETS, dumps, reduce_report, run_fuzz, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_STAGES = ("algebra", "ideal", "invariants", "intersection")


def format_text(report: dict) -> str:
    """Table in proof order: ideal, invariants, intersection, quotient, identification."""
    lines = [f"== {report['action']} ==  {'PASS' if report['pass'] else 'FAIL'}"]
    dims = report.get("dims", {})
    for k in _STAGES:
        if k in dims:
            lines.append(f"  {k:<14} dim {dims[k]}")
    if "quotient_even" in dims:
        lines.append(f"  {'quotient':<14} dim ({dims['quotient_even']}|{dims['quotient_odd']})")
    if "module_even" in dims:
        lines.append(f"  {'module':<14} dim ({dims['module_even']}|{dims['module_odd']})")
    ident = report.get("identification")
    if ident:
        if "tag" in ident:
            ident = {"quotient": ident}
        for what, w in ident.items():
            lines.append(f"  identified {what} as {w['tag']}")
            for r in w["relations"]:
                lines.append(f"    {'ok ' if r['holds'] else 'BAD'} {r['relation']}")
            for note in w["notes"]:
                lines.append(f"    note: {note}")
    if report.get("witness_elements"):
        lines.append("  witnesses:")
        for k, v in sorted(report["witness_elements"].items()):
            lines.append(f"    {k} = {v}")
    if report.get("checks"):
        lines.append("  checks:")
        for k, ok in report["checks"].items():
            lines.append(f"    [{'PASS' if ok else 'FAIL'}] {k}")
    for k, v in report.get("info", {}).items():
        lines.append(f"  info: {k}: {v}")
    if report.get("timings"):
        lines.append("  timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in report["timings"].items()))
    return "\n".join(lines)


def _emit(reports: list[dict], args) -> None:
    payload = reports[0] if len(reports) == 1 else reports
    if args.json:
        text = dumps(payload) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.text or not args.json:
        print("\n\n".join(format_text(r) for r in reports))


def cmd_verify(args) -> int:
    if args.target != "all" and args.target not in TARGETS:
        print(f"unknown target {args.target!r}; choose from {', '.join([*TARGETS, 'all'])}", file=sys.stderr)
        return EXIT_USAGE
    reports = verify(args.target)
    if args.fuzz:
        try:
            seed = default_seed()
        except ValueError as exc:
            print(exc, file=sys.stderr)
            return EXIT_USAGE
        reports.append(run_fuzz(args.fuzz, seed))
    _emit(reports, args)
    return EXIT_OK if all(r["pass"] for r in reports) else EXIT_FAIL


def cmd_reduce(args) -> int:
    ent = None
    try:
        if args.action in names():
            ent = entry(args.action)
            spec = ent.spec
        else:
            if not Path(args.action).is_file():
                print(f"{args.action!r} is neither a catalog name ({', '.join(names())}) nor a file", file=sys.stderr)
                return EXIT_USAGE
            spec = load_action(Path(args.action))
    except CatalogError as exc:
        print(f"bad action: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = reduce_report(spec, with_morita=not args.no_morita, ent=ent)
    except ReductionError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit([report], args)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_identify(args) -> int:
    try:
        data = json.loads(Path(args.file).read_text())
        B = QuotientAlgebra.from_json(data)
    except (OSError, ValueError) as exc:
        print(f"bad algebra file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    checks = {"unital": B.check_unit(), "associative": B.check_associative(), "parity-graded": B.check_parity()}
    if not all(checks.values()):
        bad = ", ".join(k for k, v in checks.items() if not v)
        print(f"not a unital associative superalgebra ({bad})", file=sys.stderr)
        return EXIT_USAGE
    tag, witness = identify(B)
    if args.json:
        out = dumps(witness.to_json()) + "\n"
        if args.json == "-":
            sys.stdout.write(out)
        else:
            Path(args.json).write_text(out)
    print(tag)
    if args.text:
        for r in witness.relations:
            print(f"  {'ok ' if r[1] else 'BAD'} {r[0]}")
        for k, v in witness.to_json()["images"].items():
            print(f"  {k} -> [{', '.join(v)}]")
        for note in witness.notes:
            print(f"  note: {note}")
    return EXIT_OK if witness.holds else EXIT_FAIL


def cmd_catalog(args) -> int:
    for name in names():
        ent = entry(name)
        sig = ent.spec.signature
        print(f"{name:<16} n={sig.n:<2} generators={len(ent.spec.generators):<3} expect={ent.outcome_tag:<10} {ent.description}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hamred", description="Exact Hamiltonian reduction of Clifford superalgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("target", help=f"one of {', '.join(TARGETS)}, all")
    v.add_argument("--fuzz", type=int, default=0, metavar="N",
                   help="also run randomized law checks (10N associativity triples, N per other law); seed from HAMRED_SEED")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="reduce a catalog action or an action JSON file")
    r.add_argument("action")
    r.add_argument("--no-morita", action="store_true", help="skip the module/endomorphism checks")
    r.set_defaults(func=cmd_reduce)

    for sp in (v, r):
        sp.add_argument("--json", metavar="PATH", help="write the canonical JSON report ('-' for stdout)")
        sp.add_argument("--text", action="store_true", help="print the text table even with --json")

    i = sub.add_parser("identify", help="identify an algebra from structure-constant JSON")
    i.add_argument("file")
    i.add_argument("--json", metavar="PATH", help="write the witness as JSON ('-' for stdout)")
    i.add_argument("--text", action="store_true", help="print relations and images")
    i.set_defaults(func=cmd_identify)

    c = sub.add_parser("catalog", help="list catalog entries")
    c.add_argument("what", nargs="?", default="list", choices=["list"])
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.fuzz < 0:
        print("--fuzz must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
