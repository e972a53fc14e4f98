"""Command-line front end.

Subcommands: ``triangle``, ``enumerate``, ``map``, ``verify``,
``conjecture``.  Exit codes: 0 success, 1 verification failure, 2 usage
or guard error, 3 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from . import bijections, families, triangles, verify
from .core import (
    InvalidPermutationError,
    InvalidTreeError,
    Tree,
    perm_from_text,
    perm_to_text,
    tree_from_literal,
    tree_to_json,
    tree_to_literal,
)

SCHEMA = "zigzag/1"
TRIANGLE_N_CAP = 50

_MAPS = {
    "omega": (bijections.omega, "tree"),
    "omega-inv": (bijections.omega_inv, "perm"),
    "phi": (bijections.phi, "perm"),
    "phi-inv": (bijections.phi_inv, "perm"),
    "psi": (bijections.psi, "perm"),
    "psi-b": (bijections.psi_b, "perm"),
    "psi-inv": (bijections.psi_inv, "tree"),
    "psi-signed": (bijections.psi_signed, "perm"),
    "omega-signed": (bijections.omega_signed, "tree"),
    "phi-signed": (bijections.phi_signed, "perm"),
    "chuang-phi": (bijections.chuang_phi, "tree"),
}


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigzag",
        description="Entringer/Arnold triangles, zigzag families, and bijections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="print a number triangle")
    tri.add_argument("kind", choices=["entringer", "arnold"])
    tri.add_argument("--n", type=int, required=True, help="number of rows")
    tri.add_argument(
        "--format",
        choices=["text", "json", "csv", "boustrophedon"],
        default="text",
    )
    tri.add_argument("--force", action="store_true", help="override size guards")
    tri.add_argument("--output", help="write to file instead of stdout")

    enu = sub.add_parser("enumerate", help="stream a family of objects")
    enu.add_argument("family", choices=[t.value for t in families.FamilyTag])
    enu.add_argument("--n", type=int, required=True)
    enu.add_argument("--k", type=int, help="refinement value")
    enu.add_argument("--format", choices=["text", "json"], default="text")
    enu.add_argument("--force", action="store_true", help="override size guards")
    enu.add_argument("--output", help="write to file instead of stdout")

    mp = sub.add_parser("map", help="apply one of the bijections")
    mp.add_argument("name", choices=sorted(_MAPS))
    mp.add_argument("--input", required=True, help="permutation text or tree literal")
    mp.add_argument("--trace", action="store_true", help="print grafting steps (psi)")
    mp.add_argument("--format", choices=["text", "json"], default="text")
    mp.add_argument("--output", help="write to file instead of stdout")

    ver = sub.add_parser("verify", help="run the exhaustive theorem checks")
    ver.add_argument("--checks", help="comma-separated check ids (default: all)")
    ver.add_argument("--n-max-a", type=int, default=verify.DEFAULT_N_MAX_A)
    ver.add_argument("--n-max-b", type=int, default=verify.DEFAULT_N_MAX_B)
    ver.add_argument("--format", choices=["json", "text"], default="json")
    ver.add_argument("--force", action="store_true", help="override size caps")
    ver.add_argument("--output", help="write to file instead of stdout")

    con = sub.add_parser("conjecture", help="run the open-conjecture sweep")
    con.add_argument(
        "--n-max", type=int, default=verify.DEFAULT_N_MAX_CONJECTURE
    )
    con.add_argument("--format", choices=["json", "text"], default="json")
    con.add_argument("--force", action="store_true", help="override size caps")
    con.add_argument("--output", help="write to file instead of stdout")

    return parser


def _object_out(obj) -> str:
    if isinstance(obj, Tree):
        return tree_to_literal(obj)
    return perm_to_text(obj)


def _object_json(obj):
    if isinstance(obj, Tree):
        return tree_to_json(obj)
    return list(obj)


def _cmd_triangle(args, out: IO[str]) -> int:
    if args.n > TRIANGLE_N_CAP and not args.force:
        raise _CliError(
            f"triangle rows capped at {TRIANGLE_N_CAP}; pass --force to override", 2
        )
    if args.n < 1:
        raise _CliError("--n must be at least 1", 2)
    table = (
        triangles.entringer_table(args.n)
        if args.kind == "entringer"
        else triangles.arnold_table(args.n)
    )
    if args.format == "csv":
        for line in triangles.csv_lines(table):
            print(line, file=out)
    elif args.format == "json":
        doc = {"schema": SCHEMA, "kind": args.kind, "rows": triangles.json_rows(table)}
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "boustrophedon":
        for line in triangles.boustrophedon_lines(table):
            print(line, file=out)
    else:
        for n in range(1, table.n_max + 1):
            cells = " ".join(str(v) for _, v in table.row(n))
            print(f"n={n}: {cells} | {table.row_sums[n - 1]}", file=out)
    return 0


def _cmd_enumerate(args, out: IO[str]) -> int:
    stream = families.iter_family(args.family, args.n, args.k, args.force)
    if args.format == "json":
        objs = [_object_json(obj) for obj in stream]
        doc = {
            "schema": SCHEMA,
            "family": args.family,
            "n": args.n,
            "k": args.k,
            "objects": objs,
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for obj in stream:
            print(_object_out(obj), file=out)
    return 0


def _cmd_map(args, out: IO[str]) -> int:
    func, domain = _MAPS[args.name]
    if domain == "tree":
        value = tree_from_literal(args.input)
    else:
        value = perm_from_text(args.input)
    trace = None
    if args.name == "psi" and args.trace:
        result, trace = bijections.psi_c(value)
    else:
        result = func(value)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "map": args.name,
            "input": _object_json(value),
            "output": _object_json(result),
        }
        if trace is not None:
            doc["trace"] = [
                {"i": s.index, "a": s.a, "b": s.b, "case": s.case}
                for s in trace.steps
            ]
        print(json.dumps(doc, indent=2), file=out)
    else:
        print(_object_out(result), file=out)
        if trace is not None:
            for line in trace.lines():
                print(line, file=out)
    return 0


def _print_reports(reports, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2), file=out)
    else:
        for r in reports:
            label = r.check_id
            if "n" in r.params:
                label = f"{r.check_id} n={r.params['n']}"
            extra = f"  [{r.counterexample}]" if r.counterexample else ""
            print(f"{r.status}  {label}  ({r.elapsed:.2f}s){extra}", file=out)


def _cmd_verify(args, out: IO[str]) -> int:
    selection = args.checks.split(",") if args.checks else None
    try:
        reports = verify.run_checks(
            selection, args.n_max_a, args.n_max_b, force=args.force
        )
    except ValueError as exc:
        raise _CliError(str(exc), 2) from None
    _print_reports(reports, args.format, out)
    return 0 if all(r.status == verify.PASS for r in reports) else 1


def _cmd_conjecture(args, out: IO[str]) -> int:
    reports = verify.check_conjecture(args.n_max, force=args.force)
    _print_reports(reports, args.format, out)
    if all(r.status == verify.PASS for r in reports):
        return 0
    for r in reports:
        if r.status != verify.PASS:
            print(f"counterexample: {r.counterexample}", file=out)
    return 3


def dispatch(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run the chosen command, and return the exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "triangle": _cmd_triangle,
        "enumerate": _cmd_enumerate,
        "map": _cmd_map,
        "verify": _cmd_verify,
        "conjecture": _cmd_conjecture,
    }[args.command]
    try:
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as out:
                return handler(args, out)
        return handler(args, sys.stdout)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except families.GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidPermutationError, InvalidTreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(dispatch())
