"""Command-line front end.

Exit codes are shared by every subcommand. A run that succeeds, or a check
that passes, exits with 0. Usage and I/O errors exit with 1. A mathematical
failure such as a nonzero residual exits with 2.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .algebra import ALGEBRAS, AlgebraError, KINDS
from .catalog import (
    DiscrepancyRecord,
    FamilyError,
    all_families,
    export_catalog,
    get_family,
    instantiate,
    supplementary_families,
    verify_symbolic,
)
from .exactalg import GF, QQ, Field
from .rbcore import LinearOperator, NotRBError, check_rb, classify, kernel_basis, resolve_spec
from .search import SearchError, compare_lie_vs_assoc, coverage, key_to_operator, scan

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2

FIELDS = ("Q", "F3", "F5", "F7")


class UsageError(Exception):
    """Bad input that should end the run with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    algebra: str | None
    field: Field
    weight: object
    out: str | None
    jobs: int
    timestamp: bool


# ---------------------------------------------------------------- parsing helpers


def parse_field(name: str) -> Field:
    if name == "Q":
        return QQ
    return GF(int(name[1:]))


def parse_weight(text: str, field: Field, nonzero: bool = True):
    try:
        lam = field.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"weight {text!r} is not a scalar of {field.name}") from exc
    if nonzero and field.is_zero(lam):
        raise UsageError("weight must be nonzero")
    return lam


def read_matrix(source: str, field: Field, dim: int) -> LinearOperator:
    """Parse a JSON 2-D array of scalar strings; ``source`` is inline JSON or a path (``-`` reads stdin)."""
    text = _matrix_text(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix JSON: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise UsageError("matrix must be a JSON array of rows")
    if len(data) != dim or any(len(r) != dim for r in data):
        raise UsageError(f"matrix must be {dim}x{dim} for this algebra")
    rows = []
    for i, r in enumerate(data):
        row = []
        for j, x in enumerate(r):
            if isinstance(x, bool) or not isinstance(x, (str, int)):
                raise UsageError(f"matrix entry [{i}][{j}] must be a string or integer")
            try:
                row.append(field.parse(x))
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"matrix entry [{i}][{j}]: {exc}") from exc
        rows.append(tuple(row))
    return LinearOperator(tuple(rows), field)


def _matrix_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith("["):
        return source
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read matrix file {source!r}: {exc.strerror}") from exc


def _prime(cfg: RunConfig) -> int:
    p = cfg.field.characteristic
    if not p:
        raise UsageError(f"{cfg.command} needs a prime field (F3, F5 or F7)")
    return p


# ---------------------------------------------------------------- output

_FLAT_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def _pretty(obj) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(obj, indent=2)
    return _FLAT_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)


class _Sink:
    def __init__(self, path: str | None):
        self.path = path
        self.lines: list = []

    def document(self, obj, cfg: RunConfig):
        if cfg.timestamp and isinstance(obj, dict):
            obj = {**obj, "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}
        self.lines.append(_pretty(obj))

    def record(self, obj):
        self.lines.append(json.dumps(obj, separators=(",", ":")))

    def flush(self):
        text = "".join(line + "\n" for line in self.lines)
        if self.path is None:
            sys.stdout.write(text)
            return
        try:
            Path(self.path).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {self.path!r}: {exc.strerror}") from exc


# ---------------------------------------------------------------- commands


def cmd_verify_family(args, cfg, sink) -> int:
    try:
        fam = get_family(args.family)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    out = {"family": fam.id, "algebra": fam.algebra, "mode": args.mode, "source": fam.source}
    if args.mode == "symbolic":
        weight = None if args.weight is None else parse_weight(args.weight, QQ)
        result = verify_symbolic(fam, weight)
        if isinstance(result, DiscrepancyRecord):
            out.update(verdict="fail", discrepancy=result.to_json())
        else:
            out.update(result.to_json())
    else:
        assignment = dict(fam.sample)
        if args.weight is not None:
            assignment["lam"] = parse_weight(args.weight, QQ)
        try:
            R = instantiate(fam, assignment, field=QQ)
        except FamilyError as exc:
            out.update(verdict="fail", error=str(exc))
            sink.document(out, cfg)
            return EXIT_MATH
        out["assignment"] = {k: QQ.format(v) for k, v in sorted(assignment.items())}
        out["matrix"] = R.to_strings()
        out.update(check_rb(fam.spec, R, assignment["lam"]).to_json())
    sink.document(out, cfg)
    return EXIT_OK if out["verdict"] == "pass" else EXIT_MATH


def cmd_verify_operator(args, cfg, sink) -> int:
    spec = resolve_spec(cfg.algebra, args.kind)
    R = read_matrix(args.matrix, cfg.field, spec.dim)
    report = check_rb(spec, R, cfg.weight)
    sink.document(
        {"algebra": spec.name, "kind": spec.kind, "field": cfg.field.name,
         "weight": cfg.field.format(cfg.weight), **report.to_json()},
        cfg,
    )
    return EXIT_OK if report.passed else EXIT_MATH


def cmd_classify(args, cfg, sink) -> int:
    spec = resolve_spec(cfg.algebra, args.kind)
    R = read_matrix(args.matrix, cfg.field, spec.dim)
    out = {"algebra": spec.name, "field": cfg.field.name, "weight": cfg.field.format(cfg.weight)}
    try:
        c = classify(spec, R, cfg.weight)
    except NotRBError as exc:
        out.update(verdict="fail", error=str(exc))
        sink.document(out, cfg)
        return EXIT_MATH
    out.update(verdict="pass", **c.to_json(cfg.field))
    sink.document(out, cfg)
    return EXIT_OK


def _matches(keys, algebra, p, lam, supplementary):
    report = coverage(keys, algebra, p, lam, supplementary=supplementary)
    return report, {m.key: m for m in report.matches}


def cmd_search(args, cfg, sink) -> int:
    p = _prime(cfg)
    lam = int(cfg.weight)
    keys = scan(cfg.algebra, p, lam, cfg.jobs, args.partitions)
    _, matches = _matches(keys, cfg.algebra, p, lam, args.supplementary)
    for key in keys:
        R = key_to_operator(key, p)
        m = matches[key]
        sink.record({
            "matrix": R.to_strings(),
            "kernel_dim": kernel_basis(R).dim,
            "matched_family": m.family,
            "via": m.via,
        })
    return EXIT_OK


def cmd_coverage(args, cfg, sink) -> int:
    p = _prime(cfg)
    lam = int(cfg.weight)
    keys = scan(cfg.algebra, p, lam, cfg.jobs, args.partitions)
    report = coverage(
        keys, cfg.algebra, p, lam,
        automorphism=not args.no_automorphism, supplementary=args.supplementary,
    )
    sink.document(report.to_json(), cfg)
    return EXIT_OK


def cmd_compare(args, cfg, sink) -> int:
    p = _prime(cfg)
    for c in compare_lie_vs_assoc(p, int(cfg.weight), cfg.jobs):
        pair, residual = c.assoc_report.residuals[0]
        sink.record({
            "matrix": c.lie_operator.to_strings(),
            "matrix_xgx": c.assoc_operator.to_strings(),
            "kernel_dim": kernel_basis(c.lie_operator).dim,
            "lie_verdict": c.lie_report.verdict,
            "assoc_verdict": c.assoc_report.verdict,
            "assoc_failure": {"pair": list(pair), "residual": [str(x) for x in residual]},
        })
    return EXIT_OK


def cmd_export_catalog(args, cfg, sink) -> int:
    families = all_families() + (supplementary_families() if args.supplementary else ())
    sink.lines.append(export_catalog(families))
    return EXIT_OK


def cmd_sweep(args, cfg, sink) -> int:
    families = all_families() + (supplementary_families() if args.supplementary else ())
    failed = 0
    for fam in families:
        if args.filter and not fam.id.startswith(args.filter):
            continue
        result = verify_symbolic(fam)
        if isinstance(result, DiscrepancyRecord):
            failed += 1
            sink.record({"family": fam.id, "verdict": "fail", "discrepancy": result.to_json()})
        else:
            sink.record({"family": fam.id, "verdict": "pass"})
    return EXIT_MATH if failed else EXIT_OK


COMMANDS = {
    "verify-family": cmd_verify_family,
    "verify-operator": cmd_verify_operator,
    "classify": cmd_classify,
    "search": cmd_search,
    "coverage": cmd_coverage,
    "compare": cmd_compare,
    "export-catalog": cmd_export_catalog,
    "sweep": cmd_sweep,
}


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp field from JSON documents")

    def algebra_opts(p, required=True, weight="1", fields=FIELDS, field="Q"):
        p.add_argument("--algebra", choices=sorted(ALGEBRAS), required=required)
        p.add_argument("--field", choices=fields, default=field)
        p.add_argument("--weight", default=weight, help="weight lambda as a scalar string")

    def scan_opts(p):
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        p.add_argument("--partitions", type=int, default=None,
                       help="number of prefix partitions (default 8 per worker)")
        p.add_argument("--supplementary", action="store_true",
                       help="also match against the scan-derived supplementary families")

    parser = _Parser(prog="rbh4", description="Rota-Baxter operators on H4 and its relatives.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify-family", parents=[common], help="verify one catalog family")
    p.add_argument("family")
    p.add_argument("--mode", choices=("symbolic", "sample"), default="symbolic")
    p.add_argument("--weight", default=None,
                   help="numeric weight (symbolic lambda when omitted in symbolic mode)")

    p = sub.add_parser("verify-operator", parents=[common], help="check the RB identity")
    algebra_opts(p)
    p.add_argument("--kind", choices=("auto",) + KINDS, default="auto")
    p.add_argument("--matrix", required=True, help="inline JSON, a file path, or - for stdin")

    p = sub.add_parser("classify", parents=[common], help="kernel and image data of an RB operator")
    algebra_opts(p)
    p.add_argument("--kind", choices=("auto",) + KINDS, default="auto")
    p.add_argument("--matrix", required=True, help="inline JSON, a file path, or - for stdin")

    p = sub.add_parser("search", parents=[common], help="all RB operators over F_p as JSON lines")
    algebra_opts(p, fields=FIELDS[1:], field="F3")
    scan_opts(p)

    p = sub.add_parser("coverage", parents=[common], help="match a full scan against the catalog")
    algebra_opts(p, fields=FIELDS[1:], field="F3")
    scan_opts(p)
    p.add_argument("--no-automorphism", action="store_true",
                   help="do not retry unmatched operators after conjugation")

    p = sub.add_parser("compare", parents=[common],
                       help="Lie RB operators on H4(-) that fail the associative identity")
    p.add_argument("--field", choices=("F3",), default="F3")
    p.add_argument("--weight", default="1")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("export-catalog", parents=[common], help="the catalog as JSON")
    p.add_argument("--supplementary", action="store_true")

    p = sub.add_parser("sweep", parents=[common], help="symbolic verdict for every family")
    p.add_argument("--filter", default="", help="only families whose id starts with this")
    p.add_argument("--supplementary", action="store_true")
    return parser


def make_config(args) -> RunConfig:
    field = parse_field(getattr(args, "field", "Q"))
    weight = None
    if args.command in ("verify-operator", "classify", "search", "coverage", "compare"):
        weight = parse_weight(args.weight, field, nonzero=args.command != "verify-operator")
    jobs = getattr(args, "jobs", 1)
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return RunConfig(
        command=args.command,
        algebra=getattr(args, "algebra", None),
        field=field,
        weight=weight,
        out=args.out,
        jobs=jobs,
        timestamp=not args.no_timestamp,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    sink = _Sink(args.out)
    try:
        cfg = make_config(args)
        code = COMMANDS[args.command](args, cfg, sink)
        sink.flush()
    except (UsageError, SearchError, AlgebraError) as exc:
        print(f"rbh4 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
