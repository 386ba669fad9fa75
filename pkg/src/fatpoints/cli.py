"""Command-line front end: single values, tables, formula-vs-oracle
verification, defect scans, the plane reduction, and the two-step traces.

Exit codes: 0 success or full agreement, 1 semantic disagreement, 2 bad
usage or configuration. FATPOINTS_PRIME and FATPOINTS_SEED preload the
corresponding flags; explicit flags win.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass

from .core import BiDegree, HFValue, Source, UniformFatPoints, hf_value
from .formulas import hf_uniform, reduce_to_plane, table_region
from .horace import verify_chain
from .oracle import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    OracleConfig,
    OracleConfigError,
    check_reduction,
    hf_biproj,
)

CSV_HEADER = ["a", "b", "m", "s", "value", "source", "known", "defective", "defect"]
JSON_KEYS = CSV_HEADER + ["virtual_dim", "expected_dim"]


@dataclass(frozen=True)
class OutputRecord:
    a: int
    b: int
    m: int
    s: int
    value: int | None
    source: str
    known: bool
    defective: bool
    defect: int
    virtual_dim: int
    expected_dim: int

    def to_dict(self) -> dict:
        data = asdict(self)
        return {key: data[key] for key in JSON_KEYS}

    @staticmethod
    def from_dict(data: dict) -> "OutputRecord":
        return OutputRecord(**{key: data[key] for key in JSON_KEYS})


def make_record(deg: BiDegree, pts: UniformFatPoints, hf: HFValue) -> OutputRecord:
    return OutputRecord(
        a=deg.a,
        b=deg.b,
        m=pts.m,
        s=pts.s,
        value=hf.value,
        source=hf.source.value,
        known=hf.known,
        defective=hf.defective,
        defect=hf.defect,
        virtual_dim=hf.virtual_dim,
        expected_dim=hf.expected_dim,
    )


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise OracleConfigError(f"{name} must be an integer, got {raw!r}")


def _oracle_args(parser: argparse.ArgumentParser):
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="rank trials per instance (max is taken)")
    parser.add_argument("--seed", type=int, default=None,
                        help="master seed (default: FATPOINTS_SEED or 0)")
    parser.add_argument("--prime", type=int, default=None,
                        help="field prime (default: FATPOINTS_PRIME or 2^31-1)")


def _oracle_config(args) -> OracleConfig:
    seed = args.seed if args.seed is not None else _env_int("FATPOINTS_SEED", DEFAULT_SEED)
    prime = args.prime if args.prime is not None else _env_int("FATPOINTS_PRIME", DEFAULT_PRIME)
    return OracleConfig(prime=prime, trials=args.trials, seed=seed)


def _print_record(record: OutputRecord, fmt: str):
    if fmt == "json":
        print(json.dumps(record.to_dict()))
    elif fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        row = record.to_dict()
        writer.writerow([row[key] if row[key] is not None else "" for key in CSV_HEADER])
        print(out.getvalue(), end="")
    else:
        for key in JSON_KEYS:
            value = record.to_dict()[key]
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif value is None:
                value = "unknown"
            print(f"{key} = {value}")


def cmd_hf(args) -> int:
    deg = BiDegree(args.a, args.b)
    pts = UniformFatPoints(args.s, args.m)
    hf = hf_uniform(deg, pts)
    if args.mode == "oracle" or (args.mode == "auto" and hf.value is None):
        cfg = _oracle_config(args)
        rank = hf_biproj(deg, (pts.m,) * pts.s, cfg)
        hf = hf_value(rank, deg, pts, source=Source.ORACLE, known=hf.known)
    _print_record(make_record(deg, pts, hf), args.format)
    return 0


def _cell_marks(hf: HFValue, mark_defective: bool) -> str:
    marks = ""
    if mark_defective and hf.defective:
        marks += "*"
    if hf.source is Source.ORACLE:
        marks += "?"
    return marks


def render_table(grid, mark_defective: bool) -> str:
    cells = [
        [("-" if hf.value is None else str(hf.value)) + _cell_marks(hf, mark_defective)
         for hf in row]
        for row in grid
    ]
    a_max = len(grid[0]) - 1
    header = [r"b\a"] + [str(a) for a in range(a_max + 1)]
    width = max(len(text) for row in [header] + cells for text in row)
    lines = [" ".join(text.rjust(width) for text in header)]
    for b, row in enumerate(cells):
        lines.append(" ".join(text.rjust(width) for text in [str(b)] + row))
    return "\n".join(lines)


def cmd_table(args) -> int:
    oracle = _oracle_config(args) if args.oracle_unknown else None
    grid = table_region(args.m, args.s, args.amax, args.bmax, oracle)
    pts = UniformFatPoints(args.s, args.m)
    if args.format == "text":
        print(render_table(grid, args.mark_defective))
        return 0
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["a", "b", "value", "flags"])
        for b, row in enumerate(grid):
            for a, hf in enumerate(row):
                flags = ("*" if hf.defective else "") + ("?" if hf.source is Source.ORACLE else "")
                writer.writerow([a, b, hf.value if hf.value is not None else "", flags])
        print(out.getvalue(), end="")
        return 0
    records = [
        make_record(BiDegree(a, b), pts, hf).to_dict()
        for b, row in enumerate(grid)
        for a, hf in enumerate(row)
    ]
    print(json.dumps(records))
    return 0


def cmd_verify(args) -> int:
    cfg = _oracle_config(args)
    pts = UniformFatPoints(args.s, args.m)
    mismatches = []
    checked = 0
    inject = args.inject_mismatch
    for b in range(args.bmax + 1):
        for a in range(args.amax + 1):
            deg = BiDegree(a, b)
            hf = hf_uniform(deg, pts)
            if hf.value is None:
                continue
            formula = hf.value
            if inject:
                formula += 1
                inject = False
            oracle = hf_biproj(deg, (pts.m,) * pts.s, cfg)
            checked += 1
            if formula != oracle:
                mismatches.append((a, b, formula, oracle))
    if mismatches:
        for a, b, formula, oracle in mismatches:
            print(f"MISMATCH a={a} b={b}: formula {formula} != oracle {oracle}")
        print(f"{checked - len(mismatches)}/{checked} cells confirmed, "
              f"{len(mismatches)} mismatches")
        return 1
    print(f"{checked}/{checked} cells confirmed")
    return 0


def cmd_defects(args) -> int:
    pts = UniformFatPoints(args.s, args.m)
    records = []
    for b in range(1, args.bmax + 1):
        for a in range(1, args.amax + 1):
            deg = BiDegree(a, b)
            hf = hf_uniform(deg, pts)
            if hf.value is not None and hf.defective:
                records.append(make_record(deg, pts, hf))
    if args.format == "json":
        print(json.dumps([record.to_dict() for record in records]))
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER)
        for record in records:
            row = record.to_dict()
            writer.writerow([row[key] for key in CSV_HEADER])
        print(out.getvalue(), end="")
    else:
        if not records:
            print("no defective cells")
        for record in records:
            print(f"a={record.a} b={record.b} value={record.value} defect={record.defect}")
    return 0


def cmd_reduce(args) -> int:
    deg = BiDegree(args.a, args.b)
    pts = UniformFatPoints(args.s, args.m)
    scheme, d = reduce_to_plane(deg, pts)
    mults = ",".join(str(m) for m in scheme.general)
    print(f"plane scheme: {scheme.corner_a}Q1 + {scheme.corner_b}Q2 + points [{mults}]")
    print(f"plane degree: {d}")
    cfg = _oracle_config(args)
    if check_reduction(deg, pts, cfg):
        print("ideal dimensions agree")
        return 0
    print("MISMATCH between the two models")
    return 1


def cmd_horace(args) -> int:
    cfg = _oracle_config(args)
    report = verify_chain(args.a, args.b, args.s, cfg)
    step1, step2 = report.step1, report.step2
    print(f"a+b = 5*{step1.h} + {step1.c}; on-line points: x={step1.x} y={step1.y}")
    print("step 1 slices:", [lp.slice_width for lp in step1.config.line_points])
    print("step 1 residual profiles:",
          [list(pr.widths) for pr in step1.residual.on_line])
    print("step 2 slices:", [lp.slice_width for lp in step2.config.line_points])
    print("step 2 residual profiles:",
          [list(pr.widths) for pr in step2.residual.on_line])
    d = args.a + args.b
    print(f"dim at {d} (general) = {report.generic_dim}")
    print(f"dim at {d - 2} (first residual) = {report.residual1_dim}")
    print(f"dim at {d - 4} (second residual) = {report.residual2_dim}")
    print(f"specialized dims: {report.specialized1_dim} at {d}, "
          f"{report.specialized2_dim} at {d - 2}")
    if report.ok:
        print("chain verified")
        return 0
    print("chain FAILED")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Hilbert functions of equal-multiplicity fat points on "
                    "the doubly ruled quadric, with an exact rank oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hf = sub.add_parser("hf", help="one Hilbert-function value")
    p_hf.add_argument("--a", type=_nonneg, required=True)
    p_hf.add_argument("--b", type=_nonneg, required=True)
    p_hf.add_argument("--m", type=int, required=True)
    p_hf.add_argument("--s", type=_nonneg, required=True)
    p_hf.add_argument("--mode", choices=["auto", "formula", "oracle"], default="auto")
    p_hf.add_argument("--format", choices=["text", "json", "csv"], default="text")
    _oracle_args(p_hf)
    p_hf.set_defaults(func=cmd_hf)

    p_table = sub.add_parser("table", help="grid of values, b rows by a columns")
    p_table.add_argument("--m", type=int, required=True)
    p_table.add_argument("--s", type=_nonneg, required=True)
    p_table.add_argument("--amax", type=_nonneg, required=True)
    p_table.add_argument("--bmax", type=_nonneg, required=True)
    p_table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_table.add_argument("--mark-defective", action="store_true",
                         help="append * to defective cells in text output")
    p_table.add_argument("--oracle-unknown", action="store_true",
                         help="resolve unknown cells with the rank oracle (marked ?)")
    _oracle_args(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="compare formulas against the oracle")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--s", type=_nonneg, required=True)
    p_verify.add_argument("--amax", type=_nonneg, required=True)
    p_verify.add_argument("--bmax", type=_nonneg, required=True)
    p_verify.add_argument("--inject-mismatch", action="store_true",
                          help="perturb one formula value (reporter self-test)")
    _oracle_args(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_defects = sub.add_parser("defects", help="list defective cells in a rectangle")
    p_defects.add_argument("--m", type=int, required=True)
    p_defects.add_argument("--s", type=_nonneg, required=True)
    p_defects.add_argument("--amax", type=_nonneg, required=True)
    p_defects.add_argument("--bmax", type=_nonneg, required=True)
    p_defects.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_defects.set_defaults(func=cmd_defects)

    p_reduce = sub.add_parser("reduce", help="show the plane model and confirm it")
    p_reduce.add_argument("--a", type=_nonneg, required=True)
    p_reduce.add_argument("--b", type=_nonneg, required=True)
    p_reduce.add_argument("--m", type=int, required=True)
    p_reduce.add_argument("--s", type=_nonneg, required=True)
    _oracle_args(p_reduce)
    p_reduce.set_defaults(func=cmd_reduce)

    p_horace = sub.add_parser("horace", help="run the two-step trace for triple points")
    p_horace.add_argument("--a", type=_nonneg, required=True)
    p_horace.add_argument("--b", type=_nonneg, required=True)
    p_horace.add_argument("--s", type=_nonneg, required=True)
    _oracle_args(p_horace)
    p_horace.set_defaults(func=cmd_horace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OracleConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
