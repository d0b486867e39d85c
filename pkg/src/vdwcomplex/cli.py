"""Command-line front end.

Subcommands: generate, classify, sweep, inspect, verify-shelling.

Exit codes (stable): 0 success / agreement, 1 disagreement (or invalid
shelling order), 2 usage error, 3 decision budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from vdwcomplex.complexes import MAX_VERTICES, SimplicialComplex
from vdwcomplex.decompose import (
    DEFAULT_SHELLING_BUDGET,
    is_shellable,
    is_vertex_decomposable,
    verify_shelling,
)
from vdwcomplex.homology import is_cohen_macaulay, parse_field
from vdwcomplex.ideals import dual_ideal, is_linearly_presented, taylor_syzygies
from vdwcomplex.vdw import (
    check_max_increment_overlap,
    check_odd_increment_overlap,
    classify_closed_form,
    progression_facets,
    vdw_complex,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

CHECKS = ("vd", "shellable", "cm", "linpres")
SWEEP_LIMITS = {"vd": 9, "shellable": 8, "cm": 10, "linpres": 10}

CSV_COLUMNS = [
    "n",
    "k",
    "pred_vd",
    "pred_shellable",
    "pred_cm",
    "vd",
    "shellable",
    "cm_q",
    "cm_f2",
    "linearly_presented",
    "agreement",
    "ms_vd",
    "ms_shellable",
    "ms_cm_q",
    "ms_cm_f2",
    "ms_linearly_presented",
]


def _field_key(char: int) -> str:
    return "cm_q" if char == 0 else f"cm_f{char}"


def _parse_checks(text: str) -> list[str]:
    checks = [c.strip() for c in text.split(",") if c.strip()]
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {','.join(CHECKS)}")
    if not checks:
        raise ValueError("no checks selected")
    return checks


def _parse_field_args(values) -> list[int]:
    if not values:
        return [0, 2]
    chars = []
    for v in values:
        char = parse_field(v)
        if char not in chars:
            chars.append(char)
    return chars


def _validate_params(n: int, k: int) -> None:
    if not 0 < k < n:
        raise ValueError(f"parameters must satisfy 0 < k < n, got n={n}, k={k}")
    if n > MAX_VERTICES:
        raise ValueError(f"n must be at most {MAX_VERTICES}, got {n}")


def compute_record(
    n: int,
    k: int,
    checks,
    field_chars,
    budget: int = DEFAULT_SHELLING_BUDGET,
    with_timings: bool = True,
) -> dict:
    """Run the selected deciders on vdW(n, k) against the closed form.

    The record carries a computed flag per selected check (None when a
    search was undecided), the predicted flags, and ``agreement`` over
    vertex decomposability, shellability and Cohen-Macaulayness.
    """
    pred = classify_closed_form(n, k)
    rec: dict = {
        "n": n,
        "k": k,
        "pred_vd": pred.vertex_decomposable,
        "pred_shellable": pred.shellable,
        "pred_cm": pred.cohen_macaulay,
    }
    ms: dict = {}
    cx = vdw_complex(n, k)
    mismatch = False
    undecided = False
    if "vd" in checks:
        t0 = time.perf_counter()
        rec["vd"] = is_vertex_decomposable(cx).value
        ms["vd"] = round((time.perf_counter() - t0) * 1000.0, 3)
        mismatch |= rec["vd"] != pred.vertex_decomposable
    if "shellable" in checks:
        t0 = time.perf_counter()
        res = is_shellable(cx, budget)
        ms["shellable"] = round((time.perf_counter() - t0) * 1000.0, 3)
        rec["shellable"] = res.value
        if res.value is None:
            undecided = True
        else:
            mismatch |= res.value != pred.shellable
    if "cm" in checks:
        for char in field_chars:
            t0 = time.perf_counter()
            value = is_cohen_macaulay(cx, char).value
            key = _field_key(char)
            ms[key] = round((time.perf_counter() - t0) * 1000.0, 3)
            rec[key] = value
            mismatch |= value != pred.cohen_macaulay
    if "linpres" in checks:
        t0 = time.perf_counter()
        rec["linearly_presented"] = is_linearly_presented(dual_ideal(cx)).value
        ms["linearly_presented"] = round((time.perf_counter() - t0) * 1000.0, 3)
    rec["agreement"] = not mismatch and not undecided
    if with_timings:
        rec["ms"] = ms
    return rec


def _record_is_undecided(rec: dict) -> bool:
    return "shellable" in rec and rec["shellable"] is None


def _cell(value) -> str:
    if value is None:
        return "undecided"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        ms = rec.get("ms", {})
        row = []
        for col in CSV_COLUMNS:
            if col.startswith("ms_"):
                row.append(_cell(ms[col[3:]]) if col[3:] in ms else "")
            elif col in rec:
                row.append(_cell(rec[col]))
            else:
                row.append("")
        writer.writerow(row)
    return buf.getvalue()


def _records_to_text(records) -> str:
    shown = [c for c in CSV_COLUMNS if not c.startswith("ms_")]
    rows = [shown]
    for rec in records:
        rows.append([_cell(rec[c]) if c in rec else "-" for c in shown])
    widths = [max(len(r[i]) for r in rows) for i in range(len(shown))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sweep_worker(args) -> dict:
    n, k, checks, field_chars, budget, with_timings = args
    return compute_record(n, k, checks, field_chars, budget, with_timings)


# -- subcommands -----------------------------------------------------


def cmd_generate(args) -> int:
    _validate_params(args.n, args.k)
    if args.format == "text":
        facets = progression_facets(args.n, args.k)
        text = "\n".join(" ".join(map(str, f.vertices)) for f in facets) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["start", "increment", "vertices"])
        for f in progression_facets(args.n, args.k):
            writer.writerow([f.start, f.increment, " ".join(map(str, f.vertices))])
        text = buf.getvalue()
    else:
        text = vdw_complex(args.n, args.k).to_json() + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    _validate_params(args.n, args.k)
    checks = _parse_checks(args.checks)
    field_chars = _parse_field_args(args.field)
    rec = compute_record(
        args.n, args.k, checks, field_chars, args.budget, with_timings=not args.no_timings
    )
    if args.format == "csv":
        text = _records_to_csv([rec])
    elif args.format == "text":
        text = _records_to_text([rec])
    else:
        text = json.dumps(rec, separators=(",", ":")) + "\n"
    _emit(text, args.output)
    if _record_is_undecided(rec):
        return EXIT_UNDECIDED
    return EXIT_OK if rec["agreement"] else EXIT_DISAGREE


def cmd_sweep(args) -> int:
    if args.n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {args.n_max}")
    checks = _parse_checks(args.checks)
    if not args.force:
        for check in checks:
            if args.n_max > SWEEP_LIMITS[check]:
                raise ValueError(
                    f"check {check!r} is limited to n_max <= {SWEEP_LIMITS[check]} "
                    f"(use --force to override)"
                )
    field_chars = _parse_field_args(args.field)
    pairs = [(n, k) for n in range(2, args.n_max + 1) for k in range(1, n)]
    tasks = [(n, k, checks, field_chars, args.budget, not args.no_timings) for n, k in pairs]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_worker, tasks))
    else:
        records = [_sweep_worker(t) for t in tasks]
    if args.format == "csv":
        text = _records_to_csv(records)
    elif args.format == "text":
        text = _records_to_text(records)
    else:
        text = json.dumps(records, separators=(",", ":")) + "\n"
    _emit(text, args.output)
    agree = sum(1 for r in records if r["agreement"])
    sys.stdout.write(f"sweep n<={args.n_max}: {agree}/{len(records)} records agree\n")
    if any(_record_is_undecided(r) for r in records):
        return EXIT_UNDECIDED
    return EXIT_OK if agree == len(records) else EXIT_DISAGREE


def cmd_inspect(args) -> int:
    _validate_params(args.n, args.k)
    cx = vdw_complex(args.n, args.k)
    if args.what in ("link", "deletion"):
        if args.vertex is None:
            raise ValueError(f"inspect {args.what} needs a vertex argument")
        sub = cx.link(args.vertex) if args.what == "link" else cx.deletion(args.vertex)
        text = sub.to_json() + "\n"
    elif args.what == "dual":
        text = cx.alexander_dual().to_json() + "\n"
    elif args.what == "ideal":
        text = dual_ideal(cx).to_json() + "\n"
    elif args.what == "syzygies":
        syz = taylor_syzygies(dual_ideal(cx))
        text = json.dumps([s.to_dict() for s in syz], separators=(",", ":")) + "\n"
    else:  # lemmas
        if args.k == 2:
            check = check_odd_increment_overlap(args.n)
        elif args.k > 2:
            check = check_max_increment_overlap(args.n, args.k)
        else:
            raise ValueError("no overlap bound applies for k = 1")
        data = check.to_dict()
        data["increments"] = sorted({f.increment for f in progression_facets(args.n, args.k)})
        text = json.dumps(data, separators=(",", ":")) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify_shelling(args) -> int:
    with open(args.complex_file) as fh:
        cx = SimplicialComplex.from_dict(json.load(fh))
    with open(args.order_file) as fh:
        data = json.load(fh)
    order = data["order"] if isinstance(data, dict) else data
    valid = verify_shelling(cx, order)
    _emit(json.dumps({"valid": valid}, separators=(",", ":")) + "\n", args.output)
    return EXIT_OK if valid else EXIT_DISAGREE


# -- parser ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )
    common.add_argument(
        "--field",
        action="append",
        metavar="F",
        help="coefficient field: Q, F2 or Fp:<p>; repeatable (default: Q and F2)",
    )
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="parallel workers (sweep)")
    common.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_SHELLING_BUDGET,
        metavar="NODES",
        help="node budget for the shellability search",
    )
    common.add_argument("--output", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="vdw", description="Exact combinatorics of van der Waerden complexes vdW(n, k)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="emit the facet list of vdW(n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser(
        "classify", parents=[common], help="run the deciders against the closed-form predicate"
    )
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument(
        "--checks",
        default="vd,shellable,cm,linpres",
        metavar="LIST",
        help="comma-separated subset of vd,shellable,cm,linpres",
    )
    p.add_argument("--no-timings", action="store_true", help="omit timings (deterministic output)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "sweep", parents=[common], help="classify every (n, k) with 0 < k < n <= n_max"
    )
    p.add_argument("n_max", type=int)
    p.add_argument("--checks", default="vd,shellable,cm,linpres", metavar="LIST")
    p.add_argument("--no-timings", action="store_true", help="omit timings (deterministic output)")
    p.add_argument("--force", action="store_true", help="override the per-check n_max limits")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser(
        "inspect", parents=[common], help="print a derived object of vdW(n, k) as JSON"
    )
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("what", choices=("link", "deletion", "dual", "ideal", "syzygies", "lemmas"))
    p.add_argument("vertex", nargs="?", type=int, default=None)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser(
        "verify-shelling",
        parents=[common],
        help="check a facet order (JSON file) against a complex (JSON file)",
    )
    p.add_argument("complex_file")
    p.add_argument("order_file")
    p.set_defaults(func=cmd_verify_shelling)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
