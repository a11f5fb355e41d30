"""Command-line front end: ``tbetti {gens,betti,verify,nu,compare,scan}``.

JSON is the canonical output; ``--format csv`` and ``--format table`` print
the same report rows. Exit codes: 0 success, 1 mathematical counterexample,
2 usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .combinat import binom, run_identity_suites
from .linalg import field_name, parse_field
from .monomial import BettiTable, NotStableError, betti_ek, is_borel, is_stable, parse_ideal
from .oracle import DEFAULT_BUDGET, BudgetExceeded, betti_oracle
from .pluricirculant import (InvariantViolation, PluriShape, check_radical_q, compare_thm36,
                             betti_jt, gens_jt_diagonals, gens_jt_representation,
                             max_index_histogram, nu_counts, nu_first_expression)
from .resolution import SIGN_CONVENTIONS, build_complex, certify_resolution
from .transversal import (BlockShape, ShapeError, betti_table_transversal,
                          gens_transversal)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

DEFAULT_RESOLUTION_SHAPES = [
    ((2, 2), 2), ((1, 1, 1), 2), ((2, 2, 2), 2), ((2, 2, 2), 3),
    ((2, 1, 2), 2), ((3, 2), 1), ((1, 1, 1, 1, 1), 3), ((1,) * 6, 2), ((1,) * 6, 4),
]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    field: int | None = None
    strand_budget: int = DEFAULT_BUDGET
    parallelism: int = 1
    output: str | None = None
    seed: int = 0
    plot: str | None = None


@dataclass
class Report:
    payload: dict
    rows: list[dict] = field(default_factory=list)
    text: str | None = None  # native text form, used when no --format is given
    exit_code: int = EXIT_OK
    message: str = ""  # printed to stderr


# ---------------------------------------------------------------- output

def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "" if v is None else str(v)


def _columns(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def render(report: Report, fmt: str | None) -> str:
    if fmt is None:
        if report.text is not None:
            return report.text
        fmt = "json"
    if fmt == "json":
        return json.dumps(report.payload, indent=2) + "\n"
    cols = _columns(report.rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in report.rows:
            w.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue()
    if fmt == "table":
        cells = [cols] + [[_cell(r.get(c)) for c in cols] for r in report.rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(cols))]
        lines = ["  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------- parsing helpers

def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _family(args) -> str:
    if getattr(args, "file", None):
        return "file"
    if args.family:
        return args.family
    if args.blocks is not None:
        return "transversal"
    if args.n is not None:
        return "jt"
    raise UsageError("give --blocks, --n or --file")


def _block_shape(args) -> BlockShape:
    if args.t is None:
        raise UsageError("--t is required")
    if args.blocks is not None:
        return BlockShape(args.blocks, args.t)
    if args.n is None:
        raise UsageError("give --blocks or --n")
    return BlockShape.uniform(args.n, args.b, args.t)


def _pluri_shape(args) -> PluriShape:
    if args.n is None or args.t is None:
        raise UsageError("--n and --t are required")
    return PluriShape(args.n, args.b, args.t)


# ---------------------------------------------------------------- commands

def cmd_gens(args, cfg: RunConfig) -> Report:
    if args.family == "transversal":
        if args.blocks is None:
            raise UsageError("--blocks is required")
        ideal = gens_transversal(_block_shape(args))
    else:
        shape = _pluri_shape(args)
        if args.method == "representation":
            ideal = gens_jt_representation(shape)
        else:
            ideal = gens_jt_diagonals(shape)
    ring = ideal.ambient
    gens = [g.to_text(ring) for g in ideal.gens]
    payload = {"family": args.family, "vars": list(ring.names), "count": len(gens),
               "generators": gens}
    return Report(payload, [{"generator": g} for g in gens], text=ideal.to_text())


def _betti_rows(table: BettiTable) -> list[dict]:
    return [{"q": q, "j": j, "beta": b} for (q, j), b in sorted(table.graded.items()) if b]


def cmd_betti(args, cfg: RunConfig) -> Report:
    family, method = _family(args), args.method
    info: dict = {"family": family}
    if family == "file":
        with open(args.file) as fh:
            ideal = parse_ideal(fh.read())
        if method in ("formula", "resolution"):
            raise UsageError(f"method {method!r} needs a shape, not an ideal file")
    elif family == "transversal":
        shape = _block_shape(args)
        info.update(blocks=list(shape.blocks), t=shape.t)
        ideal = gens_transversal(shape)
    else:
        shape = _pluri_shape(args)
        info.update(n=shape.n, b=shape.b, t=shape.t)
        if method == "resolution":
            raise UsageError("the explicit resolution is built for transversal ideals only")
        ideal = gens_jt_diagonals(shape) if method in ("ek", "oracle") else None

    if method == "formula":
        table = betti_table_transversal(shape) if family == "transversal" else betti_jt(shape)
    elif method == "ek":
        check = is_stable(ideal)
        if not check:
            w, i = check.witness
            shifted = w.shift(i - 1, w.max_index - 1)
            witness = {"generator": w.to_text(ideal.ambient), "index": i,
                       "shifted": shifted.to_text(ideal.ambient)}
            return Report({"method": method, "input": info, "stable": False, "witness": witness},
                          [witness], exit_code=EXIT_COUNTEREXAMPLE,
                          message=f"not stable: {witness['generator']} -> {witness['shifted']} "
                                  "is not in the ideal")
        table = betti_ek(ideal)
    elif method == "oracle":
        table = betti_oracle(ideal, cfg.field, cfg.strand_budget, cfg.parallelism)
    else:
        table = BettiTable.from_totals(build_complex(shape).ranks(), lambda q: shape.t + q)

    body = table.to_json()
    if not args.multigraded:
        body.pop("multigraded", None)
    payload = {"method": method, "field": field_name(cfg.field), "input": info, **body}
    if cfg.plot:
        from .report import plot_betti
        payload["figure"] = plot_betti({method: table.totals()}, cfg.plot,
                                       title=" ".join(f"{k}={_cell(v)}" for k, v in info.items()))
    return Report(payload, _betti_rows(table))


def _status(row: dict) -> str:
    return ("proved-" if row["proved"] else "conjecture-") + ("equal" if row["equal"] else "unequal")


def _compare_rows(pairs) -> list[dict]:
    rows = []
    for n, t in pairs:
        row = compare_thm36(n, t)
        row["status"] = _status(row)
        rows.append(row)
    return rows


def cmd_compare(args, cfg: RunConfig) -> Report:
    if args.n is not None:
        ts = [args.t] if args.t is not None else [t for t in (args.n, args.n - 1, args.n - 2) if t >= 1]
        pairs = [(args.n, t) for t in ts]
    else:
        pairs = [(n, t) for n in range(1, args.n_max + 1)
                 for t in (n, n - 1, n - 2) if t >= 1]
    for n, t in pairs:
        if not 1 <= t <= n:
            raise UsageError(f"need 1 <= t <= n, got n={n} t={t}")
    rows = _compare_rows(pairs)
    payload: dict = {"rows": rows}
    if cfg.plot:
        from .report import plot_compare
        payload["figure"] = plot_compare(rows, cfg.plot)
    bad = [r for r in rows if r["status"] == "proved-unequal"]
    report = Report(payload, rows)
    if bad:
        report.exit_code = EXIT_COUNTEREXAMPLE
        report.message = f"counterexample: n={bad[0]['n']} t={bad[0]['t']}"
    return report


def cmd_scan(args, cfg: RunConfig) -> Report:
    pairs = [(n, t) for n in range(1, args.n_max + 1) for t in range(1, n + 1)]
    rows = _compare_rows(pairs)
    payload = {
        "n_max": args.n_max,
        "rows": rows,
        "summary": {
            "rows": len(rows),
            "proved_unequal": sum(r["status"] == "proved-unequal" for r in rows),
            "conjecture_unequal": sum(r["status"] == "conjecture-unequal" for r in rows),
        },
    }
    if cfg.plot:
        from .report import plot_scan
        payload["figure"] = plot_scan(rows, cfg.plot)
    # informational: the exit status does not depend on the outcome
    return Report(payload, rows)


def cmd_nu(args, cfg: RunConfig) -> Report:
    shape = _pluri_shape(args)
    if shape.b != 2:
        raise UsageError("nu counts are defined for b = 2 only")
    nu = nu_counts(shape)
    hist = max_index_histogram(gens_jt_diagonals(shape))
    rows = [{"l": ell, "nu": a, "histogram": h, "match": a == h}
            for ell, (a, h) in enumerate(zip(nu, hist), 1)]
    payload = {"n": shape.n, "t": shape.t, "nu": nu, "histogram": hist,
               "total": sum(nu), "match": nu == hist}
    report = Report(payload, rows)
    if nu != hist:
        bad = next(r for r in rows if not r["match"])
        report.exit_code = EXIT_COUNTEREXAMPLE
        report.message = f"counterexample: l={bad['l']} nu={bad['nu']} histogram={bad['histogram']}"
    return report


# ---------------------------------------------------------------- verify suites

def _suite_thm36(args, cfg):
    n_max = args.n_max or 8
    rows = _compare_rows([(n, t) for n in range(1, n_max + 1)
                          for t in (n, n - 1, n - 2) if t >= 1])
    return rows, all(r["equal"] for r in rows)


def _suite_resolution(args, cfg):
    if args.blocks is not None:
        shapes = [BlockShape(args.blocks, args.t or 1)]
    else:
        shapes = [BlockShape(b, t) for b, t in DEFAULT_RESOLUTION_SHAPES]
    rows = []
    for shape in shapes:
        cert = certify_resolution(shape, cfg.field, cfg.seed, signs=args.signs,
                                  jobs=cfg.parallelism)
        rows.append(cert.to_json())
    return rows, all(r["passed"] for r in rows)


def _suite_identities(args, cfg):
    rows = run_identity_suites(limit=args.range)
    return rows, all(r["passed"] for r in rows)


def _suite_stability(args, cfg):
    n_max = args.n_max or 10
    rows = []
    for n in range(1, n_max + 1):
        for t in range(1, n + 1):
            ideal = gens_jt_diagonals(PluriShape(n, 2, t))
            rows.append({"check": "stable", "n": n, "b": 2, "t": t, "expected": True,
                         "holds": is_stable(ideal).ok})
    for (n, b, t), pred, name in (((3, 3, 3), is_stable, "stable"),
                                  ((5, 2, 5), is_borel, "borel")):
        ideal = gens_jt_diagonals(PluriShape(n, b, t))
        check = pred(ideal)
        row = {"check": name, "n": n, "b": b, "t": t, "expected": False, "holds": check.ok}
        if not check.ok:
            w, *idx = check.witness
            row["witness"] = {"generator": w.to_text(ideal.ambient), "indices": list(idx)}
        rows.append(row)
    return rows, all(r["holds"] == r["expected"] for r in rows)


def _suite_radical(args, cfg):
    n_max = args.n_max or 6
    rows = [check_radical_q(PluriShape(n, 2, t))
            for n in range(1, n_max + 1) for t in range(1, n + 1)]
    return rows, all(r["radical_equals_Q"] for r in rows)


def _suite_generators(args, cfg):
    n_max = args.n_max or 7
    rows = []
    for n in range(1, n_max + 1):
        for t in range(1, n + 1):
            shape = PluriShape(n, 2, t)
            diag = gens_jt_diagonals(shape)
            same = diag == gens_jt_representation(shape)
            nu = nu_counts(shape)
            rows.append({"n": n, "t": t, "generators": len(diag), "representation_equal": same,
                         "nu_total": sum(nu), "nu_equals_histogram": nu == max_index_histogram(diag),
                         "passed": same and sum(nu) == len(diag)
                         and nu == max_index_histogram(diag)})
    for n in range(1, max(n_max, 12) + 1):
        for t in range(1, n + 1):
            d = n - t + 1
            try:
                nu_counts(PluriShape(n, 2, t))
                agree = True
            except InvariantViolation:
                agree = False
            reduces = all(nu_first_expression(n, t, ell - 2 * d) == binom(t + ell - 2, t - 1)
                          for ell in range(d + 1, 2 * d + 1))
            rows.append({"n": n, "t": t, "expressions_agree": agree,
                         "first_reduces_to_part_a": reduces, "passed": agree and reduces})
    return rows, all(r["passed"] for r in rows)


SUITES = {
    "thm36": _suite_thm36,
    "resolution": _suite_resolution,
    "identities": _suite_identities,
    "stability": _suite_stability,
    "radical": _suite_radical,
    "generators": _suite_generators,
}


def cmd_verify(args, cfg: RunConfig) -> Report:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    suites = []
    for name in names:
        rows, ok = SUITES[name](args, cfg)
        suites.append({"suite": name, "passed": ok, "rows": rows})
    passed = all(s["passed"] for s in suites)
    flat = [{"suite": s["suite"], **r} for s in suites for r in s["rows"]]
    report = Report({"suites": suites, "passed": passed}, flat)
    if not passed:
        first = next(s for s in suites if not s["passed"])
        bad = next((r for r in first["rows"] if not _row_ok(r)), {})
        report.exit_code = EXIT_COUNTEREXAMPLE
        report.message = f"suite {first['suite']} failed: {json.dumps(bad, sort_keys=True)}"
    return report


def _row_ok(row: dict) -> bool:
    for key in ("passed", "equal", "radical_equals_Q"):
        if key in row:
            return bool(row[key])
    if "expected" in row:
        return row["holds"] == row["expected"]
    return True


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default=None,
                        help="output format (default: json; gens prints the ideal text format)")
    common.add_argument("--field", default="Q", help="Q (default) or a prime such as 32003 / GF(32003)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum number of strands for the oracle")
    common.add_argument("--plot", metavar="PATH", help="also write a figure to PATH")

    shape_args = argparse.ArgumentParser(add_help=False)
    shape_args.add_argument("--blocks", type=_int_list, help="block sizes, e.g. 2,2,3")
    shape_args.add_argument("--n", type=int)
    shape_args.add_argument("--b", type=int, default=2)
    shape_args.add_argument("--t", type=int)

    p = argparse.ArgumentParser(prog="tbetti", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gens", parents=[common, shape_args], help="list minimal generators")
    g.add_argument("family", choices=["transversal", "jt"])
    g.add_argument("--method", choices=["diagonals", "representation"], default="diagonals")
    g.set_defaults(func=cmd_gens)

    b = sub.add_parser("betti", parents=[common, shape_args], help="Betti numbers")
    b.add_argument("--family", choices=["transversal", "jt"])
    b.add_argument("--file", help="ideal in the text format")
    b.add_argument("--method", choices=["formula", "ek", "oracle", "resolution"], default="formula")
    b.add_argument("--multigraded", action="store_true", help="include multigraded output (oracle)")
    b.set_defaults(func=cmd_betti)

    v = sub.add_parser("verify", parents=[common, shape_args], help="run a verification suite")
    v.add_argument("suite", choices=[*SUITES, "all"])
    v.add_argument("--n-max", type=int)
    v.add_argument("--range", type=int, default=12, help="box size for the identity suites")
    v.add_argument("--signs", choices=SIGN_CONVENTIONS, default="corrected")
    v.set_defaults(func=cmd_verify)

    nu = sub.add_parser("nu", parents=[common, shape_args], help="generator counts by largest index")
    nu.set_defaults(func=cmd_nu)

    c = sub.add_parser("compare", parents=[common, shape_args],
                       help="compare Betti numbers of J_t and the transversal ideal")
    c.add_argument("--n-max", type=int, default=8)
    c.set_defaults(func=cmd_compare)

    s = sub.add_parser("scan", parents=[common], help="comparison for every (n, t)")
    s.add_argument("--n-max", type=int, default=8)
    s.set_defaults(func=cmd_scan)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(field=parse_field(args.field), strand_budget=args.budget,
                        parallelism=max(1, args.jobs), output=args.format, seed=args.seed,
                        plot=args.plot)
        report = args.func(args, cfg)
        stdout.write(render(report, cfg.output))
    except NotStableError as exc:
        print(f"tbetti: not stable: {exc}", file=stderr)
        return EXIT_COUNTEREXAMPLE
    except (UsageError, ShapeError, ValueError, OSError) as exc:
        print(f"tbetti: error: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"tbetti: {exc}", file=stderr)
        return EXIT_BUDGET
    if report.message:
        print(report.message, file=stderr)
    return report.exit_code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
