"""Command-line front end: evaluate any implemented function, run the
identity-verification suites, emit machine-readable tables.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain/IO error.
Tolerance precedence: flags > HERGLOTZ_TOL environment variable > defaults
(1e-8 for scalar evaluations, 1e-6 for relation suites).

Output determinism: numbers serialize with 17 significant digits and the
elapsed_ms column is 0.0 unless --timing is given, so identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import contour, quadreps, relations, series, specfun
from .errors import HerglotzError

_SCALAR_TOL = 1e-8
_RELATION_TOL = 1e-6


@dataclass(frozen=True)
class OutputRecord:
    """One evaluation row; serializes identically across runs for identical
    inputs (elapsed_ms stays 0.0 unless timing is requested)."""

    function: str
    x: float
    value: float
    error_estimate: float
    elapsed_ms: float


def _fmt(v: float) -> str:
    return f"{v:.17g}"


# registry: name -> callable(x, tol) -> EvalResult
def _wigert_lhs(a: float, tol: float) -> specfun.EvalResult:
    lhs, _ = quadreps.wigert(a, tol)
    return lhs


_REGISTRY = {
    "phi0": lambda x, tol: series.phi0(x),
    "phi1": lambda x, tol: series.phi1(x),
    "psi1": lambda x, tol: specfun.psi1(x),
    "digamma": lambda x, tol: specfun.digamma(x),
    "F": lambda x, tol: series.herglotz_F(x, max(tol, 1e-11)),
    "sum_phi0": lambda x, tol: series.sum_phi0(x, max(tol, 1e-11)),
    "phi_log": lambda x, tol: series.phi_log(x, max(tol, 1e-11)),
    "H.contour": lambda x, tol: contour.H_contour(x, tol),
    "H.divisor": lambda x, tol: quadreps.H_divisor_series(x, tol),
    "H.single": lambda x, tol: quadreps.H_single_integral(x, tol),
    "H.double": lambda x, tol: quadreps.H_double_integral(x, max(tol, 1e-4)),
    "J": lambda x, tol: contour.J_contour(x, tol),
    "A.direct": lambda x, tol: quadreps.A_direct(x, tol),
    "A.mellin": lambda x, tol: contour.A_inverse_mellin(x, tol),
    "G": lambda x, tol: relations.G_fn(x, tol),
    "Fcal": lambda x, tol: relations.F_fn(x, tol),
    "F1": lambda x, tol: relations.F1_fn(x, tol),
    "wigert": _wigert_lhs,  # the integral side; the closed form is `eval --fn digamma` territory
    "lemma41.lhs": lambda x, tol: quadreps.lemma41_lhs(x, tol),
    "lemma41.rhs": lambda x, tol: contour.lemma41_rhs(x, tol),
    "ramanujan.bracket": lambda x, tol: relations.ramanujan_bracket(x, tol),
}

_IDENTITY_BY_NAME = {ident.value: ident for ident in relations.IdentityId}


def _env_tol(default: float) -> float:
    raw = os.environ.get("HERGLOTZ_TOL")
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise HerglotzError(f"HERGLOTZ_TOL is not a number: {raw!r}") from None


def _parse_points(raw: str) -> list[float]:
    try:
        return [float(p) for p in raw.split(",") if p.strip() != ""]
    except ValueError:
        raise HerglotzError(f"bad point list {raw!r}: expected comma-separated reals") from None


def _parse_range(raw: str, spacing: str) -> list[float]:
    parts = raw.split(":")
    if len(parts) != 3:
        raise HerglotzError(f"bad range {raw!r}: expected start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise HerglotzError(f"bad range {raw!r}: expected start:stop:count") from None
    if count < 1:
        raise HerglotzError("range count must be >= 1")
    if count == 1:
        return [start]
    if spacing == "log":
        if start <= 0 or stop <= 0:
            raise HerglotzError("log spacing requires positive endpoints")
        ls, le = math.log(start), math.log(stop)
        return [math.exp(ls + (le - ls) * i / (count - 1)) for i in range(count)]
    return [start + (stop - start) * i / (count - 1) for i in range(count)]


def _records(
    fn_name: str, points: list[float], tol: float, jobs: int, timing: bool
) -> list[OutputRecord]:
    fn = _REGISTRY[fn_name]

    def one(x: float) -> OutputRecord:
        t0 = time.perf_counter()
        res = fn(x, tol)
        dt = (time.perf_counter() - t0) * 1000.0 if timing else 0.0
        v = res.value
        if isinstance(v, complex):
            v = v.real
        return OutputRecord(
            function=fn_name,
            x=float(x),
            value=float(v),
            error_estimate=float(res.error_estimate),
            elapsed_ms=dt,
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, points))
    return [one(x) for x in points]


_CSV_HEADER = "function,x,value,error_estimate,elapsed_ms"


def _emit_records(records: list[OutputRecord], fmt: str, out) -> None:
    if fmt == "json":
        payload = [
            {
                "function": r.function,
                "x": r.x,
                "value": r.value,
                "error_estimate": r.error_estimate,
                "elapsed_ms": r.elapsed_ms,
            }
            for r in records
        ]
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    out.write(_CSV_HEADER + "\n")
    for r in records:
        out.write(
            f"{r.function},{_fmt(r.x)},{_fmt(r.value)},"
            f"{_fmt(r.error_estimate)},{_fmt(r.elapsed_ms)}\n"
        )


def _report_dict(r: relations.RelationReport) -> dict:
    return {
        "identity": r.identity.value,
        "params": list(r.params),
        "lhs": {"value": r.lhs.value, "error_estimate": r.lhs.error_estimate},
        "rhs": {"value": r.rhs.value, "error_estimate": r.rhs.error_estimate},
        "residual": r.residual,
        "tolerance": r.tolerance,
        "pass": r.passed,
    }


def _cmd_eval(args) -> int:
    if args.fn not in _REGISTRY:
        print(f"unknown function {args.fn!r}; known: {', '.join(sorted(_REGISTRY))}", file=sys.stderr)
        return 2
    tol = args.tol if args.tol is not None else _env_tol(_SCALAR_TOL)
    points = _parse_points(args.x)
    records = _records(args.fn, points, tol, args.jobs, args.timing)
    _emit_records(records, args.format, sys.stdout)
    return 0


def _cmd_table(args) -> int:
    if args.fn not in _REGISTRY:
        print(f"unknown function {args.fn!r}; known: {', '.join(sorted(_REGISTRY))}", file=sys.stderr)
        return 2
    tol = args.tol if args.tol is not None else _env_tol(_SCALAR_TOL)
    points = _parse_range(args.range, args.spacing)
    records = _records(args.fn, points, tol, args.jobs, args.timing)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                _emit_records(records, args.format, fh)
        except OSError as exc:
            print(f"cannot write {args.out!r}: {exc}", file=sys.stderr)
            return 3
    else:
        _emit_records(records, args.format, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else _env_tol(_RELATION_TOL)
    tol_given = args.tol is not None or "HERGLOTZ_TOL" in os.environ
    if args.id == "all":
        idents = list(relations.all_identities())
    else:
        ident = _IDENTITY_BY_NAME.get(args.id)
        if ident is None:
            print(f"unknown identity {args.id!r}; known: all, {', '.join(_IDENTITY_BY_NAME)}", file=sys.stderr)
            return 2
        idents = [ident]
    params = _parse_points(args.alphas) if args.alphas else None

    def run_one(ident: relations.IdentityId) -> list[relations.RelationReport]:
        grid_tol = tol if tol_given else relations.default_grid(ident)[1]
        return relations.verify_grid(ident, params, grid_tol)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            grids = list(pool.map(run_one, idents))
    else:
        grids = [run_one(i) for i in idents]

    all_reports: list[relations.RelationReport] = [r for g in grids for r in g]
    if args.format == "json":
        sys.stdout.write(json.dumps([_report_dict(r) for r in all_reports], indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write("identity,param,lhs,rhs,residual,tolerance,pass\n")
        for r in all_reports:
            sys.stdout.write(
                f"{r.identity.value},{_fmt(r.params[0])},{_fmt(r.lhs.value)},"
                f"{_fmt(r.rhs.value)},{_fmt(r.residual)},{_fmt(r.tolerance)},"
                f"{'true' if r.passed else 'false'}\n"
            )
    else:
        for r in all_reports:
            status = "PASS" if r.passed else "FAIL"
            sys.stdout.write(
                f"{status} {r.identity.value} param={_fmt(r.params[0])} "
                f"residual={r.residual:.3e} tol={r.tolerance:.1e} "
                f"lhs={_fmt(r.lhs.value)} rhs={_fmt(r.rhs.value)}\n"
            )
        for ident, grid in zip(idents, grids):
            worst = max(r.residual for r in grid)
            sys.stdout.write(f"# summary {ident.value} max_residual={worst:.3e}\n")
    return 0 if all(r.passed for r in all_reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="herglotz",
        description="Evaluate the package's special functions and integrals, "
        "or verify their two-term functional equations numerically.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a function at one or more points")
    pe.add_argument("--fn", required=True, help="function name from the registry")
    pe.add_argument("--x", required=True, help="comma-separated evaluation points")
    pe.add_argument("--tol", type=float, default=None)
    pe.add_argument("--format", choices=("csv", "json"), default="csv")
    pe.add_argument("--jobs", type=int, default=1)
    pe.add_argument("--timing", action="store_true", help="record wall-clock elapsed_ms")
    pe.set_defaults(func=_cmd_eval)

    pv = sub.add_parser("verify", help="run identity verification")
    pv.add_argument("--id", required=True, help="identity name or 'all'")
    pv.add_argument("--alphas", default=None, help="comma-separated parameter grid")
    pv.add_argument("--tol", type=float, default=None)
    pv.add_argument("--format", choices=("text", "csv", "json"), default="text")
    pv.add_argument("--jobs", type=int, default=1)
    pv.set_defaults(func=_cmd_verify)

    pt = sub.add_parser("table", help="tabulate a function over a range")
    pt.add_argument("--fn", required=True)
    pt.add_argument("--range", required=True, help="start:stop:count")
    pt.add_argument("--spacing", choices=("linear", "log"), default="linear")
    pt.add_argument("--tol", type=float, default=None)
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    pt.add_argument("--out", default=None, help="output path (stdout if omitted)")
    pt.add_argument("--jobs", type=int, default=1)
    pt.add_argument("--timing", action="store_true")
    pt.set_defaults(func=_cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HerglotzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
