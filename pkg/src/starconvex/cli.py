"""Command-line interface.

Exit codes: 0 satisfied / success, 1 condition not satisfied, inconclusive or
numeric failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import criteria, scan, special, verifier
from .model import (
    ClassParams,
    Convention,
    ConsistencyError,
    DiskGrid,
    DomainError,
    SignedPowerSeries,
    SingularityError,
    WrightParams,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ENV_RADII = "STARCONVEX_RADII"
ENV_ANGLES = "STARCONVEX_ANGLES"
ENV_RMAX = "STARCONVEX_RMAX"


class UsageError(Exception):
    pass


def _env(name, cast, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"environment variable {name}={raw!r} is not a valid {cast.__name__}")


def parse_coefficients(text: str) -> list[float]:
    """Comma- or whitespace-separated values a_2, a_3, ...; empty means bare z."""
    tokens = [t for t in text.replace(",", " ").split() if t]
    out = []
    for t in tokens:
        try:
            out.append(float(t))
        except ValueError:
            raise UsageError(f"malformed coefficient {t!r}") from None
    return out


def _series_from_args(args) -> SignedPowerSeries:
    if args.coeffs is not None and args.coeffs_file is not None:
        raise UsageError("give either --coeffs or --coeffs-file, not both")
    if args.coeffs_file is not None:
        try:
            text = Path(args.coeffs_file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.coeffs_file}: {exc}") from None
    else:
        text = args.coeffs or ""
    return SignedPowerSeries(Convention.parse(args.convention), tuple(parse_coefficients(text)))


def _params_from_args(args) -> ClassParams:
    return ClassParams(args.alpha, args.beta, args.gamma)


def _grid_from_args(args) -> DiskGrid:
    radii = args.radii if args.radii is not None else _env(ENV_RADII, int, 64)
    angles = args.angles if args.angles is not None else _env(ENV_ANGLES, int, 256)
    rmax = args.rmax if args.rmax is not None else _env(ENV_RMAX, float, 0.999)
    return DiskGrid.geometric(radii, angles, rmax)


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def _add_class_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, default=0.0, help="order alpha in [0, 1)")
    p.add_argument("--beta", type=float, default=0.0, help="beta in [0, 1)")
    p.add_argument("--gamma", type=float, default=0.0, help="gamma in [0, 1]")


def _add_series_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--convention", default="A", help="A: z + sum a_n z^n, T: z - sum a_n z^n")
    p.add_argument("--coeffs", help="comma-separated a_2, a_3, ... (the z term is implicit)")
    p.add_argument("--coeffs-file", help="file holding the coefficient list")


def _add_grid(p: argparse.ArgumentParser) -> None:
    p.add_argument("--radii", type=int, default=None,
                   help=f"number of radii (default 64, env {ENV_RADII})")
    p.add_argument("--angles", type=int, default=None,
                   help=f"angles per radius (default 256, env {ENV_ANGLES})")
    p.add_argument("--rmax", type=float, default=None,
                   help=f"largest sampled radius (default 0.999, env {ENV_RMAX})")


def cmd_check(args, out) -> int:
    series = _series_from_args(args)
    params = _params_from_args(args)
    result = criteria.criterion_sum(series, params, per_term=True)
    payload = result.to_dict()
    payload["convention"] = series.convention.value
    payload["verdict"] = criteria.verdict(result, series.convention)
    code = EXIT_OK if result.satisfied else EXIT_FAIL
    if args.verify:
        try:
            report = verifier.cross_validate(series, params, _grid_from_args(args))
        except SingularityError as exc:
            payload["verification"] = {"error": "singularity", "z": [exc.z.real, exc.z.imag]}
            code = EXIT_FAIL
        else:
            payload["verification"] = report.to_dict()
            if not report.passed_numeric:
                code = EXIT_FAIL
    if args.json:
        _emit_json(payload, out)
    else:
        out.write(
            f"convention={payload['convention']} value={result.value!r} "
            f"budget={result.budget!r} margin={result.margin!r} verdict={payload['verdict']}\n"
        )
        if "verification" in payload:
            v = payload["verification"]
            if "error" in v:
                out.write(f"verification: singular denominator at z={v['z']}\n")
            else:
                out.write(
                    f"verification: min_re_phi={v['min_re_phi']!r} at z={v['argmin_z']} "
                    f"passed_numeric={str(v['passed_numeric']).lower()}\n"
                )
    return code


def cmd_extremal(args, out) -> int:
    params = _params_from_args(args)
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    series = criteria.extremal_function(params, args.n, args.convention)
    result = criteria.criterion_sum(series, params)
    if args.json:
        _emit_json(
            {
                "convention": series.convention.value,
                "n": args.n,
                "coefficient": series.coefficients[-1],
                "coefficients": list(series.coefficients),
                "criterion": result.to_dict(),
            },
            out,
        )
    else:
        out.write(",".join(repr(c) for c in series.coefficients) + "\n")
    return EXIT_OK


def cmd_wright(args, out) -> int:
    w = WrightParams(args.lam, args.mu)
    if args.N < 1:
        raise DomainError(f"N must be >= 1, got {args.N}")
    series = special.build_G(w, args.N) if args.series == "G" else special.build_F(w, args.N)
    if args.integral:
        series = special.integral_transform(series)
    rows = list(series.terms())
    if args.format == "json":
        _emit_json(
            {
                "lambda": w.lam,
                "mu": w.mu,
                "series": args.series + ("_hat" if args.integral else ""),
                "convention": series.convention.value,
                "rows": [{"n": n, "c_n": c} for n, c in rows],
            },
            out,
        )
    else:
        out.write("n,c_n\n")
        for n, c in rows:
            out.write(f"{n},{c!r}\n")
    return EXIT_OK


def _parse_axis(text: str):
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"axis {text!r} must look like name:min:max:steps")
    name = parts[0].strip().lower()
    try:
        return name, (float(parts[1]), float(parts[2]), int(parts[3]))
    except ValueError:
        raise UsageError(f"axis {text!r} has non-numeric bounds or steps") from None


def cmd_region(args, out) -> int:
    axes = dict(_parse_axis(a) for a in args.axis or [])
    fixed = {
        "alpha": args.alpha, "beta": args.beta, "gamma": args.gamma,
        "lambda": args.lam, "mu": args.mu,
    }
    spec = scan.ScanSpec(
        axes=axes,
        fixed={k: v for k, v in fixed.items() if k not in axes},
        condition=args.condition,
        truncation=args.N,
    )
    rows = scan.run_scan(spec, workers=args.workers)
    summary = scan.summarize(rows)
    summary["condition"] = spec.condition.value
    if args.output in (None, "-"):
        scan.write_csv(rows, out)
        summary_stream = sys.stderr
    else:
        with open(args.output, "w", newline="") as fh:
            scan.write_csv(rows, fh)
        summary_stream = out
    summary_stream.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return EXIT_OK if summary["implication_violations"] == 0 else EXIT_FAIL


def cmd_verify(args, out) -> int:
    series = _series_from_args(args)
    params = _params_from_args(args)
    grid = _grid_from_args(args)
    try:
        report = verifier.cross_validate(series, params, grid)
    except SingularityError as exc:
        _emit_json({"error": "singularity", "z": [exc.z.real, exc.z.imag],
                    "modulus": exc.modulus}, out)
        return EXIT_FAIL
    except ConsistencyError as exc:
        _emit_json({"error": "consistency", "message": str(exc)}, out)
        return EXIT_FAIL
    _emit_json(report.to_dict(), out)
    return EXIT_OK if report.passed_criterion and report.passed_numeric else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starconvex",
        description="Coefficient criteria and numeric checks for the S*C(alpha, beta; gamma) "
        "and TS*C(alpha, beta; gamma) classes of normalized analytic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "check",
        help="coefficient criterion for a series",
        description="Evaluate sum_n (1+(n-1)g)(n-a-(n-1)ab) |a_n| <= 1-a. For class A this "
        "is sufficient for membership (a failure is inconclusive); for class T it is "
        "necessary and sufficient.",
    )
    _add_series_input(p)
    _add_class_params(p)
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--verify", action="store_true", help="also sample Re phi on a disk grid")
    _add_grid(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "extremal",
        help="sharp single-term function",
        description="Print z +/- (1-a)/[(1+(n-1)g)(n-a-(n-1)ab)] z^n, the function attaining "
        "equality in the coefficient criterion; this is also the class T coefficient bound. "
        "Text output is the coefficient list a_2..a_n, accepted by `check --coeffs`.",
    )
    _add_class_params(p)
    p.add_argument("--n", type=int, required=True, help="degree of the single term (>= 2)")
    p.add_argument("--convention", default="A", help="A or T")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser(
        "wright",
        help="tabulate Wright-type coefficients",
        description="Coefficients Gamma(mu)/Gamma(lambda(n-1)+mu) e^{-1/mu}/(n-1)! of "
        "F = z + (W - z) e^{-1/mu} (G = 2z - F shares them). --integral divides by n, "
        "giving the transform int_0^z f(t)/t dt.",
    )
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--N", type=int, default=special.DEFAULT_TRUNCATION, help="truncation degree")
    p.add_argument("--series", choices=("F", "G"), default="F")
    p.add_argument("--integral", action="store_true", help="apply the integral transform")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_wright)

    p = sub.add_parser(
        "region",
        help="scan closed-form conditions over a parameter grid",
        description="Compare a closed-form condition with the coefficient criterion of the "
        "matching truncated series at every grid point. F_condition / criterion_F / "
        "criterion_G use {(1-ab)g + [1-ab+(2-(1+b)a)g] mu} mu^-2 e^{1/mu} <= 1-a (lambda >= 1, "
        "mu > 0.462); integral_condition / criterion_F_hat / criterion_G_hat use "
        "{(1-ab) g/mu + (1-b)(1-g) a (1-e^{-1/mu})} e^{1/mu} <= 1-a. Closed form true with "
        "criterion false is an implication violation (exit 1).",
    )
    p.add_argument("--axis", action="append",
                   help="name:min:max:steps for name in alpha,beta,gamma,lambda,mu (repeatable)")
    _add_class_params(p)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=2.0)
    p.add_argument("--condition", choices=[c.value for c in scan.Condition],
                   default=scan.Condition.F_condition.value)
    p.add_argument("--N", type=int, default=special.DEFAULT_TRUNCATION)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser(
        "verify",
        help="sample Re phi on a disk grid and report as JSON",
        description="Evaluate the class ratio phi on a polar grid, report min Re phi and "
        "cross-check against the coefficient criterion.",
    )
    _add_series_input(p)
    _add_class_params(p)
    _add_grid(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
