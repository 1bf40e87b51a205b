"""Command-line front end emitting profile data and verification reports.

Subcommands ``fig1``/``fig2``/``fig3`` reproduce the three standard figure
datasets (deformed potentials, damped zero modes, deformed fluxes) for
k = 1, a1 = a2 = 1 and lam in {inf, 1, 1000, 3000, 6000} by default;
``profile`` emits any supported quantity; ``verify`` streams the check
suite as JSON lines. Output is plot data (CSV or JSON), never rendered
images, and identical flags produce byte-identical files.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .darboux import DEFAULT_NORM_RHO_MAX, DEFAULT_NORM_RHO_MIN, INFINITE_LAMBDA, DarbouxFamily
from .diffusion import Superposition, flux_general
from .numerics import RadialGrid
from .verify import report_to_json_line, run_suite
from .witten import SchrodingerProfile, potential_bosonic

__all__ = ["main", "build_parser", "FAMILY_QUANTITIES", "SEED_QUANTITIES"]

# Quantities that vary with the family parameter (lam = inf means the seed).
FAMILY_QUANTITIES = ("potential_iso", "psi_iso", "flux_iso", "k_eff_squared", "w_gen")
# lam-independent quantities; emitted once under the "inf" label since they
# are their own lam = inf limits.
SEED_QUANTITIES = (
    "potential_bosonic",
    "potential_fermionic",
    "psi",
    "flux",
    "superpotential",
    "cumulative_norm",
)
QUANTITIES = FAMILY_QUANTITIES + SEED_QUANTITIES

DEFAULT_LAMBDAS = (INFINITE_LAMBDA, 1.0, 1000.0, 3000.0, 6000.0)
FIGURE_QUANTITY = {"fig1": "potential_iso", "fig2": "psi_iso", "fig3": "flux_iso"}


def lambda_label(lam: float) -> str:
    if math.isinf(lam):
        return "inf"
    if float(lam) == int(lam):
        return str(int(lam))
    return repr(float(lam))


def _parse_lambda(text: str) -> float:
    if text.strip().lower() == "inf":
        return INFINITE_LAMBDA
    try:
        return float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid family parameter {text!r}") from exc


def _add_common_flags(sub: argparse.ArgumentParser, points_default: int) -> None:
    sub.add_argument("--k", type=float, default=1.0, help="inverse diffusion length (default 1)")
    sub.add_argument("--a1", type=float, default=1.0, help="I0 coefficient (default 1)")
    sub.add_argument("--a2", type=float, default=1.0, help="K0 coefficient (default 1)")
    sub.add_argument(
        "--lambda",
        dest="lambdas",
        action="append",
        type=_parse_lambda,
        metavar="V|inf",
        help="family parameter, repeatable (default: inf 1 1000 3000 6000)",
    )
    sub.add_argument("--rho-min", type=float, default=0.05)
    sub.add_argument("--rho-max", type=float, default=8.0)
    sub.add_argument("--points", type=int, default=points_default)
    sub.add_argument("--spacing", choices=("log", "linear"), default="log")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", type=Path, default=Path("."), help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoflux",
        description="Strictly isospectral deformations of line-source neutron diffusion",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, quantity in FIGURE_QUANTITY.items():
        sub = subparsers.add_parser(name, help=f"emit {quantity} series")
        _add_common_flags(sub, points_default=400)
        sub.set_defaults(quantity=quantity, prefix=name)

    prof = subparsers.add_parser("profile", help="emit any supported quantity")
    prof.add_argument("--quantity", choices=QUANTITIES, required=True)
    _add_common_flags(prof, points_default=400)
    prof.set_defaults(prefix=None)

    ver = subparsers.add_parser("verify", help="run the identity-check suite")
    ver.add_argument("--k", type=float, default=1.0)
    ver.add_argument("--a1", type=float, default=1.0)
    ver.add_argument("--a2", type=float, default=1.0)
    ver.add_argument(
        "--lambda",
        dest="lambdas",
        action="append",
        type=_parse_lambda,
        metavar="V|inf",
        help="family parameter, repeatable (default: 1 1000 3000 6000)",
    )
    return parser


def _validate_series_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if not math.isfinite(args.k) or args.k <= 0.0:
        parser.error(f"--k must be > 0, got {args.k}")
    if args.a1 < 0.0 or args.a2 < 0.0 or (args.a1 == 0.0 and args.a2 == 0.0):
        parser.error("--a1/--a2 must be >= 0 and not both zero")
    if not (math.isfinite(args.rho_min) and math.isfinite(args.rho_max)) or args.rho_min <= 0.0:
        parser.error("--rho-min must be > 0")
    if args.rho_max <= args.rho_min:
        parser.error("--rho-max must exceed --rho-min")
    if args.points < 2:
        parser.error("--points must be at least 2")
    for lam in args.lambdas:
        if math.isnan(lam) or lam <= 0.0:
            parser.error(f"--lambda must be > 0 or 'inf', got {lambda_label(lam)}")


def _validate_lambdas(parser: argparse.ArgumentParser, lambdas: list[float]) -> None:
    for lam in lambdas:
        if math.isnan(lam) or lam <= 0.0:
            parser.error(f"--lambda must be > 0 or 'inf', got {lam}")


def _series_values(quantity: str, family: DarbouxFamily, rhos: np.ndarray) -> np.ndarray:
    profile = family.profile
    k = profile.k
    per_point = {
        "potential_iso": family.potential_iso,
        "psi_iso": family.psi_iso,
        "flux_iso": family.flux_iso,
        "k_eff_squared": family.k_eff_squared,
        "w_gen": family.w_gen,
        "potential_bosonic": lambda r: potential_bosonic(r, k),
        "potential_fermionic": profile.potential_fermionic,
        "psi": profile.psi,
        "flux": lambda r: flux_general(r, k, profile.coefficients),
        "superpotential": profile.superpotential,
        "cumulative_norm": family.cumulative_norm_at,
    }[quantity]
    return np.array([per_point(float(r)) for r in rhos])


def _format_rows(rhos: np.ndarray, values: np.ndarray) -> list[tuple[float, float]]:
    return [(float(r), float(v)) for r, v in zip(rhos, values)]


def _write_csv(path: Path, rows: list[tuple[float, float]]) -> None:
    lines = ["rho,value\n"]
    lines.extend(f"{r!r},{v!r}\n" for r, v in rows)
    path.write_text("".join(lines), encoding="utf-8", newline="")


def _write_json(path: Path, quantity: str, lam: float, args, rows) -> None:
    import json

    doc = {
        "quantity": quantity,
        "lambda": "inf" if math.isinf(lam) else lam,
        "k": args.k,
        "a1": args.a1,
        "a2": args.a2,
        "rows": [[r, v] for r, v in rows],
    }
    path.write_text(json.dumps(doc, sort_keys=True) + "\n", encoding="utf-8", newline="")


def _emit_series(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.lambdas is None:
        args.lambdas = list(DEFAULT_LAMBDAS)
    _validate_series_args(parser, args)

    quantity = args.quantity
    make_grid = RadialGrid.log_spaced if args.spacing == "log" else RadialGrid.linear
    grid = make_grid(args.rho_min, args.rho_max, args.points)
    profile = SchrodingerProfile(k=args.k, coefficients=Superposition(a1=args.a1, a2=args.a2))
    base = DarbouxFamily.build(
        profile,
        INFINITE_LAMBDA,
        rho_min=min(DEFAULT_NORM_RHO_MIN, args.rho_min),
        rho_max=max(DEFAULT_NORM_RHO_MAX, args.rho_max),
    )

    lambdas = list(args.lambdas) if quantity in FAMILY_QUANTITIES else [INFINITE_LAMBDA]
    prefix = args.prefix or quantity
    args.out.mkdir(parents=True, exist_ok=True)
    for lam in lambdas:
        family = base.with_parameter(lam) if not math.isinf(lam) else base
        values = _series_values(quantity, family, grid.points)
        if not np.all(np.isfinite(values)):
            raise RuntimeError(f"non-finite value in {quantity} series at lam={lambda_label(lam)}")
        rows = _format_rows(grid.points, values)
        path = args.out / f"{prefix}_lambda_{lambda_label(lam)}.{args.format}"
        if args.format == "csv":
            _write_csv(path, rows)
        else:
            _write_json(path, quantity, lam, args, rows)
        print(path)
    return 0


def _run_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    lambdas = args.lambdas if args.lambdas is not None else [1.0, 1000.0, 3000.0, 6000.0]
    _validate_lambdas(parser, lambdas)
    if not math.isfinite(args.k) or args.k <= 0.0:
        parser.error(f"--k must be > 0, got {args.k}")
    if args.a1 < 0.0 or args.a2 < 0.0 or (args.a1 == 0.0 and args.a2 == 0.0):
        parser.error("--a1/--a2 must be >= 0 and not both zero")
    finite = [lam for lam in lambdas if not math.isinf(lam)]
    reports = run_suite(k=args.k, a1=args.a1, a2=args.a2, lambdas=finite)
    for report in reports:
        print(report_to_json_line(report))
    failed = [r.check_name for r in reports if not r.passed]
    if failed:
        print(f"FAILED: {', '.join(failed)}", file=sys.stderr)
        return 1
    print(f"all {len(reports)} checks passed", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _run_verify(parser, args)
    return _emit_series(parser, args)


if __name__ == "__main__":
    sys.exit(main())
