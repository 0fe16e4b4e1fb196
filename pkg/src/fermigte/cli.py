"""Command-line front end; every computation is a subcommand.

Scalar results are emitted as JSON objects, tables as CSV.  Grid,
tolerance and bracket defaults live here, not in the core modules.  Exit
codes: 0 success, 2 validation/domain error, 3 convergence error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import bisep, couplings, geometry, scan, tristate, witnesses
from .errors import BracketError, ConvergenceFailure, DomainError
from .specfun import Dimensionality, f_factor

_FIG_KFR = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 2.59]
_FIG2_KFR = [0.0, 1.0, 2.0, 2.5, 2.59]
# Limit-mode rows cannot sit exactly on a coincident-pair endpoint; the
# default grid insets those two points by half a grid step.
_LIMIT_INSET = 0.0025


def _dim(value: str) -> Dimensionality:
    return Dimensionality(value)


def _threads(args: argparse.Namespace) -> int | None:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("GTE_FERMI_THREADS")
    return int(env) if env else None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _scalar(quantity: str, dim: str | None, value: float, tol: float | None) -> str:
    return _json(
        {"quantity": quantity, "dim": dim, "value": value, "tolerance_used": tol}
    )


def _triangle_couplings(args: argparse.Namespace) -> couplings.Couplings:
    if args.limit:
        return couplings.zero_limit(args.d12, args.d13, args.d23)
    cfg = geometry.TriangleConfig(args.d12, args.d13, args.d23, _dim(args.dim))
    return couplings.from_config(cfg)


def _geometry_couplings(args: argparse.Namespace) -> couplings.Couplings:
    dim = _dim(args.dim)
    kind = args.geometry
    if kind == "triangle":
        if None in (args.d12, args.d13, args.d23):
            raise DomainError("--geometry triangle needs --d12, --d13 and --d23")
        return _triangle_couplings(args)
    kfr = args.kfr
    if kind == "collinear":
        return scan._collinear_couplings(dim, kfr, args.x_over_r)
    if kind == "isosceles":
        return scan._isosceles_couplings(dim, kfr, args.y_over_r)
    if kind == "polar":
        if kfr == 0.0:
            return couplings.zero_limit(*scan._polar_shape(args.theta, args.q_over_r))
        return couplings.from_config(geometry.polar(kfr, args.theta, args.q_over_r, dim))
    if kfr == 0.0:
        raise DomainError("the equilateral family has no vanishing-size limit")
    return couplings.from_config(geometry.equilateral(kfr, dim))


def _add_triangle_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d12", type=float, required=True)
    p.add_argument("--d13", type=float, required=True)
    p.add_argument("--d23", type=float, required=True)
    p.add_argument("--limit", action="store_true", help="use the vanishing-size limit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gte-fermi",
        description="Genuine tripartite entanglement of three localized "
        "spins in the degenerate Fermi gas.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument(
        "--threads",
        type=int,
        help="worker cap for sweeps (default: GTE_FERMI_THREADS or serial)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("f", help="correlation kernel f(x)", parents=[common])
    p.add_argument("--dim", choices=["2d", "3d"], required=True)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser(
        "couplings", help="singlet weights of a distance triple", parents=[common]
    )
    p.add_argument("--dim", choices=["2d", "3d"], default="3d")
    _add_triangle_flags(p)

    p = sub.add_parser("rho3", help="8x8 reduced density matrix dump", parents=[common])
    p.add_argument("--dim", choices=["2d", "3d"], default="3d")
    _add_triangle_flags(p)

    p = sub.add_parser(
        "werner", help="invariant coordinates of the state", parents=[common]
    )
    p.add_argument("--dim", choices=["2d", "3d"], default="3d")
    _add_triangle_flags(p)

    p = sub.add_parser(
        "witness-scan", help="extremal grid scan of GHZ/W witnesses", parents=[common]
    )
    p.add_argument("--detail", action="store_true", help="include per-family minima")

    p = sub.add_parser(
        "er", help="robustness lower bound for a named geometry", parents=[common]
    )
    p.add_argument(
        "--geometry",
        choices=["collinear", "isosceles", "polar", "equilateral", "triangle"],
        required=True,
    )
    p.add_argument("--dim", choices=["2d", "3d"], default="3d")
    p.add_argument("--kfr", type=float, default=0.0, help="0 selects the limit mode")
    p.add_argument("--x-over-r", type=float, default=0.5)
    p.add_argument("--y-over-r", type=float, default=0.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--q-over-r", type=float, default=0.0)
    p.add_argument("--d12", type=float)
    p.add_argument("--d13", type=float)
    p.add_argument("--d23", type=float)
    p.add_argument("--limit", action="store_true")

    p = sub.add_parser("gte-distance", help="GTE distance threshold", parents=[common])
    p.add_argument("--dim", choices=["2d", "3d"], required=True)
    p.add_argument("--method", choices=["witness", "polygon"], required=True)
    p.add_argument("--tol", type=float, help="bisection tolerance")
    p.add_argument("--bracket", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--n-samples", type=int, default=bisep.DEFAULT_SAMPLES)

    p = sub.add_parser(
        "sweep", help="figure-style parameter sweep (CSV)", parents=[common]
    )
    p.add_argument("--figure", choices=["1a", "1b", "2", "3"], required=True)
    p.add_argument("--dim", choices=["2d", "3d"], default="3d")
    p.add_argument("--points", type=int, default=201, help="grid points per axis")

    p = sub.add_parser(
        "polygon", help="biseparability hull vertex dump (CSV)", parents=[common]
    )
    p.add_argument("--rplus", type=float, required=True)
    p.add_argument("--r3", type=float, default=0.0)
    p.add_argument("--n-samples", type=int, default=bisep.DEFAULT_SAMPLES)

    return parser


def _limit_safe(grid: list[float]) -> list[float]:
    return [min(max(x, _LIMIT_INSET), 1.0 - _LIMIT_INSET) for x in grid]


def _run_sweep(args: argparse.Namespace) -> str:
    import io

    dim = _dim(args.dim)
    threads = _threads(args)
    n = args.points
    buf = io.StringIO()
    if args.figure in ("1a", "1b"):
        grid = list(np.linspace(0.0, 1.0, n))
        rows = []
        for kfr in _FIG_KFR:
            g = _limit_safe(grid) if kfr == 0.0 else grid
            if args.figure == "1a":
                rows += scan.sweep_collinear(dim, [kfr], g, threads)
            else:
                rows += scan.sweep_isosceles(dim, [kfr], grid, threads)
        scan.write_csv(*scan.sweep_table(rows), buf)
    elif args.figure == "2":
        thetas = list(np.linspace(0.0, math.pi / 2.0, max(2, n // 2)))
        rows = scan.sweep_polar_boundary(dim, _FIG2_KFR, thetas, threads=threads)
        scan.write_csv(*scan.polar_table(rows), buf)
    else:
        grid = [0.0] + list(np.linspace(0.015, 3.0, n))
        rows = scan.sweep_distance(
            [Dimensionality.TWO_D, Dimensionality.THREE_D], grid, threads
        )
        scan.write_csv(*scan.sweep_table(rows), buf)
    return buf.getvalue()


def dispatch(args: argparse.Namespace) -> str:
    cmd = args.command
    if cmd == "f":
        return _scalar("f_factor", args.dim, f_factor(_dim(args.dim), args.x), None)
    if cmd == "couplings":
        c = _triangle_couplings(args)
        return _json(
            {
                "quantity": "couplings",
                "dim": args.dim,
                "p12": c.p12,
                "p13": c.p13,
                "p23": c.p23,
                "p": c.p,
                "violations": couplings.validate(c),
            }
        )
    if cmd == "rho3":
        return tristate.matrix_to_text(tristate.rho3(_triangle_couplings(args)))
    if cmd == "werner":
        w = tristate.werner_coords(_triangle_couplings(args))
        return _json(
            {
                "quantity": "werner_coords",
                "dim": args.dim,
                "r_plus": w.r_plus,
                "r0": w.r0,
                "r1": w.r1,
                "r2": w.r2,
                "r3": w.r3,
            }
        )
    if cmd == "witness-scan":
        return _json(witnesses.grid_scan_ghz_w(detail=args.detail).as_dict())
    if cmd == "er":
        c = _geometry_couplings(args)
        return _scalar("er_lower_bound", args.dim, witnesses.er_lower_bound(c), None)
    if cmd == "gte-distance":
        dim = _dim(args.dim)
        if args.method == "witness":
            tol = args.tol if args.tol is not None else 1e-6
            value = scan.find_rmin(dim, tol=tol)
            return _scalar("gte_distance_lower_bound", args.dim, value, tol)
        tol = args.tol if args.tol is not None else 1e-5
        bracket = tuple(args.bracket) if args.bracket else None
        value = bisep.r_max_solver(
            dim, bracket=bracket, tol=tol, n_samples=args.n_samples
        )
        return _scalar("gte_distance_upper_bound", args.dim, value, tol)
    if cmd == "sweep":
        return _run_sweep(args)
    if cmd == "polygon":
        sec = bisep.SectionSpec(args.rplus, args.r3)
        return bisep.polygon_to_csv(bisep.bisep_hull(sec, args.n_samples))
    raise DomainError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = dispatch(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BracketError, ConvergenceFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
