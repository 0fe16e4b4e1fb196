"""Parameter sweeps and threshold solvers for witnessed GTE.

Sweeps tabulate the robustness lower bound along the standard
configuration families; a separation value of 0 selects the exact
vanishing-size limit (shape-only couplings) instead of a small-distance
proxy.  Thresholds are located by bisection after a mandatory pre-scan
that brackets the *first* sign change, guarding against the oscillating
tails of the correlation kernels.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from . import couplings as cpl
from . import geometry
from .errors import BracketError, ConvergenceFailure
from .specfun import Dimensionality
from .witnesses import GTE_THRESHOLD, er_lower_bound

SWEEP_COLUMNS = ("er_lower_bound", "witness_value", "p12", "p13", "p23")


@dataclass(frozen=True)
class SweepRow:
    """One sweep point: named independent variables plus derived values."""

    indep: tuple[tuple[str, object], ...]
    er: float
    witness_value: float
    p12: float
    p13: float
    p23: float


@dataclass(frozen=True)
class PolarBoundaryRow:
    """Witnessed-GTE boundary radius q* at one (kfr, theta)."""

    kfr: float
    theta: float
    q_star: float


def _map(fn: Callable, items: Sequence, threads: int | None):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _row(indep: tuple[tuple[str, object], ...], c: cpl.Couplings) -> SweepRow:
    sums = (c.p12 + c.p13, c.p12 + c.p23, c.p13 + c.p23)
    return SweepRow(
        indep=indep,
        er=er_lower_bound(c),
        witness_value=3.0 * max(sums),
        p12=c.p12,
        p13=c.p13,
        p23=c.p23,
    )


def _collinear_couplings(dim: Dimensionality, kfr: float, x: float) -> cpl.Couplings:
    if kfr == 0.0:
        return cpl.zero_limit(x, 1.0, 1.0 - x)
    return cpl.from_config(geometry.collinear(kfr, x, dim))


def _isosceles_couplings(dim: Dimensionality, kfr: float, y: float) -> cpl.Couplings:
    if kfr == 0.0:
        side = math.hypot(0.5, y)
        return cpl.zero_limit(side, 1.0, side)
    return cpl.from_config(geometry.isosceles(kfr, y, dim))


def _polar_shape(theta: float, q: float) -> tuple[float, float, float]:
    px = q * math.cos(theta)
    py = q * math.sin(theta)
    return (math.hypot(px + 0.5, py), 1.0, math.hypot(px - 0.5, py))


def sweep_collinear(
    dim: Dimensionality,
    kfr_values: Sequence[float],
    x_over_r_grid: Sequence[float],
    threads: int | None = None,
) -> list[SweepRow]:
    def one(point: tuple[float, float]) -> SweepRow:
        kfr, x = point
        c = _collinear_couplings(dim, kfr, x)
        return _row((("kfr", kfr), ("x_over_r", x)), c)

    items = [(kfr, x) for kfr in kfr_values for x in x_over_r_grid]
    return _map(one, items, threads)


def sweep_isosceles(
    dim: Dimensionality,
    kfr_values: Sequence[float],
    y_over_r_grid: Sequence[float],
    threads: int | None = None,
) -> list[SweepRow]:
    def one(point: tuple[float, float]) -> SweepRow:
        kfr, y = point
        c = _isosceles_couplings(dim, kfr, y)
        return _row((("kfr", kfr), ("y_over_r", y)), c)

    items = [(kfr, y) for kfr in kfr_values for y in y_over_r_grid]
    return _map(one, items, threads)


def _polar_gte(dim: Dimensionality, kfr: float, theta: float, q: float) -> bool:
    if kfr == 0.0:
        shape = _polar_shape(theta, q)
        if min(shape) < 1e-12:
            # Coincident pair (theta = 0, q = 1/2): the limiting weights are
            # (0, 0, 1), whose best witness value 3 stays below 1 + sqrt(5).
            return False
        c = cpl.zero_limit(*shape)
    else:
        c = cpl.from_config(geometry.polar(kfr, theta, q, dim))
    return er_lower_bound(c) > 0.0


def sweep_polar_boundary(
    dim: Dimensionality,
    kfr_values: Sequence[float],
    theta_grid: Sequence[float],
    q_tol: float = 1e-6,
    prescan: int = 33,
    threads: int | None = None,
) -> list[PolarBoundaryRow]:
    """Boundary radius q*(theta) separating witnessed GTE (q < q*) from none.

    Rows where GTE holds on the whole radius report q* = 1/2 and rows
    where it holds nowhere report q* = 0, keeping the table rectangular.
    """

    def one(point: tuple[float, float]) -> PolarBoundaryRow:
        kfr, theta = point
        qs = np.linspace(0.0, 0.5, prescan)
        flags = [_polar_gte(dim, kfr, theta, float(q)) for q in qs]
        if not flags[0]:
            return PolarBoundaryRow(kfr, theta, 0.0)
        if all(flags):
            return PolarBoundaryRow(kfr, theta, 0.5)
        first = next(i for i in range(len(flags) - 1) if flags[i] and not flags[i + 1])
        lo, hi = float(qs[first]), float(qs[first + 1])
        while hi - lo > q_tol:
            mid = 0.5 * (lo + hi)
            if _polar_gte(dim, kfr, theta, mid):
                lo = mid
            else:
                hi = mid
        return PolarBoundaryRow(kfr, theta, 0.5 * (lo + hi))

    items = [(kfr, theta) for kfr in kfr_values for theta in theta_grid]
    return _map(one, items, threads)


def sweep_distance(
    dims: Sequence[Dimensionality],
    kfr_grid: Sequence[float],
    threads: int | None = None,
) -> list[SweepRow]:
    """Robustness bound of the symmetric collinear family versus separation."""

    def one(point: tuple[Dimensionality, float]) -> SweepRow:
        dim, kfr = point
        c = _collinear_couplings(dim, kfr, 0.5)
        return _row((("dim", dim.value), ("kfr", kfr)), c)

    items = [(dim, kfr) for dim in dims for kfr in kfr_grid]
    return _map(one, items, threads)


def find_rmin(
    dim: Dimensionality,
    tol: float = 1e-6,
    prescan_range: tuple[float, float] = (0.1, 4.0),
    prescan_step: float = 0.05,
) -> float:
    """Separation where the energy witness stops certifying GTE.

    For the symmetric collinear family, locates the first sign change of
    3*(p12 + p23) - (1 + sqrt(5)) on a pre-scan grid and bisects it; the
    pre-scan keeps later, oscillation-induced crossings out of play.
    """

    def margin(r: float) -> float:
        c = cpl.from_config(geometry.collinear(r, 0.5, dim))
        return 3.0 * (c.p12 + c.p23) - GTE_THRESHOLD

    lo, hi = prescan_range
    grid = np.arange(lo, hi + 0.5 * prescan_step, prescan_step)
    values = [margin(float(r)) for r in grid]
    bracket = None
    for i in range(len(values) - 1):
        if values[i] > 0.0 >= values[i + 1]:
            bracket = (float(grid[i]), float(grid[i + 1]))
            break
    if bracket is None:
        raise BracketError(
            f"no sign change of the witness margin on [{lo}, {hi}]"
        )
    a, b = bracket
    for _ in range(200):
        if b - a <= tol:
            return 0.5 * (a + b)
        mid = 0.5 * (a + b)
        if margin(mid) > 0.0:
            a = mid
        else:
            b = mid
    raise ConvergenceFailure("bisection failed to reach tolerance")


def analytic_limit_thresholds() -> dict[str, float]:
    """Closed-form GTE thresholds of the vanishing-size limit curves.

    The limit witness value 3/(1 - u + u**2) crosses 1 + sqrt(5) at
    u = (1 -+ sqrt(3*(sqrt(5) - 2)))/2 on the collinear family, and the
    isosceles/polar boundary sits at y = sqrt(3*(sqrt(5) - 2))/2; the two
    values sum to 1/2.
    """
    y = math.sqrt(3.0 * (math.sqrt(5.0) - 2.0)) / 2.0
    return {"x_over_r": 0.5 - y, "y_over_r": y}


def _format_cell(value: object) -> str:
    if isinstance(value, str):
        return value
    return f"{value:.12g}"


def write_csv(columns: Sequence[str], rows: Iterable[Sequence[object]], stream: TextIO) -> None:
    """Rectangular CSV with 12-significant-digit numeric cells."""
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_format_cell(v) for v in row) + "\n")


def sweep_table(rows: Sequence[SweepRow]) -> tuple[list[str], list[list[object]]]:
    columns = [name for name, _ in rows[0].indep] + list(SWEEP_COLUMNS)
    data = [
        [v for _, v in r.indep] + [r.er, r.witness_value, r.p12, r.p13, r.p23]
        for r in rows
    ]
    return columns, data


def polar_table(rows: Sequence[PolarBoundaryRow]) -> tuple[list[str], list[list[object]]]:
    return ["kfr", "theta", "q_star"], [[r.kfr, r.theta, r.q_star] for r in rows]
