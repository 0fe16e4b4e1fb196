"""Biseparability geometry of collective-rotation-invariant states.

At a fixed section (r_plus, r3) of the invariant coordinates, the states
that are separable across the 1|23 cut satisfy the Eggeling-Werner
inequalities

    -1 < r1 - 2*r_plus < 0,
    3*r2**2 + 3*r3**2 + (1 - 3*r_plus)**2 <= (r1 - 2*r_plus)**2,

a convex lens in the (r1, r2) plane.  The 12|3 and 13|2 regions are the
+-2*pi/3 rotations of that lens about the origin.  Every state inside the
convex hull of the three regions is biseparable, so the hull gives an
upper bound on the separation below which the symmetric collinear
configuration is genuinely tripartite entangled: the solver bisects on
the separation until the configuration's (r1, r2) point crosses the hull
boundary.  The hull is built from boundary samples, hence converges to
the true hull from inside and keeps the resulting distance an honest
upper bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .couplings import from_config
from .errors import BracketError, ConvergenceFailure, DomainError, EmptyRegionError
from .geometry import collinear
from .specfun import Dimensionality
from .tristate import werner_coords

PARTITIONS = ("1|23", "12|3", "13|2")
_ROT = {"1|23": 0.0, "12|3": 2.0 * math.pi / 3.0, "13|2": -2.0 * math.pi / 3.0}

DEFAULT_SAMPLES = 2048
MEMBERSHIP_TOL = 1e-9
_BRACKETS = {Dimensionality.THREE_D: (2.0, 3.2), Dimensionality.TWO_D: (1.8, 3.0)}


@dataclass(frozen=True)
class SectionSpec:
    """Section of the invariant-coordinate space at fixed (r_plus, r3)."""

    r_plus: float
    r3: float = 0.0


@dataclass(frozen=True)
class ConvexRegion:
    """Convex polygon in the (r1, r2) plane, vertices counterclockwise."""

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 3:
            raise DomainError(f"polygon needs at least 3 vertices, got {len(v)}")
        n = len(v)
        for i in range(n):
            ax, ay = v[i]
            bx, by = v[(i + 1) % n]
            cx, cy = v[(i + 2) % n]
            cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if cross < -1e-12:
                raise DomainError("vertices are not in convex counterclockwise order")

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)


def _check_section(sec: SectionSpec) -> float:
    """Return (1 - 3*r_plus); raise when the 1|23 region is empty."""
    c = 1.0 - 3.0 * sec.r_plus
    if 3.0 * sec.r3 * sec.r3 + c * c >= 1.0:
        raise EmptyRegionError(
            f"no state satisfies the separability inequalities at "
            f"r_plus={sec.r_plus}, r3={sec.r3}"
        )
    return c


def in_region_1_23(sec: SectionSpec, r1: float, r2: float, tol: float = 0.0) -> bool:
    """Membership in the 1|23 separable lens, inequalities relaxed by tol."""
    t = r1 - 2.0 * sec.r_plus
    if not (-1.0 - tol < t < tol):
        return False
    c = 1.0 - 3.0 * sec.r_plus
    return 3.0 * r2 * r2 + 3.0 * sec.r3 * sec.r3 + c * c <= t * t + tol


def in_region(
    sec: SectionSpec, partition: str, r1: float, r2: float, tol: float = 0.0
) -> bool:
    """Membership in the lens of any of the three partitions."""
    if partition not in _ROT:
        raise DomainError(f"partition must be one of {PARTITIONS}, got {partition!r}")
    a = -_ROT[partition]
    ca, sa = math.cos(a), math.sin(a)
    return in_region_1_23(sec, ca * r1 - sa * r2, sa * r1 + ca * r2, tol)


def region_boundary(
    sec: SectionSpec, partition: str = "1|23", n_samples: int = DEFAULT_SAMPLES
) -> np.ndarray:
    """Ordered samples of the closed lens boundary for one partition.

    The curved side r1 = 2*r_plus - sqrt(3*r2**2 + 3*r3**2 + (1-3*r_plus)**2)
    is sampled uniformly in r2 between the two corners where it meets the
    straight side r1 = 2*r_plus - 1; the straight side is the chord
    between the corners, so the returned arc (corners included) is the
    full vertex set of the inscribed polygon.  Doubling n_samples refines
    the previous sample set, so hulls grow monotonically with resolution.
    """
    if partition not in _ROT:
        raise DomainError(f"partition must be one of {PARTITIONS}, got {partition!r}")
    if n_samples < 64:
        raise DomainError(f"n_samples must be at least 64, got {n_samples}")
    c = _check_section(sec)
    r2_max = math.sqrt((1.0 - c * c - 3.0 * sec.r3 * sec.r3) / 3.0)
    r2 = np.linspace(-r2_max, r2_max, n_samples + 1)
    r1 = 2.0 * sec.r_plus - np.sqrt(3.0 * r2 * r2 + 3.0 * sec.r3 * sec.r3 + c * c)
    pts = np.column_stack([r1, r2])
    a = _ROT[partition]
    if a != 0.0:
        ca, sa = math.cos(a), math.sin(a)
        pts = pts @ np.array([[ca, sa], [-sa, ca]])
    return pts


def _monotone_chain(points: np.ndarray) -> list[tuple[float, float]]:
    """Convex hull (Andrew's monotone chain), counterclockwise."""
    pts = sorted(set(map(tuple, points.tolist())))
    if len(pts) < 3:
        raise DomainError("hull needs at least 3 distinct points")

    def half(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) > 1:
                (ax, ay), (bx, by) = out[-2], out[-1]
                if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) <= 0.0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def bisep_hull(sec: SectionSpec, n_samples: int = DEFAULT_SAMPLES) -> ConvexRegion:
    """Convex hull of the three partition lenses (inner approximation)."""
    pts = np.vstack([region_boundary(sec, part, n_samples) for part in PARTITIONS])
    return ConvexRegion(tuple(_monotone_chain(pts)))


def point_in_hull(
    region: ConvexRegion, r1: float, r2: float, tol: float = MEMBERSHIP_TOL
) -> bool:
    """True when (r1, r2) lies inside the hull or within tol of its boundary."""
    v = region.vertices
    n = len(v)
    for i in range(n):
        ax, ay = v[i]
        bx, by = v[(i + 1) % n]
        ex, ey = bx - ax, by - ay
        # signed distance of the point from edge i (positive = inside)
        cross = ex * (r2 - ay) - ey * (r1 - ax)
        if cross < -tol * math.hypot(ex, ey):
            return False
    return True


def polygon_to_csv(region: ConvexRegion) -> str:
    """CSV dump of the hull vertices, counterclockwise, 12 digits."""
    lines = ["r1,r2"]
    for x, y in region.vertices:
        lines.append(f"{x:.12g},{y:.12g}")
    return "\n".join(lines) + "\n"


def _symmetric_point(dim: Dimensionality, separation: float):
    """Section and (r1, r2) point of the symmetric collinear configuration."""
    c = from_config(collinear(separation, 0.5, dim))
    wc = werner_coords(c)
    return SectionSpec(wc.r_plus, wc.r3), (wc.r1, wc.r2)


def r_max_solver(
    dim: Dimensionality,
    bracket: tuple[float, float] | None = None,
    tol: float = 1e-5,
    n_samples: int = DEFAULT_SAMPLES,
    prescan: int = 32,
    stability_check: bool = True,
) -> float:
    """Upper bound on the GTE distance from the biseparability hull.

    Bisects the separation of the symmetric collinear configuration on
    the predicate "its (r1, r2) point lies inside the hull of the
    configuration's own section"; inside implies biseparable, so the
    crossing bounds the GTE distance from above.  The section is
    recomputed at every step because r_plus drifts with the separation.
    """
    lo, hi = bracket if bracket is not None else _BRACKETS[dim]
    if not lo < hi:
        raise DomainError(f"bracket must be increasing, got ({lo}, {hi})")

    def inside(separation: float, samples: int) -> bool:
        sec, point = _symmetric_point(dim, separation)
        hull = bisep_hull(sec, samples)
        return point_in_hull(hull, *point)

    def solve(samples: int) -> float:
        grid = np.linspace(lo, hi, prescan)
        flags = [inside(r, samples) for r in grid]
        switches = [i for i in range(len(flags) - 1) if flags[i] != flags[i + 1]]
        if flags[0] or not flags[-1] or len(switches) != 1:
            raise BracketError(
                f"hull-membership predicate is not a single False->True "
                f"switch on [{lo}, {hi}] (flags {flags})"
            )
        a, b = float(grid[switches[0]]), float(grid[switches[0] + 1])
        for _ in range(200):
            if b - a <= tol:
                return 0.5 * (a + b)
            mid = 0.5 * (a + b)
            if inside(mid, samples):
                b = mid
            else:
                a = mid
        raise ConvergenceFailure("bisection failed to reach tolerance")

    result = solve(n_samples)
    if stability_check:
        refined = solve(2 * n_samples)
        if abs(refined - result) > 10.0 * tol:
            raise ConvergenceFailure(
                f"hull-resolution sensitivity {abs(refined - result):.3e} "
                f"exceeds {10.0 * tol:.3e}; increase n_samples"
            )
    return result
