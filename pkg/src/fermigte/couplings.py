"""Singlet weights of the three-spin reduced state.

The reduced density matrix of three localized spins in the degenerate
Fermi gas is a mixture of the maximally mixed state and the three pair
singlets.  The weight of the singlet on pair ij is

    p_ij = (-f_ij**2 + f12*f13*f23) / D,
    D    = -2 + f12**2 + f13**2 + f23**2 - f12*f13*f23,

with f_ij the correlation kernel at the pair distance.  All three weights
share the denominator D, which vanishes as the whole configuration
shrinks; in that limit the kernels behave as f = 1 - a*x**2 + O(x**4) and
the dimension constant a cancels, leaving the exact shape-only limit

    p_ij = (d_ik**2 + d_jk**2 - d_ij**2) / (d12**2 + d13**2 + d23**2),

identical for the 2D and 3D gases.  The equilateral shape is rejected in
limit mode: there the ratio is doubly singular and the closed form is not
trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateDenominatorError, DomainError
from .geometry import TriangleConfig, _TRI_TOL
from .specfun import f_factor

# Below this configuration scale the direct formula drowns in cancellation
# noise (|D| falls under ~1e-12) and the shape-only limit takes over.
LIMIT_SWITCH = 1e-3
DENOM_FLOOR = 1e-12
BOUND_TOL = 1e-9


@dataclass(frozen=True)
class Couplings:
    """Singlet weights (p12, p13, p23) and their sum p.

    Physical states satisfy |p_ij| <= 1 for each pair and |p| <= 1; use
    :func:`validate` to check both within a 1e-9 slack.
    """

    p12: float
    p13: float
    p23: float
    p: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", self.p12 + self.p13 + self.p23)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p12, self.p13, self.p23)


def from_config(cfg: TriangleConfig) -> Couplings:
    """Singlet weights for a configuration of three fermions.

    Falls back to :func:`zero_limit` when all three distances are below
    1e-3 (the shape-only limit); raises DegenerateDenominatorError when
    the shared denominator is numerically zero outside that regime, e.g.
    for a shrinking equilateral triangle just above the switch scale.
    """
    d12, d13, d23 = cfg.distances()
    if max(d12, d13, d23) < LIMIT_SWITCH:
        return zero_limit(d12, d13, d23)
    f12 = f_factor(cfg.dim, d12)
    f13 = f_factor(cfg.dim, d13)
    f23 = f_factor(cfg.dim, d23)
    prod = f12 * f13 * f23
    denom = -2.0 + f12 * f12 + f13 * f13 + f23 * f23 - prod
    if abs(denom) <= DENOM_FLOOR:
        raise DegenerateDenominatorError(
            f"singlet-weight denominator is {denom:.3e} at distances "
            f"({d12}, {d13}, {d23}); the configuration is outside the "
            "supported limit"
        )
    return Couplings(
        (-f12 * f12 + prod) / denom,
        (-f13 * f13 + prod) / denom,
        (-f23 * f23 + prod) / denom,
    )


def zero_limit(d12: float, d13: float, d23: float) -> Couplings:
    """Singlet weights in the vanishing-size limit; only ratios matter.

    Dimension independent.  Requires strictly positive distances forming
    a (possibly degenerate) triangle; the equilateral shape is rejected.
    """
    if min(d12, d13, d23) <= 0.0:
        raise DomainError(
            f"zero_limit requires positive distances, got ({d12}, {d13}, {d23})"
        )
    dmax = max(d12, d13, d23)
    tol = _TRI_TOL * dmax
    if d12 > d13 + d23 + tol or d13 > d12 + d23 + tol or d23 > d12 + d13 + tol:
        raise DomainError(f"triangle inequality violated for ({d12}, {d13}, {d23})")
    if dmax - min(d12, d13, d23) <= tol:
        raise DegenerateDenominatorError(
            "the equilateral shape is doubly singular in the vanishing-size "
            "limit; evaluate at finite separation instead"
        )
    s12 = d12 * d12
    s13 = d13 * d13
    s23 = d23 * d23
    total = s12 + s13 + s23
    return Couplings(
        (s13 + s23 - s12) / total,
        (s12 + s23 - s13) / total,
        (s12 + s13 - s23) / total,
    )


def validate(c: Couplings) -> list[str]:
    """Names of the violated physical bounds, empty when all hold.

    Each pair weight must satisfy |p_ij| <= 1; when all pair bounds hold
    the sum must satisfy |p| <= 1.  All checks carry a 1e-9 slack.
    """
    out = []
    for name in ("p12", "p13", "p23"):
        if abs(getattr(c, name)) > 1.0 + BOUND_TOL:
            out.append(f"|{name}| ≤ 1 violated")
    if not out and abs(c.p) > 1.0 + BOUND_TOL:
        out.append("|p| ≤ 1 violated")
    return out


def bound_excess(c: Couplings) -> float:
    """Largest amount by which any physical bound is exceeded (0 if none)."""
    worst = 0.0
    for v in (c.p12, c.p13, c.p23, c.p):
        worst = max(worst, abs(v) - 1.0)
    return max(0.0, worst)
