"""Maximizing the power curves and the degree-8 stationarity polynomial."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import power
from .errors import BracketError, DomainError
from .polyroots import horner, poly_mul

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_TOL = 1e-10
R_BRACKET = (3.0 + 1e-9, 100.0)
ETA_BRACKET = (0.0, 1.0 - 1e-12)

# -2r^8 + 9r^7 + 15r^6 - 67r^5 + 63r^4 - 18r^3
POLY_COEFFS = (-2, 9, 15, -67, 63, -18, 0, 0, 0)

# -r^3 (r - 1)^2 (r + 3)(2r^2 - 11r + 6)
POLY_FACTORS = ((-1,), (1, 0, 0, 0), (1, -2, 1), (1, 3), (2, -11, 6))

SQRT73 = math.sqrt(73.0)


class Objective(enum.Enum):
    EQ21 = "eq21"   # Morse power versus r
    EQ23 = "eq23"   # Morse power versus efficiency
    EQ24 = "eq24"   # harmonic-limit power versus r
    EQ25 = "eq25"   # harmonic-limit power versus efficiency

    @property
    def function(self):
        return {
            Objective.EQ21: power.pstar_r_morse,
            Objective.EQ23: power.pstar_eta_morse,
            Objective.EQ24: power.pstar_r_ho,
            Objective.EQ25: power.pstar_eta_ho,
        }[self]

    @property
    def over_ratio(self) -> bool:
        return self in (Objective.EQ21, Objective.EQ24)

    @property
    def default_bracket(self) -> tuple[float, float]:
        return R_BRACKET if self.over_ratio else ETA_BRACKET


@dataclass(frozen=True)
class OptimizationResult:
    argmax: float
    max_value: float
    bracket: tuple[float, float]
    tolerance: float
    iterations: int


@dataclass(frozen=True)
class RootSet:
    coefficients: tuple[float, ...]
    roots: list[tuple[float, int]] = field(default_factory=list)

    def root_count(self) -> int:
        return sum(m for _, m in self.roots)


@dataclass(frozen=True)
class OptimalRegion:
    """Lower edge of the region where power falls as efficiency rises."""

    eta_star: float
    r_star: float


def golden_section_max(f, lo: float, hi: float, tol: float) -> tuple[float, float, int]:
    """Maximize unimodal ``f`` on [lo, hi] until the bracket is narrower than 2*tol."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    iterations = 0
    while hi - lo > 2 * tol:
        iterations += 1
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
    x = 0.5 * (lo + hi)
    return x, f(x), iterations


def maximize_scalar(objective: Objective | str, bracket: tuple[float, float] | None = None,
                    tol: float = DEFAULT_TOL, scan_points: int = 2001) -> OptimizationResult:
    """Coarse grid scan for a unimodal bracket, then golden-section refinement."""
    objective = Objective(objective)
    lo, hi = bracket if bracket is not None else objective.default_bracket
    if not lo < hi:
        raise DomainError(f"empty bracket ({lo!r}, {hi!r})")
    if not tol > 0:
        raise DomainError(f"tolerance must be > 0, got {tol!r}")
    f = objective.function
    grid = np.linspace(lo, hi, scan_points)
    values = f(grid)
    i = int(np.argmax(values))
    if i == 0 or i == scan_points - 1:
        raise BracketError(f"{objective.value}: maximum at the bracket edge x={grid[i]!r}")
    a, b = float(grid[i - 1]), float(grid[i + 1])
    x, fx, iterations = golden_section_max(f, a, b, tol)
    return OptimizationResult(argmax=x, max_value=fx, bracket=(a, b),
                              tolerance=tol, iterations=iterations)


def paper_polynomial(r: float) -> float:
    return horner(POLY_COEFFS, r)


def expand_factors(factors=POLY_FACTORS) -> tuple[int, ...]:
    out = (1,)
    for fac in factors:
        out = poly_mul(out, fac)
    return tuple(out)


def paper_polynomial_roots() -> RootSet:
    """Real roots of the stationarity polynomial, read off its factorization.

    The factorization is re-expanded in integer arithmetic and compared with
    the coefficients before any root is reported.
    """
    if expand_factors() != POLY_COEFFS:
        raise AssertionError("factorization does not reproduce the polynomial")
    roots = [
        (-3.0, 1),
        (0.0, 3),
        ((11.0 - SQRT73) / 4.0, 1),
        (1.0, 2),
        ((11.0 + SQRT73) / 4.0, 1),
    ]
    return RootSet(coefficients=tuple(float(c) for c in POLY_COEFFS), roots=roots)


def scaled_residual(coeffs, r: float) -> float:
    """|p(r)| relative to max|coefficient| * max(1, |r|)^degree."""
    degree = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs) * max(1.0, abs(r)) ** degree
    return abs(horner(coeffs, r)) / scale


def physical_root() -> float:
    return (11.0 + SQRT73) / 4.0


def eta_star_paper() -> float:
    return 1.0 - 12.0 / (11.0 + SQRT73)


def optimal_region(objective: Objective | str = Objective.EQ23,
                   tol: float = DEFAULT_TOL) -> OptimalRegion:
    objective = Objective(objective)
    best = maximize_scalar(objective, tol=tol)
    if objective.over_ratio:
        return OptimalRegion(eta_star=1.0 - 3.0 / best.argmax, r_star=best.argmax)
    return OptimalRegion(eta_star=best.argmax, r_star=3.0 / (1.0 - best.argmax))
