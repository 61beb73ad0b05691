"""The four-stroke Carnot-like cycle: endpoints, stroke pressures, work, heat, efficiency."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import OutOfStrokeRange, RatioTooSmall
from .spectra import EngineParams, require_valid

LN3 = math.log(3.0)

_EDGE = 1e-12


class StrokeKind(enum.Enum):
    ISO_EXPAND = "iso_expand"
    ADIA_EXPAND = "adia_expand"
    ISO_COMPRESS = "iso_compress"
    ADIA_COMPRESS = "adia_compress"


# traversal order of one cycle
STROKES = (StrokeKind.ISO_EXPAND, StrokeKind.ADIA_EXPAND,
           StrokeKind.ISO_COMPRESS, StrokeKind.ADIA_COMPRESS)


class WorkVariant(enum.Enum):
    CORRECTED = "corrected"
    AS_PRINTED = "as_printed"


class HeatSide(enum.Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class WidthQuad:
    l1: float
    l2: float
    l3: float
    l4: float

    def stroke_path(self, kind: StrokeKind) -> tuple[float, float]:
        """(start, end) widths of a stroke in traversal direction."""
        return {
            StrokeKind.ISO_EXPAND: (self.l1, self.l2),
            StrokeKind.ADIA_EXPAND: (self.l2, self.l3),
            StrokeKind.ISO_COMPRESS: (self.l3, self.l4),
            StrokeKind.ADIA_COMPRESS: (self.l4, self.l1),
        }[kind]


@dataclass(frozen=True)
class CycleResult:
    widths: WidthQuad
    work_per_stroke: tuple[float, float, float, float]
    total_work: float
    heat_in: float
    heat_out: float
    eta: float
    eta_ho: float
    eta_energy_ratio: float
    alpha_shorthand: float
    beta_shorthand: float
    e_high: float
    e_low: float
    cycle_time: float
    power: float


def stroke_endpoints(p: EngineParams) -> WidthQuad:
    p = require_valid(p)
    l3 = p.r * p.l1
    return WidthQuad(p.l1, 3.0 * p.l1, l3, l3 / 3.0)


def stroke_pressure(kind: StrokeKind, L: float, p: EngineParams) -> float:
    """Closed-form pressure along one stroke."""
    p = require_valid(p)
    w = stroke_endpoints(p)
    lo, hi = sorted(w.stroke_path(kind))
    if not lo * (1 - _EDGE) <= L <= hi * (1 + _EDGE):
        raise OutOfStrokeRange(f"L={L!r} outside {kind.value} range [{lo!r}, {hi!r}]")
    return _pressure(kind, L, p.a, p.d0, w.l1, w.l3)


def _pressure(kind, L, a, d0, l1, l3):
    if kind is StrokeKind.ISO_EXPAND:
        return a / (2 * l1 * L) - a * a / (8 * l1 * l1 * L * d0)
    if kind is StrokeKind.ADIA_EXPAND:
        return 3 * a / (2 * L * L) - 9 * a * a / (8 * L ** 3 * d0)
    if kind is StrokeKind.ISO_COMPRESS:
        return 3 * a / (2 * l3 * L) - 9 * a * a / (8 * d0 * l3 * l3 * L)
    return a / (2 * L * L) - a * a / (8 * L ** 3 * d0)


def stroke_pressure_curve(kind: StrokeKind, p: EngineParams):
    """Unchecked ``L -> pressure`` callable for one stroke (quadrature, plotting)."""
    p = require_valid(p)
    a, d0, l1 = p.a, p.d0, p.l1
    l3 = p.r * l1
    # same expressions as _pressure, specialised to avoid dispatch in hot loops
    if kind is StrokeKind.ISO_EXPAND:
        return lambda L: a / (2 * l1 * L) - a * a / (8 * l1 * l1 * L * d0)
    if kind is StrokeKind.ADIA_EXPAND:
        return lambda L: 3 * a / (2 * L * L) - 9 * a * a / (8 * L ** 3 * d0)
    if kind is StrokeKind.ISO_COMPRESS:
        return lambda L: 3 * a / (2 * l3 * L) - 9 * a * a / (8 * d0 * l3 * l3 * L)
    return lambda L: a / (2 * L * L) - a * a / (8 * L ** 3 * d0)


def stroke_work(kind: StrokeKind, p: EngineParams) -> float:
    """Signed work of a stroke along its traversal direction."""
    p = require_valid(p)
    a, d0 = p.a, p.d0
    w = stroke_endpoints(p)
    if kind is StrokeKind.ISO_EXPAND:
        return (a / (2 * w.l1) - a * a / (8 * w.l1 ** 2 * d0)) * LN3
    if kind is StrokeKind.ISO_COMPRESS:
        return -(3 * a / (2 * w.l3) - 9 * a * a / (8 * d0 * w.l3 ** 2)) * LN3
    if kind is StrokeKind.ADIA_EXPAND:
        # n = 1 pressure antiderivative: -3a/(2L) + 9a^2/(16 d0 L^2)
        return (1.5 * a * (1 / w.l2 - 1 / w.l3)
                - 9 * a * a / (16 * d0) * (1 / w.l2 ** 2 - 1 / w.l3 ** 2))
    return (0.5 * a * (1 / w.l4 - 1 / w.l1)
            - a * a / (16 * d0) * (1 / w.l4 ** 2 - 1 / w.l1 ** 2))


def cycle_work(p: EngineParams, variant: WorkVariant = WorkVariant.CORRECTED) -> float:
    """Net work per cycle.

    ``AS_PRINTED`` keeps the dimensionally inconsistent ``9 l1**3`` term and
    exists only so the verification ledger can measure it.
    """
    p = require_valid(p)
    a, d0, l1 = p.a, p.d0, p.l1
    l3 = p.r * l1
    nine_l1 = 9 * l1 ** 2 if variant is WorkVariant.CORRECTED else 9 * l1 ** 3
    return (a / 2) * ((l3 - 3 * l1) / (l1 * l3)
                      + (a / (4 * d0)) * (nine_l1 - l3 ** 2) / (l1 ** 2 * l3 ** 2)) * LN3


def heat_prefactor(p: EngineParams, side: HeatSide) -> float:
    """Heat divided by ln 3, the bare integrand prefactor."""
    p = require_valid(p)
    a, d0, l1 = p.a, p.d0, p.l1
    if side is HeatSide.IN:
        return a / (2 * l1) - a * a / (8 * l1 ** 2 * d0)
    l3 = p.r * l1
    return 3 * a / (2 * l3) - 9 * a * a / (8 * l3 ** 2 * d0)


def heat(p: EngineParams, side: HeatSide) -> float:
    """Heat absorbed (IN, along the high stroke) or rejected (OUT, low stroke)."""
    return heat_prefactor(p, side) * LN3


def efficiency(p: EngineParams) -> float:
    return 1.0 - heat_prefactor(p, HeatSide.OUT) / heat_prefactor(p, HeatSide.IN)


def shorthands(p: EngineParams) -> tuple[float, float]:
    """(alpha, beta) = (3a / (4 l3 d0), a / (4 l1 d0))."""
    p = require_valid(p)
    return 3 * p.a / (4 * p.r * p.l1 * p.d0), p.a / (4 * p.l1 * p.d0)


def efficiency_alpha_beta(p: EngineParams) -> float:
    """Same efficiency written as 1 - (3 l1 / l3)(1 - alpha)/(1 - beta)."""
    p = require_valid(p)
    alpha, beta = shorthands(p)
    return 1.0 - (3 * p.l1 / (p.r * p.l1)) * (1 - alpha) / (1 - beta)


def efficiency_ho_limit(r: float) -> float:
    if not r > 3:
        raise RatioTooSmall(f"width ratio r must exceed 3, got {r!r}")
    return 1.0 - 3.0 / r


def energy_high(p: EngineParams) -> float:
    p = require_valid(p)
    return p.a / (2 * p.l1) - p.a ** 2 / (16 * p.l1 ** 2 * p.d0)


def energy_low(p: EngineParams) -> float:
    p = require_valid(p)
    l3 = p.r * p.l1
    return 3 * p.a / (2 * l3) - 9 * p.a ** 2 / (16 * l3 ** 2 * p.d0)


def energy_ratio_efficiency(p: EngineParams) -> float:
    return 1.0 - energy_low(p) / energy_high(p)


def evaluate_cycle(p: EngineParams) -> CycleResult:
    from .power import cycle_time, power_output

    p = require_valid(p)
    alpha, beta = shorthands(p)
    return CycleResult(
        widths=stroke_endpoints(p),
        work_per_stroke=tuple(stroke_work(k, p) for k in STROKES),
        total_work=cycle_work(p),
        heat_in=heat(p, HeatSide.IN),
        heat_out=heat(p, HeatSide.OUT),
        eta=efficiency(p),
        eta_ho=efficiency_ho_limit(p.r),
        eta_energy_ratio=energy_ratio_efficiency(p),
        alpha_shorthand=alpha,
        beta_shorthand=beta,
        e_high=energy_high(p),
        e_low=energy_low(p),
        cycle_time=cycle_time(p),
        power=power_output(p),
    )
