"""Morse oscillator spectrum, pressure law and engine parameters.

All quantities are in natural units.  The product hbar*s*pi*c that sets the
level spacing is carried as the single constant ``a``; the spacing at width
``L`` is ``a / L``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DepthOrderViolation,
    LevelUnbound,
    NoBoundLevels,
    NonPositive,
    RatioTooSmall,
    ValidationError,
)


@dataclass(frozen=True)
class EngineParams:
    """Physical inputs of the cycle.

    a     -- level-spacing constant (energy * length)
    d0    -- Morse well depth
    l1    -- smallest width reached in the cycle
    r     -- width ratio l3 / l1
    vbar  -- average wall speed
    """

    a: float
    d0: float
    l1: float
    r: float
    vbar: float = 1.0


@dataclass(frozen=True)
class ValidatedParams(EngineParams):
    """EngineParams that passed :func:`validate_params`.

    Only construct through :func:`validate_params`.
    """


@dataclass(frozen=True)
class WidthParams:
    """Shape of the Morse well V(x) = d0 * g * (g - 2), g = exp(-alpha * (x - x0))."""

    alpha_morse: float
    x0: float
    v0: float
    d0: float

    def __post_init__(self):
        if not self.alpha_morse > 0:
            raise NonPositive(f"alpha_morse must be > 0, got {self.alpha_morse!r}")
        if not self.d0 > 0:
            raise NonPositive(f"d0 must be > 0, got {self.d0!r}")


def level_is_bound(n: int, L: float, a: float, d0: float) -> bool:
    # E_n(L) increases with n and P_n(L) > 0 exactly on this domain.
    return (n + 0.5) < 2.0 * d0 * L / a


def validate_params(p: EngineParams) -> ValidatedParams:
    if isinstance(p, ValidatedParams):
        return p
    values = {"a": p.a, "d0": p.d0, "l1": p.l1, "r": p.r, "vbar": p.vbar}
    for name, value in values.items():
        if not math.isfinite(value):
            raise ValidationError(f"{name} must be finite, got {value!r}")
    for name in ("a", "d0", "l1", "vbar"):
        if values[name] <= 0:
            raise NonPositive(f"{name} must be > 0, got {values[name]!r}")
    if p.r <= 3:
        raise RatioTooSmall(f"width ratio r must exceed 3, got {p.r!r}")
    if not level_is_bound(1, p.l1, p.a, p.d0):
        raise LevelUnbound(
            f"l1={p.l1!r} must exceed 3a/(4 d0)={0.75 * p.a / p.d0!r} "
            "for the first excited level to stay bound"
        )
    return ValidatedParams(a=float(p.a), d0=float(p.d0), l1=float(p.l1),
                           r=float(p.r), vbar=float(p.vbar))


def require_valid(p: EngineParams) -> ValidatedParams:
    """Return ``p`` as validated params, validating on the fly if needed."""
    return p if isinstance(p, ValidatedParams) else validate_params(p)


def morse_potential_value(x: float, wp: WidthParams) -> float:
    g = math.exp(-wp.alpha_morse * (x - wp.x0))
    return wp.d0 * g * (g - 2.0)


def width_from_depth(wp: WidthParams) -> float:
    """Width of the well at the level V = -v0."""
    if not 0 < wp.v0 < wp.d0:
        raise DepthOrderViolation(
            f"need 0 < v0 < d0, got v0={wp.v0!r}, d0={wp.d0!r}")
    root = math.sqrt(1.0 - wp.v0 / wp.d0)
    return math.log((1.0 + root) / (1.0 - root)) / wp.alpha_morse


def _check_level(n: int, L: float, a: float, d0: float) -> None:
    if n < 0 or int(n) != n:
        raise ValidationError(f"level index must be a non-negative integer, got {n!r}")
    if not L > 0:
        raise NonPositive(f"width must be > 0, got {L!r}")
    if not level_is_bound(n, L, a, d0):
        raise LevelUnbound(f"level n={n} is not bound at L={L!r}")


def morse_energy(n: int, L: float, p: EngineParams) -> float:
    """Bound-state energy E_n(L) of the Morse oscillator."""
    _check_level(n, L, p.a, p.d0)
    x = p.a * (n + 0.5)
    return x / L - x * x / (4.0 * p.d0 * L * L)


def morse_pressure(n: int, L: float, p: EngineParams) -> float:
    """Level pressure P_n(L) = -dE_n/dL."""
    _check_level(n, L, p.a, p.d0)
    x = p.a * (n + 0.5)
    return x / (L * L) - x * x / (2.0 * p.d0 * L ** 3)


def ho_energy(n: int, L: float, a: float) -> float:
    """Infinite-depth limit of :func:`morse_energy`."""
    if not L > 0:
        raise NonPositive(f"width must be > 0, got {L!r}")
    return a * (n + 0.5) / L


def ho_pressure(n: int, L: float, a: float) -> float:
    if not L > 0:
        raise NonPositive(f"width must be > 0, got {L!r}")
    return a * (n + 0.5) / (L * L)


def max_bound_level(L: float, p: EngineParams) -> int:
    """Largest n with (n + 1/2) < 2 d0 L / a."""
    if not L > 0:
        raise NonPositive(f"width must be > 0, got {L!r}")
    threshold = 2.0 * p.d0 * L / p.a
    if threshold <= 0.5:
        raise NoBoundLevels(f"no bound level at L={L!r}")
    n = math.ceil(threshold - 0.5) - 1
    # guard the float edge where threshold - 0.5 lands on an integer
    while not level_is_bound(n, L, p.a, p.d0):
        n -= 1
    while level_is_bound(n + 1, L, p.a, p.d0):
        n += 1
    return n
