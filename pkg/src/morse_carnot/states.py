"""Two-level superpositions held at constant energy along the isoenergetic strokes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfStrokeRange, ValidationError
from .spectra import EngineParams, morse_energy, morse_pressure, require_valid

# slack for round-off at the stroke ends
_EDGE = 1e-12


@dataclass(frozen=True)
class SuperpositionState:
    """Squared moduli of the ground (w0) and first excited (w1) amplitudes."""

    w0: float
    w1: float

    def __post_init__(self):
        for w in (self.w0, self.w1):
            if not 0.0 <= w <= 1.0:
                raise ValidationError(f"occupation weight {w!r} outside [0, 1]")
        if abs(self.w0 + self.w1 - 1.0) > 1e-12:
            raise ValidationError(f"weights must sum to 1, got {self.w0 + self.w1!r}")

    @classmethod
    def from_ground_weight(cls, w0: float) -> SuperpositionState:
        return cls(w0, 1.0 - w0)


class Side(enum.Enum):
    HIGH = "high"
    LOW = "low"


@dataclass(frozen=True)
class IsoRef:
    """Reference point of an isoenergetic stroke.

    The high-energy stroke starts in the ground state at l1; the low-energy
    stroke starts in the first excited state at l3.
    """

    side: Side
    width: float
    level: int

    @classmethod
    def for_side(cls, side: Side, p: EngineParams) -> IsoRef:
        p = require_valid(p)
        if side is Side.HIGH:
            return cls(side, p.l1, 0)
        return cls(side, p.r * p.l1, 1)

    def energy(self, p: EngineParams) -> float:
        return morse_energy(self.level, self.width, p)

    def stroke_range(self) -> tuple[float, float]:
        if self.side is Side.HIGH:
            return self.width, 3.0 * self.width
        return self.width / 3.0, self.width


def expectation_energy(s: SuperpositionState, L: float, p: EngineParams) -> float:
    return s.w0 * morse_energy(0, L, p) + s.w1 * morse_energy(1, L, p)


def expectation_pressure(s: SuperpositionState, L: float, p: EngineParams) -> float:
    return s.w0 * morse_pressure(0, L, p) + s.w1 * morse_pressure(1, L, p)


def isoenergetic_weight(L: float, ref: IsoRef, p: EngineParams) -> SuperpositionState:
    """Occupation that keeps <E> at the reference energy at width L.

    <E> is linear in w0, so the constraint solves in closed form:
    w0 = (E1(L) - E_ref) / (E1(L) - E0(L)).
    """
    p = require_valid(p)
    lo, hi = ref.stroke_range()
    if not lo * (1 - _EDGE) <= L <= hi * (1 + _EDGE):
        raise OutOfStrokeRange(f"L={L!r} outside the {ref.side.value} stroke [{lo!r}, {hi!r}]")
    e0 = morse_energy(0, L, p)
    e1 = morse_energy(1, L, p)
    w0 = (e1 - ref.energy(p)) / (e1 - e0)
    if not -_EDGE <= w0 <= 1 + _EDGE:
        raise OutOfStrokeRange(f"weight {w0!r} at L={L!r} leaves [0, 1]")
    w0 = min(max(w0, 0.0), 1.0)
    return SuperpositionState.from_ground_weight(w0)
