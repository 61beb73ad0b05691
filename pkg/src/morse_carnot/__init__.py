"""Carnot-like quantum heat engine with a Morse-oscillator working substance.

Closed-form cycle quantities, power optimization, figure data, and a ledger
that cross-checks each closed form against an independent numerical route.
"""

from .cycle import (
    CycleResult,
    HeatSide,
    StrokeKind,
    WidthQuad,
    WorkVariant,
    cycle_work,
    efficiency,
    efficiency_ho_limit,
    energy_ratio_efficiency,
    evaluate_cycle,
    heat,
    stroke_endpoints,
    stroke_pressure,
    stroke_work,
)
from .errors import EngineError, ValidationError
from .optimize import Objective, maximize_scalar, optimal_region, paper_polynomial_roots
from .power import cycle_time, power_output
from .spectra import EngineParams, ValidatedParams, WidthParams, morse_energy, morse_pressure, validate_params
from .verify import Ledger, render_report, run_ledger

__version__ = "0.1.0"
