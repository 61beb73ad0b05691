"""Cycle time, power output and the dimensionless power curves.

The ``pstar_*`` curves accept floats or numpy arrays and return the same
kind, so optimizers and figure grids can evaluate them in bulk.
"""

from __future__ import annotations

import math

import numpy as np

from .cycle import LN3, cycle_work
from .errors import DomainError
from .spectra import EngineParams, require_valid

LN_THIRD = math.log(1.0 / 3.0)


def travel_length(p: EngineParams) -> float:
    """Total wall displacement per cycle, 2 (l3 - l1)."""
    p = require_valid(p)
    return 2.0 * (p.r * p.l1 - p.l1)


def cycle_time(p: EngineParams) -> float:
    p = require_valid(p)
    return travel_length(p) / p.vbar


def power_output(p: EngineParams) -> float:
    return cycle_work(p) / cycle_time(p)


def power_closed_form(p: EngineParams) -> float:
    """Power written directly in terms of the width ratio r."""
    p = require_valid(p)
    a, d0, l1, r, v = p.a, p.d0, p.l1, p.r, p.vbar
    return (a * v / (4 * l1 ** 2) * (r - 3) / (r * r - r)
            + a * a * v / (16 * d0 * l1 ** 3) * (9 - r * r) / (r ** 3 - r * r)) * LN3


def _ratio(r):
    # plain floats skip numpy entirely; figure grids call this per point
    if isinstance(r, (int, float)):
        ok, x = r >= 3, float(r)
    else:
        x = np.asarray(r, dtype=float)
        ok = np.all(x >= 3)
    if not ok:
        raise DomainError("width ratio must be >= 3 (3 is the degenerate limit point)")
    return x


def _efficiency(eta):
    if isinstance(eta, (int, float)):
        ok, x = 0 <= eta < 1, float(eta)
    else:
        x = np.asarray(eta, dtype=float)
        ok = np.all((x >= 0) & (x < 1))
    if not ok:
        raise DomainError("efficiency must lie in [0, 1)")
    return x


def _out(x):
    return x if isinstance(x, float) or np.ndim(x) != 0 else float(x)


def pstar_r_morse(r):
    """Dimensionless Morse power versus r, in its unsimplified two-term form."""
    r = _ratio(r)
    return _out((r - 3) / (4 * (r * r - r)) * LN3
                - (9 - r * r) / (16 * (r ** 3 - r * r)) * LN_THIRD)


def pstar_r_morse_simplified(r):
    """Algebraically reduced form (3 ln 3 / 16)(r - 3) / r^2."""
    r = _ratio(r)
    return _out(3 * LN3 / 16 * (r - 3) / (r * r))


def pstar_eta_morse(eta):
    e = _efficiency(eta)
    return _out((1 - e) * (3 * e - e * e) / (2 + e))


def pstar_r_ho(r):
    r = _ratio(r)
    return _out((r - 3) / (4 * (r * r - r)) * LN3)


def pstar_eta_ho(eta):
    e = _efficiency(eta)
    return _out((1 - e) * e / (2 + e))
