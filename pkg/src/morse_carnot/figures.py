"""CSV data behind the pressure-width diagram and the two power plots."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import power
from .cycle import STROKES, stroke_endpoints, stroke_pressure
from .errors import GridError
from .spectra import EngineParams, require_valid

FIG1 = "fig1_pv.csv"
FIG2 = "fig2_pstar_eta.csv"
FIG3 = "fig3_pstar_r.csv"


@dataclass(frozen=True)
class GridSpec:
    samples: int = 512
    rmax: float = 20.0

    def __post_init__(self):
        if int(self.samples) != self.samples or self.samples < 2:
            raise GridError(f"need at least 2 samples, got {self.samples!r}")
        if not self.rmax > 3:
            raise GridError(f"rmax must exceed 3, got {self.rmax!r}")


def fmt(x: float) -> str:
    return "%.17g" % x


def _csv(header: str, rows) -> str:
    return header + "\n" + "".join(",".join(row) + "\n" for row in rows)


def emit_pv_diagram(p: EngineParams, g: GridSpec = GridSpec()) -> str:
    """Pressure along each stroke in traversal order; corners appear in both adjacent strokes."""
    p = require_valid(p)
    widths = stroke_endpoints(p)
    rows = []
    for kind in STROKES:
        start, end = widths.stroke_path(kind)
        for L in np.linspace(start, end, g.samples):
            L = float(L)
            rows.append((kind.value, fmt(L), fmt(stroke_pressure(kind, L, p))))
    return _csv("stroke,L,pressure", rows)


def eta_grid(g: GridSpec) -> list[float]:
    return [i / g.samples for i in range(g.samples)]


def r_grid(g: GridSpec) -> list[float]:
    n = g.samples - 1
    return [3.0 + (g.rmax - 3.0) * i / n for i in range(g.samples)]


def emit_pstar_vs_eta(g: GridSpec = GridSpec()) -> str:
    rows = ((fmt(e), fmt(power.pstar_eta_morse(e)), fmt(power.pstar_eta_ho(e)))
            for e in eta_grid(g))
    return _csv("eta,pstar_morse_eq23,pstar_ho_eq25", rows)


def emit_pstar_vs_r(g: GridSpec = GridSpec()) -> str:
    rows = ((fmt(r), fmt(power.pstar_r_morse(r)), fmt(power.pstar_r_ho(r)))
            for r in r_grid(g))
    return _csv("r,pstar_morse_eq21,pstar_ho_eq24", rows)


def write_figures(out_dir, p: EngineParams, g: GridSpec = GridSpec()) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    contents = {
        FIG1: emit_pv_diagram(p, g),
        FIG2: emit_pstar_vs_eta(g),
        FIG3: emit_pstar_vs_r(g),
    }
    paths = []
    for name, text in contents.items():
        path = out / name
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        paths.append(path)
    return paths
