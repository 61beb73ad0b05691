import csv
import io
from pathlib import Path

import numpy as np
import pytest

from morse_carnot import figures, power
from morse_carnot.cycle import STROKES, StrokeKind, stroke_endpoints, stroke_pressure
from morse_carnot.errors import GridError, ValidationError
from morse_carnot.figures import GridSpec
from morse_carnot.spectra import EngineParams

GOLDEN = Path(__file__).parent / "golden"


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_grid_validation():
    for bad in (dict(samples=1), dict(samples=2.5), dict(rmax=3.0)):
        with pytest.raises(GridError):
            GridSpec(**bad)


def test_pv_first_row_and_count(unit_params):
    for n in (2, 7, 64):
        out = rows(figures.emit_pv_diagram(unit_params, GridSpec(samples=n)))
        assert out[0] == ["stroke", "L", "pressure"]
        assert out[1] == ["iso_expand", "1", "0.375"]
        assert len(out) == 4 * n + 1


def test_pv_rejects_invalid_params():
    with pytest.raises(ValidationError):
        figures.emit_pv_diagram(EngineParams(a=1, d0=1, l1=1, r=2))


def test_pv_corners_duplicated(unit_params):
    n = 16
    body = rows(figures.emit_pv_diagram(unit_params, GridSpec(samples=n)))[1:]
    blocks = [body[i * n:(i + 1) * n] for i in range(4)]
    assert [b[0][0] for b in blocks] == [k.value for k in STROKES]
    for this, nxt in zip(blocks, blocks[1:] + blocks[:1]):
        assert float(this[-1][1]) == float(nxt[0][1])
        assert float(this[-1][2]) == pytest.approx(float(nxt[0][2]), rel=1e-12)


def test_pv_rows_reevaluate(unit_params):
    for kind, L, P in rows(figures.emit_pv_diagram(unit_params, GridSpec(samples=32)))[1:]:
        assert stroke_pressure(StrokeKind(kind), float(L), unit_params) == float(P)


def test_pv_follows_traversal(unit_params):
    w = stroke_endpoints(unit_params)
    body = rows(figures.emit_pv_diagram(unit_params, GridSpec(samples=5)))[1:]
    assert [float(r[1]) for r in body[:5]][::4] == [w.l1, w.l2]
    assert [float(r[1]) for r in body[10:15]][::4] == [w.l3, w.l4]


def test_eta_and_r_edges():
    g = GridSpec(samples=8, rmax=10.0)
    eta = rows(figures.emit_pstar_vs_eta(g))
    assert eta[0] == ["eta", "pstar_morse_eq23", "pstar_ho_eq25"]
    assert eta[1] == ["0", "0", "0"] and len(eta) == 9
    r = rows(figures.emit_pstar_vs_r(g))
    assert r[0] == ["r", "pstar_morse_eq21", "pstar_ho_eq24"]
    assert r[1] == ["3", "0", "0"] and r[-1][0] == "10"


def test_curve_rows_reevaluate():
    g = GridSpec(samples=200, rmax=25.0)
    for e, m, h in rows(figures.emit_pstar_vs_eta(g))[1:]:
        assert (power.pstar_eta_morse(float(e)), power.pstar_eta_ho(float(e))) == (float(m), float(h))
    for r, m, h in rows(figures.emit_pstar_vs_r(g))[1:]:
        assert (power.pstar_r_morse(float(r)), power.pstar_r_ho(float(r))) == (float(m), float(h))


def test_ho_column_dominates():
    for r, m, h in rows(figures.emit_pstar_vs_r(GridSpec(samples=300)))[2:]:
        assert float(h) > float(m)


def test_fine_grid_maxima():
    g = GridSpec(samples=10 ** 4, rmax=20.0)
    data = np.array(rows(figures.emit_pstar_vs_eta(g))[1:], dtype=float)
    spacing = 1 / g.samples
    i = int(np.argmax(data[:, 1]))
    assert data[i, 1] == pytest.approx(0.2600, abs=5e-4)
    assert abs(data[i, 0] - 0.4035756) <= spacing
    j = int(np.argmax(data[:, 2]))
    assert data[j, 2] == pytest.approx(0.1010, abs=1e-4)
    assert abs(data[j, 0] - 0.4494897) <= spacing
    rdata = np.array(rows(figures.emit_pstar_vs_r(g))[1:], dtype=float)
    assert abs(rdata[int(np.argmax(rdata[:, 1])), 0] - 6.0) <= 17 / (g.samples - 1)


def test_write_figures_matches_golden(tmp_path, unit_params):
    paths = figures.write_figures(tmp_path, unit_params)
    assert [p.name for p in paths] == [figures.FIG1, figures.FIG2, figures.FIG3]
    for path in paths:
        data = path.read_bytes()
        assert b"\r" not in data and data.endswith(b"\n") and not data.endswith(b"\n\n")
        assert data == (GOLDEN / path.name).read_bytes()
