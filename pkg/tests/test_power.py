import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from morse_carnot import power
from morse_carnot.cycle import LN3, cycle_work
from morse_carnot.errors import DomainError
from morse_carnot.spectra import EngineParams, validate_params

from conftest import valid_params


def params(**kw):
    base = dict(a=1.0, d0=1.0, l1=1.0, r=6.0, vbar=1.0)
    base.update(kw)
    return validate_params(EngineParams(**base))


def test_cycle_time_examples():
    assert power.cycle_time(params()) == 10.0
    assert power.cycle_time(params(vbar=2.0)) == 5.0
    assert power.cycle_time(params(r=3.0 + 1e-12)) == pytest.approx(4.0, rel=1e-11)


def test_power_output_examples():
    assert power.power_output(params()) == pytest.approx(0.0171658, abs=1e-7)
    assert power.power_output(params()) == pytest.approx(cycle_work(params()) / 10, rel=1e-15)
    # deep-well limit: (1/4)(3/30) ln 3
    assert power.power_output(params(d0=1e300)) == pytest.approx(0.25 * 0.1 * LN3, rel=1e-14)
    assert power.power_output(params(d0=1e300)) == pytest.approx(power.pstar_r_ho(6.0), rel=1e-14)


@given(valid_params())
def test_closed_form_power(p):
    assert power.power_closed_form(p) == pytest.approx(power.power_output(p), rel=1e-12)


def test_pstar_r_morse_examples():
    assert power.pstar_r_morse(3.0) == 0.0
    assert power.pstar_r_morse(6.0) == pytest.approx(0.0171658, abs=1e-7)
    assert power.pstar_r_morse_simplified(6.0) == pytest.approx(0.0171658, abs=1e-7)
    at_paper_root = power.pstar_r_morse((11 + math.sqrt(73)) / 4)
    assert at_paper_root == pytest.approx(0.0162735, abs=1e-7)
    assert at_paper_root < power.pstar_r_morse(6.0)


def test_pstar_eta_morse_examples():
    assert power.pstar_eta_morse(0.0) == 0.0
    assert power.pstar_eta_morse(0.3860) == pytest.approx(0.2597, abs=5e-5)
    assert power.pstar_eta_morse(0.40357) == pytest.approx(0.26001, abs=5e-6)


def test_ho_curve_examples():
    assert power.pstar_r_ho(6.0) == pytest.approx(3 / 120 * LN3, rel=1e-15)
    assert power.pstar_r_ho(6.0) == pytest.approx(0.0274653, abs=1e-7)
    assert power.pstar_eta_ho(0.5) == pytest.approx(0.1, rel=1e-15)
    assert power.pstar_eta_ho(math.sqrt(6) - 2) == pytest.approx(5 - 2 * math.sqrt(6), rel=1e-13)


def test_domain_errors():
    for bad in (2.9, float("nan")):
        with pytest.raises(DomainError):
            power.pstar_r_morse(bad)
        with pytest.raises(DomainError):
            power.pstar_r_ho(bad)
    for bad in (-0.1, 1.0, float("nan")):
        with pytest.raises(DomainError):
            power.pstar_eta_morse(bad)
        with pytest.raises(DomainError):
            power.pstar_eta_ho(bad)


def test_array_inputs():
    r = np.array([3.0, 6.0, 10.0])
    out = power.pstar_r_morse(r)
    assert isinstance(out, np.ndarray) and out.shape == (3,)
    assert out[1] == power.pstar_r_morse(6.0)
    assert isinstance(power.pstar_eta_ho(0.2), float)


@given(st.floats(3.0 + 1e-6, 1e6))
def test_simplified_identity(r):
    assert power.pstar_r_morse(r) == pytest.approx(power.pstar_r_morse_simplified(r), rel=1e-13)


@given(st.floats(3.0 + 1e-6, 1e6))
def test_ho_curves_related_by_substitution(r):
    eta = 1 - 3 / r
    assert power.pstar_r_ho(r) / (LN3 / 4) == pytest.approx(power.pstar_eta_ho(eta), rel=1e-9)


@given(st.floats(3.0 + 1e-6, 1e6))
def test_ho_r_curve_dominates_morse(r):
    assert power.pstar_r_ho(r) > power.pstar_r_morse(r)


def test_curve_endpoints():
    for f in (power.pstar_r_morse, power.pstar_r_ho):
        assert f(3.0) == 0.0
        assert f(4.0) > 0 and f(50.0) > 0
        assert f(1e12) < 1e-10
    for f in (power.pstar_eta_morse, power.pstar_eta_ho):
        assert f(0.0) == 0.0
        assert f(0.5) > 0
        assert f(1 - 1e-12) < 1e-11


def test_unit_power_matches_dimensionless_curve():
    for r in (3.5, 6.0, 12.0):
        assert power.power_output(params(r=r)) == pytest.approx(power.pstar_r_morse(r), rel=1e-12)
