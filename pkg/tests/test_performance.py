import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nanofet.errors import InvalidInput, NegativeGap
from nanofet.performance import (
    CapacitorGeometry, OperatingPoint, ResistanceModel, ScalingScenario, breakdown_voltage, capacitance,
    gap_metrics, junction_resistance, landauer_check, operating_point, scale_operating_point, system_report,
)

R4 = 4 * 25813.0
BASE = operating_point(1.0, 1e-18, R4)
WORKED_GEOM = CapacitorGeometry(0.335, 1.23, 4.7, 5.7)


def test_worked_capacitance():
    assert WORKED_GEOM.log_ratio == pytest.approx(1.3007, abs=1e-4)
    assert capacitance(WORKED_GEOM) == pytest.approx(1.2e-18, rel=0.05)
    assert capacitance(WORKED_GEOM, 1.29) == pytest.approx(1.2e-18, rel=0.05)
    vac = CapacitorGeometry(0.335, 1.23, 4.7, 1.0)
    assert capacitance(WORKED_GEOM) / capacitance(vac) == pytest.approx(5.7)


def test_capacitance_formula_oracle():
    # C = 2 pi eps L / ln(b/a), evaluated directly in SI
    expected = 2 * math.pi * 5.7 * 8.85e-12 * 4.7e-9 / math.log(1.23 / 0.335)
    assert capacitance(WORKED_GEOM) == pytest.approx(expected, rel=1e-12)


geoms = st.tuples(st.floats(0.05, 2), st.floats(1.01, 10), st.floats(0.1, 50), st.floats(1, 20))


@given(geoms, st.floats(1.01, 3))
def test_capacitance_monotone(g, factor):
    a, ratio, length, kappa = g
    base = capacitance(CapacitorGeometry(a, a * ratio, length, kappa))
    assert capacitance(CapacitorGeometry(a, a * ratio, length, kappa * factor)) > base
    assert capacitance(CapacitorGeometry(a, a * ratio, length * factor, kappa)) > base
    assert capacitance(CapacitorGeometry(a, a * ratio * factor, length, kappa)) < base


def test_geometry_validation():
    with pytest.raises(InvalidInput):
        CapacitorGeometry(1.0, 0.5, 1.0)
    with pytest.raises(InvalidInput):
        CapacitorGeometry(0.1, 0.5, -1.0)
    with pytest.raises(InvalidInput):
        CapacitorGeometry(0.1, 0.5, 1.0, 0.5)


def test_gap_metrics_exact():
    assert gap_metrics(1.4, 0.2, 0.34) == (1.2, 0.86)
    assert breakdown_voltage(1.2, 1.0) == 1.2
    assert breakdown_voltage(0.86, 1.0) == 0.86
    assert breakdown_voltage(0.86, 3.0) == pytest.approx(2.58)
    with pytest.raises(NegativeGap):
        gap_metrics(0.5, 0.3, 0.34)
    with pytest.raises(InvalidInput):
        gap_metrics(0.2, 0.3, 0.0)
    with pytest.raises(InvalidInput):
        breakdown_voltage(0.0)


def test_resistance():
    assert junction_resistance(ResistanceModel()) == 103252.0
    assert junction_resistance(ResistanceModel(1)) == 25813.0
    with pytest.raises(InvalidInput):
        ResistanceModel(-1)


def test_operating_point_chain():
    op = BASE
    assert op.time_constant == pytest.approx(1e-13, rel=0.10)
    assert op.frequency == pytest.approx(1e13, rel=0.10)
    assert op.current == pytest.approx(1e-5, rel=0.10)
    assert op.power == pytest.approx(1e-5, rel=0.10)
    assert op.energy_per_op == pytest.approx(1e-18, rel=0.10)
    assert op.electrons == pytest.approx(6.2422, abs=1e-4)
    p = operating_point(1.0, 1e-18, 1e5)
    assert p.time_constant == pytest.approx(1e-13) and p.frequency == pytest.approx(1e13)


@given(st.floats(0.1, 10), st.floats(1e-20, 1e-15), st.floats(1e3, 1e7), st.floats(1, 1e8))
def test_operating_point_self_consistent(v, c, r, s):
    op = OperatingPoint(v, c, r, s)
    assert op.charge == pytest.approx(v * c, rel=1e-10)
    assert op.period == pytest.approx(s * r * c, rel=1e-10)
    assert op.frequency * op.period == pytest.approx(1.0, rel=1e-10)
    assert op.current == pytest.approx(op.charge / op.period, rel=1e-10)
    assert op.power == pytest.approx(op.current**2 * r, rel=1e-10)
    assert op.energy_per_op == pytest.approx(op.power / op.frequency, rel=1e-10)
    assert op.energy_per_op == pytest.approx(c * v * v / s, rel=1e-10)


def test_scaling_examples():
    half = scale_operating_point(BASE, 2)
    assert half.power / BASE.power == pytest.approx(0.25)
    assert half.frequency / BASE.frequency == pytest.approx(0.5)
    assert scale_operating_point(BASE, 1) == BASE
    slow = scale_operating_point(BASE, 1e6)
    assert slow.power == pytest.approx(1e-17, rel=0.10)
    assert slow.frequency == pytest.approx(1e7, rel=0.10)
    with pytest.raises(InvalidInput):
        scale_operating_point(BASE, 0.5)


@given(st.floats(1, 1e4), st.floats(1, 1e4))
def test_scaling_composes(s, r):
    a = scale_operating_point(scale_operating_point(BASE, s), r).to_json_dict()
    b = scale_operating_point(BASE, s * r).to_json_dict()
    for key in a:
        assert a[key] == pytest.approx(b[key], rel=1e-12)


def test_system_scenarios():
    cube = system_report(ScalingScenario(1e6, 1e18), BASE)
    assert cube.total_power == pytest.approx(10, rel=0.10)
    assert cube.total_ops_per_second == pytest.approx(1e25, rel=0.10)
    assert cube.energy_per_op == pytest.approx(1e-24, rel=0.10)
    assert cube.landauer.below_limit
    assert cube.landauer.kT == pytest.approx(4.14e-21, rel=0.01)
    full = system_report(ScalingScenario(1, 1e18), BASE)
    assert full.total_power == pytest.approx(1e13, rel=0.10)
    assert 6.0 <= full.hiroshima_seconds <= 6.6
    assert full.total_volume_cm3 == pytest.approx(1.0)
    single = system_report(ScalingScenario(), BASE)
    assert single.device == BASE and single.total_power == BASE.power
    assert single.hiroshima_seconds is None


@given(st.floats(1, 1e8), st.floats(1, 1e20))
def test_system_identities(s, n):
    rep = system_report(ScalingScenario(s, n), BASE)
    assert rep.energy_per_op == rep.total_power / rep.total_ops_per_second
    doubled = system_report(ScalingScenario(2 * s, 2 * n), BASE)
    assert doubled.total_ops_per_second == pytest.approx(rep.total_ops_per_second, rel=1e-12)


def test_landauer_boundary():
    chk = landauer_check(1e-24, 300)
    assert chk.kT == pytest.approx(1.380649e-23 * 300) and chk.below_limit
    assert not landauer_check(1e-18, 300).below_limit
    assert not landauer_check(chk.kT_ln2, 300).below_limit
    assert landauer_check(math.nextafter(chk.kT_ln2, 0), 300).below_limit
    with pytest.raises(InvalidInput):
        landauer_check(1e-20, 0)


def test_scenario_validation():
    with pytest.raises(InvalidInput):
        ScalingScenario(slowdown=0.5)
    with pytest.raises(InvalidInput):
        ScalingScenario(device_count=0)
    with pytest.raises(InvalidInput):
        OperatingPoint(0.0, 1e-18, 1e5)
