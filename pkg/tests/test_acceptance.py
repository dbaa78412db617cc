"""Acceptance criteria, one test each.

Each test records a single PASS/FAIL line that is printed in the pytest
terminal summary under "acceptance criteria", then asserts. Tolerances are
the pinned acceptance values.
"""

import math
import subprocess
import sys

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from nanofet import formats as fm
from nanofet.electronic import (
    Metallicity, classify_metallicity, extrapolate_gap, gap_for_chirality, gap_estimate,
    tight_binding_gap_rule, zone_folded_gap,
)
from nanofet.energetics import ComponentLevels, InteractionRow, OrbitalSpectrum, component_offset, orbital_gap, per_unit_energy
from nanofet.geometry import (
    ChiralIndices, LonsdaleiteSpec, MolecularStructure, bond_census, build_cnt, build_lonsdaleite, cnt_diameter,
    vdw_volume,
)
from nanofet.performance import (
    CapacitorGeometry, ScalingScenario, breakdown_voltage, capacitance, gap_metrics, operating_point, system_report,
)
from nanofet.repro import load_table1

R4 = 4 * 25813.0


def within(x, ref, rel):
    return abs(x - ref) <= rel * abs(ref)


def record(k: int, title: str, checks: dict[str, bool], detail: str) -> None:
    ok = all(checks.values())
    failed = [name for name, v in checks.items() if not v]
    line = f"[{'PASS' if ok else 'FAIL'}] {k:2d}. {title}: {detail}"
    if failed:
        line += f" (failed: {', '.join(failed)})"
    ACCEPTANCE_LINES[k] = line
    assert ok, line


def test_01_capacitance():
    c = capacitance(CapacitorGeometry(0.335, 1.23, 4.7, 5.7))
    record(1, "capacitance", {"C within 5% of 1.2e-18 F": within(c, 1.2e-18, 0.05)}, f"C = {c:.5e} F")


def test_02_rc_chain():
    op = operating_point(1.0, 1e-18, R4)
    record(2, "RC chain", {
        "tau within 10% of 1e-13 s": within(op.time_constant, 1e-13, 0.10),
        "f within 10% of 1e13 Hz": within(op.frequency, 1e13, 0.10),
    }, f"tau = {op.time_constant:.5e} s, f = {op.frequency:.5e} Hz")


def test_03_heat_chain():
    op = operating_point(1.0, 1e-18, R4)
    record(3, "heat chain", {
        "I within 10% of 1e-5 A": within(op.current, 1e-5, 0.10),
        "P within 10% of 1e-5 W": within(op.power, 1e-5, 0.10),
        "E within 10% of 1e-18 J": within(op.energy_per_op, 1e-18, 0.10),
    }, f"I = {op.current:.5e} A, P = {op.power:.5e} W, E = {op.energy_per_op:.5e} J")


def test_04_system_scenario():
    rep = system_report(ScalingScenario(1e6, 1e18), operating_point(1.0, 1e-18, R4), 300.0)
    record(4, "system scenario", {
        "power 10 W +/-10%": within(rep.total_power, 10.0, 0.10),
        "ops/s 1e25 +/-10%": within(rep.total_ops_per_second, 1e25, 0.10),
        "E/op 1e-24 J +/-10%": within(rep.energy_per_op, 1e-24, 0.10),
        "below Landauer limit": rep.landauer.below_limit,
        "kT within 1% of 4.14e-21 J": within(rep.landauer.kT, 4.14e-21, 0.01),
    }, f"P = {rep.total_power:.5e} W, ops = {rep.total_ops_per_second:.5e}/s, "
       f"E/op = {rep.energy_per_op:.5e} J, kT = {rep.landauer.kT:.5e} J")


def test_05_full_speed_cube():
    rep = system_report(ScalingScenario(1.0, 1e18), operating_point(1.0, 1e-18, R4))
    h = rep.hiroshima_seconds
    record(5, "full-speed cube", {
        "power 1e13 W +/-10%": within(rep.total_power, 1e13, 0.10),
        "hiroshima_seconds in [6.0, 6.6]": h is not None and 6.0 <= h <= 6.6,
    }, f"P = {rep.total_power:.5e} W, hiroshima = {h:.5e} s")


def test_06_gap_extrapolation():
    fit = extrapolate_gap(load_table1())
    record(6, "gap extrapolation", {
        "g_inf in [6.35, 6.55] eV": 6.35 <= fit.g_infinity <= 6.55,
        "RMS < 0.1 eV": fit.rms_residual < 0.1,
    }, f"g_inf = {fit.g_infinity:.5e} eV, rms = {fit.rms_residual:.5e} eV")


def test_07_energetics_tables():
    table2 = [
        (2, 1.2601, -1.8363, 0.6300, -0.9182), (4, 1.7550, -3.1285, 0.4388, -0.7821),
        (6, 1.9485, -4.6998, 0.3248, -0.7833), (8, 2.3873, -6.0269, 0.2984, -0.7534),
        (10, 3.2576, -6.9308, 0.3258, -0.6931),
    ]
    half = 0.5e-4 + 1e-12  # agreement to four decimals
    t2 = 0
    for u, a, b, pa, pb in table2:
        ca, cb = per_unit_energy(InteractionRow(u, a, b))
        t2 += (abs(ca - pa) <= half) + (abs(cb - pb) <= half)
    table4 = [
        ((-5.9451, 0.7339), (-5.4523, 0.6340), (-0.4928, 0.0999)),
        ((-7.4052, 1.8667), (-6.8697, 1.7246), (-0.5355, 0.1421)),
    ]
    t4 = 0
    for ch, ins, (dh, dl) in table4:
        h, l = component_offset(ComponentLevels(*ch), ComponentLevels(*ins))
        t4 += abs(h - dh) <= half and abs(l - dl) <= half
    gaps = [orbital_gap(OrbitalSpectrum(lv, 1))[2] for lv in ((-4.579, -2.386), (-5.501, -1.518))]
    fig11 = abs(gaps[0] - 2.19) <= 0.005 + 1e-12 and abs(gaps[1] - 3.98) <= 0.005 + 1e-12
    record(7, "energetics tables", {
        "10/10 Table 2 per-unit entries": t2 == 10,
        "2/2 Table 4 difference rows": t4 == 2,
        "Figure 11 gaps 2.19 and 3.98 eV": fig11,
    }, f"Table 2 {t2}/10, Table 4 {t4}/2, Figure 11 gaps {gaps[0]:.3f} / {gaps[1]:.3f} eV")


def test_08_metallicity_tb():
    mismatches, worst_tb, worst_rule = 0, 0.0, 0.0
    for n in range(1, 31):
        for m in range(0, n + 1):
            c = ChiralIndices(n, m)
            g = zone_folded_gap(c)
            metallic = (n - m) % 3 == 0
            mismatches += (g < 1e-9) != metallic
            mismatches += (classify_metallicity(c) is Metallicity.METALLIC) != metallic
            d = cnt_diameter(c)
            if not metallic and d > 0.7:
                worst_tb = max(worst_tb, abs(g / tight_binding_gap_rule(d) - 1))
                worst_rule = max(worst_rule, abs(g / gap_estimate(d) - 1))
    g40 = gap_for_chirality(ChiralIndices(4, 0)).gap
    record(8, "metallicity / tight binding", {
        "gap = 0 iff (n-m) mod 3 = 0": mismatches == 0,
        "within 10% of 2 t a_cc / D": worst_tb <= 0.10,
        "within 20% of 0.8 / D": worst_rule <= 0.20,
        "(4,0) estimate in [2.5, 2.8] eV": 2.5 <= g40 <= 2.8,
    }, f"{mismatches} mismatches over 495 tubes, worst dev {worst_tb:.3f} (TB) / {worst_rule:.3f} (0.8/D), "
       f"(4,0) = {g40:.4f} eV")


def test_09_geometry(device):
    n44 = len(build_cnt(ChiralIndices(4, 4), 1))
    n2020 = len(build_cnt(ChiralIndices(20, 20), 1))
    block = build_lonsdaleite(LonsdaleiteSpec((3, 3, 3)))
    d = np.linalg.norm(block.positions[block.bonds[:, 0]] - block.positions[block.bonds[:, 1]], axis=1)
    census = bond_census(device.structure)
    under = sum(v for k, v in census.coordination["C"].items() if k < 3)
    total = len(device.structure)
    vol = vdw_volume(device.structure, 0.02)
    record(9, "geometry", {
        "(4,4) cell = 16": n44 == 16,
        "(20,20) cell = 80": n2020 == 80,
        "Lonsdaleite NN 0.154 +/- 0.002 nm": abs(d.min() - 0.154) <= 0.002 and abs(d.max() - 0.154) <= 0.002,
        "no undercoordinated carbons": under == 0,
        "atoms within 20% of 7694": within(total, 7694, 0.20),
        "vdW volume within 15% of 46.52 nm^3": within(vol, 46.52, 0.15),
    }, f"cells {n44}/{n2020}, NN {d.min():.5f} nm, undercoordinated C {under}, "
       f"atoms {total} ({total / 7694 - 1:+.1%}), volume {vol:.3f} nm^3 ({vol / 46.52 - 1:+.1%})")


def test_10_breakdown():
    nuclear, adjusted = gap_metrics(1.4, 0.2, 0.34)
    vn, va = breakdown_voltage(nuclear, 1.0), breakdown_voltage(adjusted, 1.0)
    record(10, "breakdown", {
        "gap_metrics == (1.2, 0.86)": (nuclear, adjusted) == (1.2, 0.86),
        "breakdown 1.2 V and 0.86 V": (vn, va) == (1.2, 0.86),
    }, f"gaps ({nuclear}, {adjusted}) nm, breakdown ({vn}, {va}) V")


def test_11_round_trips_and_repro():
    rng = np.random.default_rng(20240611)
    xyz_ok = table_ok = 0
    for _ in range(1000):
        n = int(rng.integers(0, 40))
        s = MolecularStructure(
            tuple(rng.choice(["C", "H"], size=n)), rng.uniform(-50, 50, size=(n, 3)), f"random {n}"
        )
        text = fm.write_xyz(s)
        back = fm.read_xyz(text)
        xyz_ok += back.allclose(s, atol=1e-6) and fm.write_xyz(back) == text
        cols = int(rng.integers(1, 6))
        rows = tuple(
            tuple(int(v) if k % 2 else float(v) for k, v in enumerate(rng.normal(0, 10.0 ** rng.integers(-8, 9), cols)))
            for _ in range(int(rng.integers(0, 10)))
        )
        t = fm.TableDocument(tuple(f"c{k}" for k in range(cols)), rows)
        csv = fm.write_table(t)
        table_ok += fm.read_table(csv, t.header) == t and fm.write_table(fm.read_table(csv)) == csv
    proc = subprocess.run([sys.executable, "-m", "nanofet.cli", "paper-repro"], capture_output=True, text=True)
    failing = [ln for ln in proc.stdout.splitlines() if ln.endswith("FAIL")]
    record(11, "round-trips and paper-repro", {
        "1000 XYZ round-trips": xyz_ok == 1000,
        "1000 CSV round-trips": table_ok == 1000,
        "paper-repro exits 0": proc.returncode == 0,
        "every paper-repro row passes": not failing and proc.stdout.rstrip().endswith("rows pass"),
    }, f"XYZ {xyz_ok}/1000, CSV {table_ok}/1000, paper-repro exit {proc.returncode}, "
       f"{proc.stdout.splitlines()[-1] if proc.stdout else 'no output'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
