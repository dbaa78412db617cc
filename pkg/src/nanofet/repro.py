"""Reference data access and the reproduction report.

Reference tables live in ``nanofet/data`` (override with NANOFET_DATA_DIR)
next to a ``MANIFEST.sha256`` checksum file. :func:`reproduce` recomputes
every reproducible published number and pairs it with the published value
and a tolerance.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import electronic as el
from . import energetics as en
from . import performance as pf
from .errors import MissingData, NanofetError, ParseError
from .formats import TableDocument, read_gap_series, read_interaction_table, read_table, write_table

MODULES = ("lattice-geometry", "electronic-model", "energetics-analysis", "device-performance", "io-formats")

ROUNDED_LN_RATIO = 1.29
MANIFEST = "MANIFEST.sha256"


def data_dir() -> Path:
    override = os.environ.get("NANOFET_DATA_DIR")
    return Path(override) if override else Path(__file__).with_name("data")


def data_path(name: str, root: Path | None = None) -> Path:
    path = (root or data_dir()) / name
    if not path.is_file():
        raise MissingData(f"reference file not found: {path}")
    return path


def read_text(name: str, root: Path | None = None) -> str:
    return data_path(name, root).read_text(encoding="utf-8")


def _parse(name: str, fn: Callable[[str], object], root: Path | None):
    try:
        return fn(read_text(name, root))
    except ParseError as exc:
        raise ParseError(f"{name}: {exc}") from None


def load_table1(root: Path | None = None) -> el.GapSeries:
    return _parse("table1_gap_series.csv", lambda t: read_gap_series(t, "table1"), root)


def load_table2(root: Path | None = None) -> list[en.InteractionRow]:
    return _parse("table2_interaction.csv", read_interaction_table, root)


def load_table2_per_unit(root: Path | None = None) -> TableDocument:
    header = ("units", "per_unit_uncorrected", "per_unit_dispersion")
    return _parse("table2_per_unit.csv", lambda t: read_table(t, header), root)


def _json(name: str, root: Path | None):
    def parse(text):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None

    return _parse(name, parse, root)


def load_table4(root: Path | None = None) -> dict:
    return _json("table4_levels.json", root)


def load_figure11(root: Path | None = None) -> dict:
    return _json("figure11_frontier.json", root)


def verify_manifest(root: Path | None = None) -> list[str]:
    """Names of files whose checksum differs from the manifest (missing files included)."""
    root = root or data_dir()
    bad = []
    for line in read_text(MANIFEST, root).splitlines():
        if not line.strip():
            continue
        digest, name = line.split(maxsplit=1)
        path = root / name.strip()
        if not path.is_file() or hashlib.sha256(path.read_bytes()).hexdigest() != digest:
            bad.append(name.strip())
    return bad


# -- report rows -----------------------------------------------------------------------


@dataclass(frozen=True)
class Tolerance:
    kind: str  # "rel", "abs", "range" or "exact"
    value: float = 0.0
    lo: float = 0.0
    hi: float = 0.0

    def accepts(self, reference: float, computed: float) -> bool:
        if not math.isfinite(computed):
            return False
        if self.kind == "rel":
            return abs(computed - reference) <= self.value * abs(reference)
        if self.kind == "abs":
            return abs(computed - reference) <= self.value
        if self.kind == "range":
            return self.lo <= computed <= self.hi
        return computed == reference

    def describe(self) -> str:
        if self.kind == "rel":
            return f"+/-{self.value * 100:g}%"
        if self.kind == "abs":
            return f"+/-{self.value:g}"
        if self.kind == "range":
            return f"in [{self.lo:g}, {self.hi:g}]"
        return "exact"


def rel(x: float) -> Tolerance:
    return Tolerance("rel", x)


def absolute(x: float) -> Tolerance:
    return Tolerance("abs", x)


EXACT = Tolerance("exact")
# four-decimal agreement: half a unit in the last published place
FOUR_DECIMALS = absolute(0.5e-4 + 1e-12)


@dataclass(frozen=True)
class ReproRow:
    quantity: str
    reference: float
    computed: float
    unit: str
    tolerance: Tolerance
    module: str

    @property
    def passed(self) -> bool:
        return self.tolerance.accepts(self.reference, self.computed)

    def to_json_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "reference": self.reference,
            "computed": self.computed,
            "unit": self.unit,
            "tolerance": self.tolerance.describe(),
            "module": self.module,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ReproOptions:
    strict_ln: bool = False
    build_device: bool = True
    voxel: float = 0.02


def _geometry_rows(opts: ReproOptions) -> list[ReproRow]:
    from .geometry import (
        ChiralIndices, DeviceSpec, LonsdaleiteSpec, assemble_device, bond_census, build_cnt,
        build_lonsdaleite, cnt_diameter, vdw_volume,
    )

    g = "lattice-geometry"
    rows = [
        ReproRow("(4,4) atoms per unit cell", 16, len(build_cnt(ChiralIndices(4, 4), 1)), "atoms", EXACT, g),
        ReproRow("(20,20) atoms per unit cell", 80, len(build_cnt(ChiralIndices(20, 20), 1)), "atoms", EXACT, g),
        ReproRow("(4,0) diameter", 0.3, cnt_diameter(ChiralIndices(4, 0)), "nm", absolute(0.05), g),
    ]
    block = build_lonsdaleite(LonsdaleiteSpec((3, 3, 3)))
    nn = min(
        math.dist(block.positions[i], block.positions[j]) for i, j in block.bonds
    )
    rows.append(ReproRow("Lonsdaleite nearest-neighbour distance", 0.154, nn, "nm", absolute(0.002), g))
    if opts.build_device:
        dev = assemble_device(DeviceSpec())
        counts = dev.counts()
        census = bond_census(dev.structure)
        under = sum(v for k, v in census.coordination.get("C", {}).items() if k < 3)
        rows += [
            ReproRow("device atom count", 7694, len(dev.structure), "atoms", rel(0.20), g),
            ReproRow("channel + leads atom count", 502,
                     counts["channel"] + counts["source"] + counts["drain"], "atoms", rel(0.20), g),
            ReproRow("device vdW volume", 46.52, vdw_volume(dev.structure, opts.voxel), "nm^3", rel(0.15), g),
            ReproRow("undercoordinated carbons after passivation", 0, under, "atoms", EXACT, g),
        ]
    return rows


def _electronic_rows(root: Path | None) -> list[ReproRow]:
    from .geometry import ChiralIndices

    e = "electronic-model"
    fit = el.extrapolate_gap(load_table1(root))
    metallic = [
        float(el.classify_metallicity(ChiralIndices(*c)) is el.Metallicity.METALLIC) for c in ((4, 4), (20, 20))
    ]
    return [
        ReproRow("extrapolated channel gap g_inf", 6.4, fit.g_infinity, "eV", absolute(0.1), e),
        ReproRow("gap fit RMS residual", 0.0, fit.rms_residual, "eV", absolute(0.1), e),
        ReproRow("(4,0) gap estimate 0.8/D", 2.7, el.gap_for_chirality(ChiralIndices(4, 0)).gap,
                 "eV", Tolerance("range", lo=2.5, hi=2.8), e),
        ReproRow("gap rule at D = 0.3 nm", 2.7, el.gap_estimate(0.3), "eV", absolute(0.05), e),
        ReproRow("(4,4) metallic", 1.0, metallic[0], "bool", EXACT, e),
        ReproRow("(20,20) metallic", 1.0, metallic[1], "bool", EXACT, e),
        ReproRow("hole-injection bias, 5.0 eV leads", 0.8,
                 el.injection_bias(el.LONSDALEITE_CHANNEL, el.CNT_WORK_FUNCTION), "V", absolute(1e-9), e),
        ReproRow("hole-injection bias, 4.5 eV (4,4) leads", 1.3,
                 el.injection_bias(el.LONSDALEITE_CHANNEL, el.CNT44_WORK_FUNCTION), "V", absolute(1e-9), e),
    ]


def _energetics_rows(root: Path | None) -> list[ReproRow]:
    a = "energetics-analysis"
    rows = []
    ref = load_table2_per_unit(root)
    ref_by_units = {int(r[0]): r for r in ref.rows}
    for r in load_table2(root):
        unc, disp = en.per_unit_energy(r)
        pu = ref_by_units.get(r.repeat_units)
        if pu is None:
            raise MissingData(f"table2_per_unit.csv has no row for {r.repeat_units} units")
        rows.append(ReproRow(f"Table 2 per-unit uncorrected, {r.repeat_units} units", pu[1], unc, "eV",
                             FOUR_DECIMALS, a))
        rows.append(ReproRow(f"Table 2 per-unit dispersion, {r.repeat_units} units", pu[2], disp, "eV",
                             FOUR_DECIMALS, a))
    for method, block in sorted(load_table4(root).items()):
        ch = en.ComponentLevels(block["channel"]["homo_eV"], block["channel"]["lumo_eV"], "channel")
        ins = en.ComponentLevels(block["insulator"]["homo_eV"], block["insulator"]["lumo_eV"], "insulator")
        dh, dl = en.component_offset(ch, ins)
        rows.append(ReproRow(f"Table 4 {method} HOMO difference", block["difference"]["homo_eV"], dh, "eV",
                             FOUR_DECIMALS, a))
        rows.append(ReproRow(f"Table 4 {method} LUMO difference", block["difference"]["lumo_eV"], dl, "eV",
                             FOUR_DECIMALS, a))
        risk = en.tunneling_risk(dh)
        rows.append(ReproRow(f"{method} insulator-to-channel tunneling flagged", 1.0, float(risk.at_risk),
                             "bool", EXACT, a))
    for method, lv in sorted(load_figure11(root).items()):
        spec = en.OrbitalSpectrum((lv["homo_eV"], lv["lumo_eV"]), 1, method)
        rows.append(ReproRow(f"Figure 11 {method} HOMO-LUMO gap", lv["gap_eV"], en.orbital_gap(spec)[2], "eV",
                             absolute(0.005 + 1e-12), a))
    return rows


def _performance_rows(opts: ReproOptions) -> list[ReproRow]:
    p = "device-performance"
    geom = pf.CapacitorGeometry(0.335, 1.23, 4.7, 5.7)
    cap = pf.capacitance(geom, None if opts.strict_ln else ROUNDED_LN_RATIO)
    nuclear, adjusted = pf.gap_metrics(1.4, 0.2, 0.34)
    r = pf.junction_resistance(pf.ResistanceModel(4))
    op = pf.operating_point(1.0, 1e-18, r)
    half = pf.scale_operating_point(op, 2.0)
    slow = pf.scale_operating_point(op, 1e6)
    cube = pf.system_report(pf.ScalingScenario(1e6, 1e18), op)
    full = pf.system_report(pf.ScalingScenario(1.0, 1e18), op)
    ten = rel(0.10)
    return [
        ReproRow("ln(b/a) used for capacitance", ROUNDED_LN_RATIO,
                 geom.log_ratio if opts.strict_ln else ROUNDED_LN_RATIO, "1", rel(0.01), p),
        ReproRow("parasitic capacitance", 1.2e-18, cap, "F", rel(0.05), p),
        ReproRow("vacuum-gap capacitance reduction", 5.7,
                 cap / pf.capacitance(pf.CapacitorGeometry(0.335, 1.23, 4.7, 1.0),
                                      None if opts.strict_ln else ROUNDED_LN_RATIO), "1", rel(1e-9), p),
        ReproRow("gate-channel gap, nucleus to nucleus", 1.2, nuclear, "nm", EXACT, p),
        ReproRow("gate-channel gap, vdW adjusted", 0.86, adjusted, "nm", EXACT, p),
        ReproRow("breakdown voltage, nuclear gap", 1.2, pf.breakdown_voltage(nuclear), "V", EXACT, p),
        ReproRow("breakdown voltage, adjusted gap", 0.86, pf.breakdown_voltage(adjusted), "V", EXACT, p),
        ReproRow("series resistance, 4 junctions", 1e5, r, "ohm", rel(0.05), p),
        ReproRow("electrons per switch", 6.0, op.electrons, "e", rel(0.05), p),
        ReproRow("RC time constant", 1e-13, op.time_constant, "s", ten, p),
        ReproRow("switching frequency", 1e13, op.frequency, "Hz", ten, p),
        ReproRow("switching current", 1e-5, op.current, "A", ten, p),
        ReproRow("device power", 1e-5, op.power, "W", ten, p),
        ReproRow("energy per switch", 1e-18, op.energy_per_op, "J", ten, p),
        ReproRow("power ratio at half speed", 0.25, half.power / op.power, "1", rel(1e-9), p),
        ReproRow("device power at 10^6 slowdown", 1e-17, slow.power, "W", ten, p),
        ReproRow("device frequency at 10^6 slowdown", 1e7, slow.frequency, "Hz", ten, p),
        ReproRow("cube power at 10^6 slowdown", 10.0, cube.total_power, "W", ten, p),
        ReproRow("cube operations per second", 1e25, cube.total_ops_per_second, "1/s", ten, p),
        ReproRow("cube energy per operation", 1e-24, cube.energy_per_op, "J", ten, p),
        ReproRow("kT at 300 K", 4.14e-21, cube.landauer.kT, "J", rel(0.01), p),
        ReproRow("below Landauer limit", 1.0, float(cube.landauer.below_limit), "bool", EXACT, p),
        ReproRow("full-speed cube power", 1e13, full.total_power, "W", ten, p),
        ReproRow("full-speed cube volume", 1.0, full.total_volume_cm3, "cm^3", rel(1e-9), p),
        ReproRow("seconds per Hiroshima-equivalent", 6.3, full.hiroshima_seconds, "s",
                 Tolerance("range", lo=6.0, hi=6.6), p),
    ]


def _format_rows(root: Path | None) -> list[ReproRow]:
    from .formats import read_xyz, write_xyz
    from .geometry import ChiralIndices, build_cnt

    f = "io-formats"
    text = read_text("table1_gap_series.csv", root)
    table_ok = write_table(read_table(text)) == text
    cell = build_cnt(ChiralIndices(4, 4), 3)
    xyz = write_xyz(cell)
    back = read_xyz(xyz)
    xyz_ok = write_xyz(back) == xyz and back.allclose(cell, atol=1e-6)
    return [
        ReproRow("Table 1 rows read", 5, len(load_table1(root).observations), "rows", EXACT, f),
        ReproRow("Table 1 CSV byte round-trip", 1.0, float(table_ok), "bool", EXACT, f),
        ReproRow("(4,4)x3 XYZ record count", 48, len(back), "atoms", EXACT, f),
        ReproRow("(4,4)x3 XYZ round-trip", 1.0, float(xyz_ok), "bool", EXACT, f),
    ]


def reproduce(opts: ReproOptions = ReproOptions(), root: Path | None = None) -> list[ReproRow]:
    """All reproduction rows. Raises MissingData or ParseError for bad reference data."""
    root = root or data_dir()
    if (root / MANIFEST).is_file():
        bad = verify_manifest(root)
    else:
        bad = []
    rows = [ReproRow("reference files matching manifest", 0, len(bad), "files", EXACT, "io-formats")]
    rows += _geometry_rows(opts)
    rows += _electronic_rows(root)
    rows += _energetics_rows(root)
    rows += _performance_rows(opts)
    rows += _format_rows(root)
    return rows


def format_report(rows: list[ReproRow]) -> str:
    width = max(len(r.quantity) for r in rows)
    lines = [f"{'quantity':<{width}}  {'reference':>12}  {'computed':>12}  unit    tolerance        module               result"]
    for r in rows:
        lines.append(
            f"{r.quantity:<{width}}  {r.reference:>12.5e}  {r.computed:>12.5e}  {r.unit:<6}  "
            f"{r.tolerance.describe():<15}  {r.module:<19}  {'PASS' if r.passed else 'FAIL'}"
        )
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} rows pass")
    return "\n".join(lines) + "\n"


__all__ = [
    "MODULES", "NanofetError", "ReproOptions", "ReproRow", "Tolerance", "data_dir", "data_path",
    "format_report", "load_figure11", "load_table1", "load_table2", "load_table2_per_unit", "load_table4",
    "read_text", "reproduce", "verify_manifest",
]
