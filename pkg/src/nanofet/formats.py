"""Text serialisation: XYZ structures, numeric CSV tables and JSON documents.

XYZ files store Angstroms with six decimals; structures hold nm. CSV
tables are comma-separated with a header row, '.' decimals and no quoting.
Integers are written as integers and floats with ``repr`` so a table read
back is identical to the one written.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .electronic import FitResult, GapSeries
from .energetics import ComponentLevels, InteractionRow, OrbitalSpectrum
from .errors import HeaderMismatch, InvalidInput, ParseError
from .geometry.assembly import DeviceSpec
from .geometry.lonsdaleite import CarveSpec
from .geometry.structure import ELEMENTS, ChiralIndices, MolecularStructure

ANGSTROM_PER_NM = 10.0
_INT_RE = re.compile(r"[+-]?\d+")

# -- XYZ ------------------------------------------------------------------------


@dataclass(frozen=True)
class XyzDocument:
    comment: str
    records: tuple[tuple[str, float, float, float], ...]

    @property
    def atom_count(self) -> int:
        return len(self.records)


def _fmt_coord(x_nm: float) -> str:
    # + 0.0 turns a rounded -0.0 into 0.0
    return f"{round(x_nm * ANGSTROM_PER_NM, 6) + 0.0:.6f}"


def write_xyz(s: MolecularStructure, comment: str | None = None) -> str:
    text = s.label if comment is None else comment
    text = " ".join(text.splitlines())
    lines = [str(len(s)), text]
    for el, (x, y, z) in zip(s.elements, s.positions):
        lines.append(f"{el} {_fmt_coord(x)} {_fmt_coord(y)} {_fmt_coord(z)}")
    return "\n".join(lines) + "\n"


def parse_xyz(text: str) -> XyzDocument:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty XYZ text", line=1)
    try:
        count = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"atom count {lines[0].strip()!r} is not an integer", line=1) from None
    if count < 0:
        raise ParseError("atom count is negative", line=1)
    comment = lines[1] if len(lines) > 1 else ""
    records = []
    for k in range(count):
        lineno = k + 3
        if lineno > len(lines) or not lines[lineno - 1].strip():
            raise ParseError(f"expected {count} atom records, found {k}", line=lineno)
        words = lines[lineno - 1].split()
        if len(words) < 4:
            raise ParseError(f"atom record needs 'El x y z', got {lines[lineno - 1]!r}", line=lineno)
        el = words[0]
        if el not in ELEMENTS:
            raise ParseError(f"unknown element symbol {el!r}", line=lineno)
        try:
            x, y, z = (float(w) for w in words[1:4])
        except ValueError:
            raise ParseError(f"non-numeric coordinate in {lines[lineno - 1]!r}", line=lineno) from None
        if not all(np.isfinite((x, y, z))):
            raise ParseError("non-finite coordinate", line=lineno)
        records.append((el, x, y, z))
    for extra, line in enumerate(lines[count + 2:], start=count + 3):
        if line.strip():
            raise ParseError(f"unexpected content after {count} records", line=extra)
    return XyzDocument(comment, tuple(records))


def read_xyz(text: str) -> MolecularStructure:
    doc = parse_xyz(text)
    pos = np.array([r[1:] for r in doc.records], dtype=float).reshape(-1, 3) / ANGSTROM_PER_NM
    return MolecularStructure(tuple(r[0] for r in doc.records), pos, doc.comment)


# -- CSV tables -------------------------------------------------------------------


@dataclass(frozen=True)
class TableDocument:
    header: tuple[str, ...]
    rows: tuple[tuple[int | float, ...], ...] = ()

    def __post_init__(self):
        header = tuple(self.header)
        rows = tuple(tuple(r) for r in self.rows)
        for k, r in enumerate(rows):
            if len(r) != len(header):
                raise InvalidInput(f"row {k + 1} has {len(r)} values for {len(header)} columns")
        object.__setattr__(self, "header", header)
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> list:
        i = self.header.index(name)
        return [r[i] for r in self.rows]


def _fmt_number(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        raise InvalidInput("booleans are not numeric table values")
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def write_table(t: TableDocument) -> str:
    lines = [",".join(t.header)]
    lines += [",".join(_fmt_number(v) for v in r) for r in t.rows]
    return "\n".join(lines) + "\n"


def _parse_number(token: str, lineno: int, row: int):
    token = token.strip()
    if _INT_RE.fullmatch(token):
        return int(token)
    try:
        v = float(token)
    except ValueError:
        raise ParseError(f"row {row}: {token!r} is not a number", line=lineno) from None
    if not np.isfinite(v):
        raise ParseError(f"row {row}: non-finite value {token!r}", line=lineno)
    return v


def read_table(text: str, expected_header: Sequence[str] | None = None, first_line: int = 1) -> TableDocument:
    lines = text.splitlines()
    if not lines:
        raise ParseError("missing header row", line=first_line)
    header = tuple(h.strip() for h in lines[0].split(","))
    if expected_header is not None and header != tuple(expected_header):
        raise HeaderMismatch(f"expected header {','.join(expected_header)}, got {','.join(header)}", line=first_line)
    rows = []
    for k, line in enumerate(lines[1:], start=1):
        lineno = first_line + k
        if not line.strip():
            continue
        tokens = line.split(",")
        if len(tokens) != len(header):
            raise ParseError(f"row {len(rows) + 1}: {len(tokens)} values for {len(header)} columns", line=lineno)
        rows.append(tuple(_parse_number(tok, lineno, len(rows) + 1) for tok in tokens))
    return TableDocument(header, tuple(rows))


# -- domain tables ------------------------------------------------------------------

GAP_SERIES_HEADER = ("repeat_units", "gap_eV")
INTERACTION_HEADER = ("units", "e_uncorrected", "e_dispersion")
SPECTRUM_HEADER = ("energy_eV",)
DOS_HEADER = ("energy_eV", "dos")


def read_gap_series(text: str, label: str = "") -> GapSeries:
    t = read_table(text, GAP_SERIES_HEADER)
    for k, (n, _) in enumerate(t.rows, start=1):
        if not isinstance(n, int):
            raise ParseError(f"row {k}: repeat_units {n!r} is not an integer", line=k + 1)
    try:
        return GapSeries(tuple((int(n), float(g)) for n, g in t.rows), label)
    except InvalidInput as exc:
        raise ParseError(str(exc)) from None


def write_gap_series(s: GapSeries) -> str:
    return write_table(TableDocument(GAP_SERIES_HEADER, tuple((n, float(g)) for n, g in s.observations)))


def read_interaction_table(text: str) -> list[InteractionRow]:
    t = read_table(text, INTERACTION_HEADER)
    return [InteractionRow(int(u), float(a), float(b)) for u, a, b in t.rows]


def write_interaction_table(rows: Sequence[InteractionRow]) -> str:
    return write_table(TableDocument(
        INTERACTION_HEADER,
        tuple((r.repeat_units, float(r.energy_uncorrected), float(r.energy_dispersion)) for r in rows),
    ))


_OCC_RE = re.compile(r"#\s*occupied_count\s*=\s*(\d+)\s*")


def read_spectrum(text: str, method_label: str = "") -> OrbitalSpectrum:
    """Orbital spectrum: '# occupied_count=N', then an 'energy_eV' column."""
    lines = text.splitlines()
    m = _OCC_RE.fullmatch(lines[0]) if lines else None
    if m is None:
        raise ParseError("first line must be '# occupied_count=<N>'", line=1)
    t = read_table("\n".join(lines[1:]), SPECTRUM_HEADER, first_line=2)
    try:
        return OrbitalSpectrum(tuple(float(r[0]) for r in t.rows), int(m.group(1)), method_label)
    except InvalidInput as exc:
        raise ParseError(str(exc)) from None


def write_spectrum(s: OrbitalSpectrum) -> str:
    body = write_table(TableDocument(SPECTRUM_HEADER, tuple((float(e),) for e in s.energies)))
    return f"# occupied_count={s.occupied_count}\n" + body


def write_dos(energy: np.ndarray, dos: np.ndarray) -> str:
    return write_table(TableDocument(DOS_HEADER, tuple(zip(map(float, energy), map(float, dos)))))


# -- JSON -------------------------------------------------------------------------------


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def fit_result_json(fit: FitResult) -> str:
    return dump_json(fit.to_json_dict())


def read_component_levels(text: str) -> list[ComponentLevels]:
    """JSON list (or single object) of {"label", "homo_eV", "lumo_eV"}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    items = data if isinstance(data, list) else [data]
    out = []
    for k, item in enumerate(items):
        try:
            out.append(ComponentLevels(float(item["homo_eV"]), float(item["lumo_eV"]), str(item.get("label", ""))))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"component {k}: {exc}") from None
    return out


def device_spec_to_dict(d: DeviceSpec) -> dict:
    ins = d.insulator_carve()
    lat = d.lonsdaleite
    return {
        "lead_chirality": [d.lead_chirality.n, d.lead_chirality.m],
        "gate_chirality": [d.gate_chirality.n, d.gate_chirality.m],
        "channel_repeats": d.channel_repeats,
        "channel_radius_nm": d.channel_radius,
        "lead_length_nm": d.lead_length,
        "lead_gap_nm": d.lead_gap,
        "gate_length_nm": d.gate_length,
        "gate_lead_length_nm": d.gate_lead_length,
        "cap_tube_ends": d.cap_tube_ends,
        "components": list(d.components),
        "insulator": {
            "r_inner_nm": ins.r_inner,
            "r_outer_nm": ins.r_outer,
            "length_nm": ins.length,
            "axis": list(ins.axis),
            "origin_nm": list(ins.origin),
        },
        "lonsdaleite": {"a_nm": lat.a, "c_nm": lat.c, "z": lat.z},
    }


def device_spec_from_dict(data: dict) -> DeviceSpec:
    from .geometry.lonsdaleite import LonsdaleiteSpec

    known = {
        "lead_chirality", "gate_chirality", "channel_repeats", "channel_radius_nm", "lead_length_nm",
        "lead_gap_nm", "gate_length_nm", "gate_lead_length_nm", "cap_tube_ends", "components",
        "insulator", "lonsdaleite",
    }
    unknown = set(data) - known
    if unknown:
        raise ParseError(f"unknown device-spec field(s): {', '.join(sorted(unknown))}")
    kw: dict[str, Any] = {}
    try:
        if "lead_chirality" in data:
            kw["lead_chirality"] = ChiralIndices(*data["lead_chirality"])
        if "gate_chirality" in data:
            kw["gate_chirality"] = ChiralIndices(*data["gate_chirality"])
        for key, attr in [
            ("channel_repeats", "channel_repeats"), ("channel_radius_nm", "channel_radius"),
            ("lead_length_nm", "lead_length"), ("lead_gap_nm", "lead_gap"),
            ("gate_length_nm", "gate_length"), ("gate_lead_length_nm", "gate_lead_length"),
            ("cap_tube_ends", "cap_tube_ends"),
        ]:
            if key in data:
                kw[attr] = data[key]
        if "components" in data:
            kw["components"] = tuple(data["components"])
        if "insulator" in data and data["insulator"] is not None:
            ins = data["insulator"]
            kw["insulator"] = CarveSpec(
                r_outer=float(ins["r_outer_nm"]),
                length=float(ins["length_nm"]),
                r_inner=float(ins.get("r_inner_nm", 0.0)),
                axis=tuple(ins.get("axis", (0.0, 0.0, 1.0))),
                origin=tuple(ins.get("origin_nm", (0.0, 0.0, 0.0))),
            )
        if "lonsdaleite" in data:
            lat = data["lonsdaleite"]
            kw["lonsdaleite"] = LonsdaleiteSpec((1, 1, 1), float(lat["a_nm"]), float(lat["c_nm"]), float(lat["z"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed device spec: {exc}") from None
    return DeviceSpec(**kw)
