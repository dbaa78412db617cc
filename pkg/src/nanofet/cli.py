"""Command-line front end: ``nanofet <subcommand> [flags]``.

Exit status is 0 on success, 1 on domain errors (printed as
``error[ErrorName]: message`` on stderr) and 2 on usage errors. Numbers
are printed with six significant digits and a unit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import electronic as el
from . import energetics as en
from . import formats as fm
from . import performance as pf
from . import repro
from .errors import InvalidInput, NanofetError
from .geometry import (
    CarveSpec, ChiralIndices, DeviceSpec, LonsdaleiteSpec, assemble_device, bond_census, build_cnt,
    build_lonsdaleite, cap_tube_ends, carve_cylinder, cnt_diameter, passivate_hydrogen, vdw_volume,
)


class UsageError(Exception):
    pass


def _num(x: float) -> str:
    return f"{x:.5e}"


def _line(out: list[str], name: str, value: float, unit: str = "") -> None:
    out.append(f"{name}: {_num(value)}" + (f" {unit}" if unit else ""))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InvalidInput(f"input file not found: {path}") from None


def _write_output(path: str | None, text: str, summary: str = "") -> str:
    """Write ``text`` to ``path`` and return ``summary``; with no path return ``text``."""
    if path is None or path == "-":
        return text
    Path(path).write_text(text, encoding="utf-8")
    return summary


def _structure_out(args, s) -> str:
    return _write_output(args.out, fm.write_xyz(s), f"atoms: {len(s)}\nwritten: {args.out}\n")


# -- geometry ------------------------------------------------------------------------


def cmd_build_cnt(args) -> str:
    c = ChiralIndices(args.n, args.m)
    return _structure_out(args, build_cnt(c, args.cells))


def cmd_build_lonsdaleite(args) -> str:
    spec = LonsdaleiteSpec(tuple(args.repeats), args.a, args.c)
    return _structure_out(args, build_lonsdaleite(spec))


def cmd_carve(args) -> str:
    s = fm.read_xyz(_read_input(args.input))
    spec = CarveSpec(
        r_outer=args.r_outer, length=args.length, r_inner=args.r_inner,
        axis=tuple(args.axis), origin=tuple(args.origin),
    )
    return _structure_out(args, carve_cylinder(s, spec))


def cmd_passivate(args) -> str:
    s = fm.read_xyz(_read_input(args.input))
    s = cap_tube_ends(s) if args.tube_ends else passivate_hydrogen(s)
    s.validate()
    return _structure_out(args, s)


def cmd_assemble(args) -> str:
    spec = DeviceSpec()
    if args.spec:
        try:
            data = json.loads(_read_input(args.spec))
        except json.JSONDecodeError as exc:
            raise fm.ParseError(f"invalid device spec JSON: {exc.msg}", line=exc.lineno) from None
        spec = fm.device_spec_from_dict(data)
    dev = assemble_device(spec)
    if args.out:
        Path(args.out).write_text(fm.write_xyz(dev.structure), encoding="utf-8")
    report = {"atom_counts": dev.counts(), "total_atoms": len(dev.structure), "spec": fm.device_spec_to_dict(spec)}
    if args.volume:
        report["vdw_volume_nm3"] = vdw_volume(dev.structure, args.voxel)
    return fm.dump_json(report)


def cmd_volume(args) -> str:
    s = fm.read_xyz(_read_input(args.input))
    out: list[str] = []
    _line(out, "vdw_volume", vdw_volume(s, args.voxel), "nm^3")
    _line(out, "voxel", args.voxel, "nm")
    return "\n".join(out) + "\n"


def cmd_census(args) -> str:
    s = fm.read_xyz(_read_input(args.input))
    return fm.dump_json(bond_census(s, args.max_ring).to_json_dict())


# -- electronic -----------------------------------------------------------------------


def cmd_classify(args) -> str:
    c = ChiralIndices(args.n, args.m)
    out = [f"chirality: ({c.n},{c.m})", f"metallicity: {el.classify_metallicity(c).value}"]
    _line(out, "diameter", cnt_diameter(c), "nm")
    return "\n".join(out) + "\n"


def cmd_gap(args) -> str:
    c = ChiralIndices(args.n, args.m)
    params = el.TightBindingParams(t=args.hopping, k_samples=args.k_samples)
    r = el.gap_for_chirality(c, args.method, params)
    out = [f"chirality: ({c.n},{c.m})", f"metallicity: {r.metallicity.value}", f"method: {r.method}"]
    _line(out, "diameter", r.diameter, "nm")
    _line(out, "gap", r.gap, "eV")
    if r.small_diameter_caveat:
        out.append("caveat: diameter below 0.5 nm, curvature effects make this estimate unreliable")
    return "\n".join(out) + "\n"


def cmd_fit_gap(args) -> str:
    text = _read_input(args.input) if args.input else repro.read_text("table1_gap_series.csv")
    fit = el.extrapolate_gap(fm.read_gap_series(text))
    if args.json:
        return fm.fit_result_json(fit)
    out: list[str] = []
    _line(out, "g_infinity", fit.g_infinity, "eV")
    _line(out, "amplitude", fit.amplitude, "eV")
    _line(out, "rms_residual", fit.rms_residual, "eV")
    return "\n".join(out) + "\n"


# -- energetics -------------------------------------------------------------------------


def _levels_from_args(args) -> list[tuple[str, en.ComponentLevels, en.ComponentLevels]]:
    if args.levels:
        comps = {c.label: c for c in fm.read_component_levels(_read_input(args.levels))}
        if "channel" not in comps or "insulator" not in comps:
            raise InvalidInput("levels file needs components labelled 'channel' and 'insulator'")
        return [("input", comps["channel"], comps["insulator"])]
    out = []
    for method, block in sorted(repro.load_table4().items()):
        ch = en.ComponentLevels(block["channel"]["homo_eV"], block["channel"]["lumo_eV"], "channel")
        ins = en.ComponentLevels(block["insulator"]["homo_eV"], block["insulator"]["lumo_eV"], "insulator")
        out.append((method, ch, ins))
    return out


def cmd_energetics(args) -> str:
    text = _read_input(args.interaction) if args.interaction else repro.read_text("table2_interaction.csv")
    rows = fm.read_interaction_table(text)
    out = ["units,per_unit_uncorrected_eV,per_unit_dispersion_eV"]
    for r in rows:
        a, b = en.per_unit_energy(r)
        out.append(f"{r.repeat_units},{_num(a)},{_num(b)}")
    if len(rows) >= 2:
        trend = en.dispersion_trend(rows)
        _line(out, "dispersion_slope", trend.slope, "eV/unit")
        _line(out, "dispersion_intercept", trend.intercept, "eV")
        _line(out, "dispersion_rms_residual", trend.rms_residual, "eV")
        _line(out, "dispersion_mean_per_unit", trend.mean_per_unit, "eV/unit")
    for method, ch, ins in _levels_from_args(args):
        dh, dl = en.component_offset(ch, ins)
        risk = en.tunneling_risk(dh, args.threshold)
        _line(out, f"{method}_homo_offset", dh, "eV")
        _line(out, f"{method}_lumo_offset", dl, "eV")
        out.append(f"{method}_tunneling_risk: {'yes' if risk.at_risk else 'no'} ({risk.narrative})")
    if args.spectrum:
        homo, lumo, gap = en.orbital_gap(fm.read_spectrum(_read_input(args.spectrum)))
        _line(out, "homo", homo, "eV")
        _line(out, "lumo", lumo, "eV")
        _line(out, "homo_lumo_gap", gap, "eV")
    return "\n".join(out) + "\n"


def cmd_dos(args) -> str:
    spectrum = fm.read_spectrum(_read_input(args.spectrum))
    grid = None
    if args.emin is not None or args.emax is not None:
        lo, hi, _ = en.default_dos_grid(spectrum, args.sigma)
        grid = (lo if args.emin is None else args.emin, hi if args.emax is None else args.emax, args.points)
    elif args.points != en.DEFAULT_DOS_POINTS:
        lo, hi, _ = en.default_dos_grid(spectrum, args.sigma)
        grid = (lo, hi, args.points)
    energy, dos = en.dos_broadened(spectrum, args.sigma, grid)
    return _write_output(args.out, fm.write_dos(energy, dos), f"points: {len(energy)}\nwritten: {args.out}\n")


# -- performance --------------------------------------------------------------------------


def _capacitance(args) -> float:
    if args.capacitance is not None:
        return args.capacitance
    g = pf.CapacitorGeometry(args.inner_radius, args.outer_radius, args.length, args.kappa)
    return pf.capacitance(g, args.ln_ratio)


def _resistance(args) -> float:
    if args.resistance is not None:
        return args.resistance
    return pf.junction_resistance(pf.ResistanceModel(args.junctions, args.quantum_resistance))


def _voltages(args) -> list[tuple[str, float]]:
    if args.voltage is not None:
        return [("", args.voltage)]
    _, adjusted = pf.gap_metrics(args.r_gate, args.r_inner, args.vdw_offset)
    return [("operating_", 1.0), ("derated_", pf.breakdown_voltage(adjusted, args.dielectric_strength))]


def _emit_point(out: list[str], op: pf.OperatingPoint, prefix: str = "") -> None:
    units = {
        "voltage_volts": "V", "capacitance_farads": "F", "resistance_ohms": "ohm", "slowdown": "",
        "charge_coulombs": "C", "electrons": "e", "time_constant_seconds": "s", "period_seconds": "s",
        "frequency_hertz": "Hz", "current_amperes": "A", "power_watts": "W", "energy_per_op_joules": "J",
    }
    for key, value in op.to_json_dict().items():
        _line(out, prefix + key.rsplit("_", 1)[0] if units[key] else prefix + key, value, units[key])


def cmd_perf(args) -> str:
    c, r = _capacitance(args), _resistance(args)
    if args.json:
        return fm.dump_json({(p.rstrip("_") or "point"): pf.operating_point(v, c, r).to_json_dict()
                             for p, v in _voltages(args)})
    out: list[str] = []
    for prefix, v in _voltages(args):
        _emit_point(out, pf.operating_point(v, c, r), prefix)
    return "\n".join(out) + "\n"


def cmd_scale(args) -> str:
    c, r = _capacitance(args), _resistance(args)
    out: list[str] = []
    for prefix, v in _voltages(args):
        _emit_point(out, pf.scale_operating_point(pf.operating_point(v, c, r), args.slowdown), prefix)
    return "\n".join(out) + "\n"


def cmd_system(args) -> str:
    c, r = _capacitance(args), _resistance(args)
    scn = pf.ScalingScenario(args.slowdown, args.devices, args.volume_per_device)
    reports = {(p.rstrip("_") or "system"): pf.system_report(scn, pf.operating_point(v, c, r), args.temperature)
               for p, v in _voltages(args)}
    if args.json:
        return fm.dump_json({k: rep.to_json_dict() for k, rep in reports.items()})
    out: list[str] = []
    for key, rep in reports.items():
        p = "" if key == "system" else key + "_"
        _line(out, p + "device_power", rep.device.power, "W")
        _line(out, p + "device_frequency", rep.device.frequency, "Hz")
        _line(out, p + "total_power", rep.total_power, "W")
        _line(out, p + "total_ops_per_second", rep.total_ops_per_second, "1/s")
        _line(out, p + "energy_per_op", rep.energy_per_op, "J")
        _line(out, p + "total_volume", rep.total_volume_cm3, "cm^3")
        _line(out, p + "kT", rep.landauer.kT, "J")
        _line(out, p + "kT_ln2", rep.landauer.kT_ln2, "J")
        out.append(f"{p}below_landauer_limit: {str(rep.landauer.below_limit).lower()}")
        if rep.hiroshima_seconds is not None:
            _line(out, p + "hiroshima_seconds", rep.hiroshima_seconds, "s")
    return "\n".join(out) + "\n"


def cmd_landauer(args) -> str:
    chk = pf.landauer_check(args.energy, args.temperature)
    out: list[str] = []
    _line(out, "temperature", chk.temperature, "K")
    _line(out, "kT", chk.kT, "J")
    _line(out, "kT_ln2", chk.kT_ln2, "J")
    _line(out, "energy_per_op", chk.energy_per_op, "J")
    out.append(f"below_limit: {str(chk.below_limit).lower()}")
    return "\n".join(out) + "\n"


def cmd_breakdown(args) -> str:
    nuclear, adjusted = pf.gap_metrics(args.r_gate, args.r_inner, args.vdw_offset)
    out: list[str] = []
    _line(out, "gap_nuclear", nuclear, "nm")
    _line(out, "gap_adjusted", adjusted, "nm")
    _line(out, "breakdown_nuclear", pf.breakdown_voltage(nuclear, args.dielectric_strength), "V")
    _line(out, "breakdown_adjusted", pf.breakdown_voltage(adjusted, args.dielectric_strength), "V")
    return "\n".join(out) + "\n"


# -- reproduction ---------------------------------------------------------------------------


def _run_repro(args, modules: Sequence[str] | None = None) -> tuple[str, int]:
    opts = repro.ReproOptions(strict_ln=args.strict_ln, build_device=not args.no_device)
    rows = repro.reproduce(opts)
    if modules is not None:
        rows = [r for r in rows if r.module in modules]
    text = fm.dump_json([r.to_json_dict() for r in rows]) if args.json else repro.format_report(rows)
    return text, 0 if all(r.passed for r in rows) else 1


def cmd_paper_repro(args):
    return _run_repro(args)


def cmd_report(args):
    args.no_device = True
    return _run_repro(args, ("device-performance",))


# -- parser ----------------------------------------------------------------------------------


def _add_out(p):
    p.add_argument("--out", help="output path (default: stdout)")


def _add_input(p, what="XYZ structure"):
    p.add_argument("--input", required=True, help=f"{what} file, '-' for stdin")


def _add_device_point(p, voltage_default=None):
    g = p.add_argument_group("operating point")
    g.add_argument("--voltage", type=float, default=voltage_default,
                   help="switching voltage in V (default: report both 1 V and the de-rated breakdown voltage)")
    g.add_argument("--capacitance", type=float, help="capacitance in F (default: coaxial geometry below)")
    g.add_argument("--inner-radius", type=float, default=0.335, help="capacitor inner radius, nm")
    g.add_argument("--outer-radius", type=float, default=1.23, help="capacitor outer radius, nm")
    g.add_argument("--length", type=float, default=4.7, help="capacitor length, nm")
    g.add_argument("--kappa", type=float, default=5.7, help="dielectric constant")
    g.add_argument("--ln-ratio", type=float, help="override ln(b/a), e.g. 1.29")
    g.add_argument("--resistance", type=float, help="series resistance in ohm (default: junction model)")
    g.add_argument("--junctions", type=int, default=4, help="number of quantum-resistance junctions")
    g.add_argument("--quantum-resistance", type=float, default=25813.0, help="resistance per junction, ohm")
    _add_gap_flags(g)


def _add_gap_flags(g):
    g.add_argument("--r-gate", type=float, default=1.4, help="gate radius, nm")
    g.add_argument("--r-inner", type=float, default=0.2, help="inner channel radius, nm")
    g.add_argument("--vdw-offset", type=float, default=0.34, help="vdW offset subtracted from the gap, nm")
    g.add_argument("--dielectric-strength", type=float, default=1.0, help="breakdown field, V/nm")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nanofet", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key=value file merged under explicit flags")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    sub.required = True

    def add(name, fn: Callable, help_: str):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=fn)
        return p

    p = add("build-cnt", cmd_build_cnt, "Build a carbon nanotube segment as XYZ.")
    p.add_argument("--n", type=int, required=True, help="chiral index n")
    p.add_argument("--m", type=int, required=True, help="chiral index m")
    p.add_argument("--cells", type=int, default=1, help="number of translational unit cells")
    _add_out(p)

    p = add("build-lonsdaleite", cmd_build_lonsdaleite, "Build a Lonsdaleite supercell as XYZ.")
    p.add_argument("--repeats", type=int, nargs=3, default=[1, 1, 1], metavar=("NA", "NB", "NC"),
                   help="supercell repeats along a, b, c")
    p.add_argument("--a", type=float, default=LonsdaleiteSpec.a, help="lattice constant a, nm")
    p.add_argument("--c", type=float, default=LonsdaleiteSpec.c, help="lattice constant c, nm")
    _add_out(p)

    p = add("carve", cmd_carve, "Keep atoms inside a cylinder or annulus.")
    _add_input(p)
    p.add_argument("--r-outer", type=float, required=True, help="outer radius, nm")
    p.add_argument("--length", type=float, required=True, help="length along the axis, nm")
    p.add_argument("--r-inner", type=float, default=0.0, help="inner radius, nm (0 for a solid rod)")
    p.add_argument("--axis", type=float, nargs=3, default=[0.0, 0.0, 1.0], help="axis direction")
    p.add_argument("--origin", type=float, nargs=3, default=[0.0, 0.0, 0.0], help="axis origin, nm")
    _add_out(p)

    p = add("passivate", cmd_passivate, "Cap dangling carbon bonds with hydrogen.")
    _add_input(p)
    p.add_argument("--tube-ends", action="store_true",
                   help="in-plane sp2 capping for open nanotube ends on the z axis (default: fill to 4 neighbours)")
    _add_out(p)

    p = add("assemble", cmd_assemble, "Assemble a coaxial device and report atom counts as JSON.")
    p.add_argument("--spec", help="device spec JSON (default: built-in reference device)")
    p.add_argument("--volume", action="store_true", help="also compute the vdW volume")
    p.add_argument("--voxel", type=float, default=0.02, help="voxel edge for --volume, nm")
    p.add_argument("--out", help="write the assembled structure as XYZ")

    p = add("volume", cmd_volume, "Van der Waals volume of a structure.")
    _add_input(p)
    p.add_argument("--voxel", type=float, default=0.02, help="voxel edge, nm")

    p = add("census", cmd_census, "Coordination and ring census as JSON.")
    _add_input(p)
    p.add_argument("--max-ring", type=int, default=8, help="largest ring size searched")

    p = add("classify", cmd_classify, "Metallic or semiconducting nanotube.")
    p.add_argument("--n", type=int, required=True, help="chiral index n")
    p.add_argument("--m", type=int, required=True, help="chiral index m")

    p = add("gap", cmd_gap, "Band gap of a nanotube.")
    p.add_argument("--n", type=int, required=True, help="chiral index n")
    p.add_argument("--m", type=int, required=True, help="chiral index m")
    p.add_argument("--method", choices=["analytic", "zone-folded"], default="analytic", help="gap model")
    p.add_argument("--hopping", type=float, default=2.7, help="tight-binding hopping t, eV")
    p.add_argument("--k-samples", type=int, default=2048, help="axial k samples for zone folding")

    p = add("fit-gap", cmd_fit_gap, "Extrapolate g(N) = g_inf + A/N from a gap series CSV.")
    p.add_argument("--input", help="CSV with repeat_units,gap_eV (default: bundled Table 1 rows)")
    p.add_argument("--json", action="store_true", help="emit JSON")

    p = add("energetics", cmd_energetics, "Per-unit interaction energies, orbital offsets and gaps.")
    p.add_argument("--interaction", help="CSV units,e_uncorrected,e_dispersion (default: bundled Table 2)")
    p.add_argument("--levels", help="component levels JSON (default: bundled Table 4)")
    p.add_argument("--spectrum", help="orbital spectrum CSV to report the HOMO-LUMO gap of")
    p.add_argument("--threshold", type=float, default=0.1, help="tunneling threshold, eV")

    p = add("dos", cmd_dos, "Gaussian-broadened density of states as CSV.")
    p.add_argument("--spectrum", required=True, help="orbital spectrum CSV")
    p.add_argument("--sigma", type=float, default=0.1, help="Gaussian width, eV")
    p.add_argument("--emin", type=float, help="grid start, eV")
    p.add_argument("--emax", type=float, help="grid end, eV")
    p.add_argument("--points", type=int, default=en.DEFAULT_DOS_POINTS, help="grid points")
    _add_out(p)

    p = add("perf", cmd_perf, "Single-device operating point.")
    _add_device_point(p)
    p.add_argument("--json", action="store_true", help="emit JSON")

    p = add("scale", cmd_scale, "Operating point run s times slower.")
    _add_device_point(p)
    p.add_argument("--slowdown", type=float, required=True, help="slowdown factor s >= 1")

    p = add("system", cmd_system, "Many-device system power, throughput and Landauer check.")
    _add_device_point(p)
    p.add_argument("--devices", type=float, default=1e18, help="device count N")
    p.add_argument("--slowdown", type=float, default=1.0, help="slowdown factor s >= 1")
    p.add_argument("--volume-per-device", type=float, default=1000.0, help="nm^3 per device")
    p.add_argument("--temperature", type=float, default=300.0, help="temperature, K")
    p.add_argument("--json", action="store_true", help="emit JSON")

    p = add("landauer", cmd_landauer, "Compare an energy per operation with kT ln 2.")
    p.add_argument("--energy", type=float, required=True, help="energy per operation, J")
    p.add_argument("--temperature", type=float, default=300.0, help="temperature, K")

    p = add("breakdown", cmd_breakdown, "Insulator gaps and breakdown voltages.")
    _add_gap_flags(p)

    for name, fn, text in [
        ("paper-repro", cmd_paper_repro, "Recompute every reproducible published number with pass/fail."),
        ("report", cmd_report, "Device-performance rows of paper-repro only."),
    ]:
        p = add(name, fn, text)
        p.add_argument("--strict-ln", action="store_true", help="use exact ln(b/a) instead of 1.29")
        p.add_argument("--no-device", action="store_true", help="skip assembling the full device")
        p.add_argument("--json", action="store_true", help="emit JSON")
    return parser


# -- config merging ------------------------------------------------------------------------------


def read_config(text: str) -> dict[str, str]:
    cfg = {}
    for k, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {k}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        cfg[key.replace("-", "_")] = value
    return cfg


def _apply_config(sub: argparse.ArgumentParser, cfg: dict[str, str]) -> None:
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, raw in cfg.items():
        action = actions.get(key)
        if action is None or key in ("help", "func"):
            raise UsageError(f"config key {key!r} is not a flag of this subcommand")
        if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
            if raw.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise UsageError(f"config key {key!r} needs a boolean")
            defaults[key] = raw.lower() in ("true", "1", "yes")
        elif action.nargs not in (None, "?"):
            convert = action.type or str
            try:
                defaults[key] = [convert(v) for v in raw.replace(",", " ").split()]
            except ValueError:
                raise UsageError(f"config key {key!r}: bad value {raw!r}") from None
        else:
            defaults[key] = raw  # argparse applies the flag's type to string defaults
        action.required = False
    sub.set_defaults(**defaults)


def _subparser(parser: argparse.ArgumentParser, name: str) -> argparse.ArgumentParser:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return action.choices[name]
    raise KeyError(name)


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = build_parser()
    # the config file is read first so it can satisfy required flags
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    command = next((a for a in rest if not a.startswith("-")), None)
    if known.config and command is not None:
        try:
            cfg = read_config(Path(known.config).read_text(encoding="utf-8"))
            _apply_config(_subparser(parser, command), cfg)
        except KeyError:
            pass  # unknown subcommand: let the full parse report it
        except (OSError, UsageError) as exc:
            parser.error(str(exc))
    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except NanofetError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error[IOError]: {exc}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
