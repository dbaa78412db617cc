import json
import shutil

import pytest

from nanofet import cli, repro
from nanofet.formats import read_xyz

SUBCOMMANDS = [
    "build-cnt", "build-lonsdaleite", "carve", "passivate", "assemble", "volume", "census", "classify",
    "gap", "fit-gap", "energetics", "dos", "perf", "scale", "system", "landauer", "paper-repro",
    "breakdown", "report",
]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", SUBCOMMANDS)
def test_help_documents_every_flag(capsys, name):
    code, out, _ = run(capsys, name, "--help")
    assert code == 0
    parser = cli._subparser(cli.build_parser(), name)
    for action in parser._actions:
        for flag in action.option_strings:
            assert flag in out
        if action.option_strings and action.dest != "help":
            assert action.help


def test_build_cnt_writes_48_atoms(capsys, tmp_path):
    out_file = tmp_path / "lead.xyz"
    code, out, _ = run(capsys, "build-cnt", "--n", "4", "--m", "4", "--cells", "3", "--out", str(out_file))
    assert code == 0 and "atoms: 48" in out
    assert len(read_xyz(out_file.read_text())) == 48


def test_structure_pipeline(capsys, tmp_path):
    block, rod, cap = tmp_path / "b.xyz", tmp_path / "r.xyz", tmp_path / "p.xyz"
    assert run(capsys, "build-lonsdaleite", "--repeats", "3", "3", "3", "--out", str(block))[0] == 0
    assert run(capsys, "carve", "--input", str(block), "--r-outer", "0.35", "--length", "1.2357",
               "--origin", "0.2522", "0.14560", "0", "--out", str(rod))[0] == 0
    assert run(capsys, "passivate", "--input", str(rod), "--out", str(cap))[0] == 0
    code, out, _ = run(capsys, "census", "--input", str(cap))
    census = json.loads(out)
    assert code == 0 and set(census["coordination"]["C"]) == {"4"}
    code, out, _ = run(capsys, "volume", "--input", str(cap))
    assert code == 0 and out.startswith("vdw_volume: ") and "nm^3" in out


def test_passivate_open_tube(capsys, tmp_path):
    tube, cap = tmp_path / "t.xyz", tmp_path / "c.xyz"
    assert run(capsys, "build-cnt", "--n", "4", "--m", "4", "--cells", "3", "--out", str(tube))[0] == 0
    # sp3 filling of an armchair edge puts hydrogens on top of each other
    code, _, err = run(capsys, "passivate", "--input", str(tube))
    assert code == 1 and "error[StericClash]" in err
    assert run(capsys, "passivate", "--input", str(tube), "--tube-ends", "--out", str(cap))[0] == 0
    census = json.loads(run(capsys, "census", "--input", str(cap))[1])
    assert census["coordination"] == {"C": {"3": 48}, "H": {"1": 16}}


def test_perf_reports_tau(capsys):
    code, out, _ = run(capsys, "perf", "--voltage", "1", "--capacitance", "1e-18", "--junctions", "4")
    assert code == 0
    assert "time_constant: 1.03252e-13 s" in out


def test_perf_default_reports_both_voltages(capsys):
    code, out, _ = run(capsys, "perf", "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == {"operating", "derated"}
    assert data["derated"]["voltage_volts"] == 0.86


def test_fit_gap_default(capsys):
    code, out, _ = run(capsys, "fit-gap")
    assert code == 0 and "g_infinity: 6.45911e+00 eV" in out


def test_fit_gap_input(capsys, tmp_path):
    p = tmp_path / "t1.csv"
    p.write_text((repro.data_dir() / "table1_gap_series.csv").read_text())
    code, out, _ = run(capsys, "fit-gap", "--input", str(p), "--json")
    assert code == 0 and abs(json.loads(out)["g_infinity_eV"] - 6.46) < 0.01


def test_system_and_landauer(capsys):
    code, out, _ = run(capsys, "system", "--voltage", "1", "--capacitance", "1e-18", "--slowdown", "1e6")
    assert code == 0 and "below_landauer_limit: true" in out and "total_power: 9.68504e+00 W" in out
    code, out, _ = run(capsys, "landauer", "--energy", "1e-18")
    assert code == 0 and "below_limit: false" in out


def test_dos_and_energetics(capsys, tmp_path):
    spec = tmp_path / "s.csv"
    spec.write_text("# occupied_count=1\nenergy_eV\n-4.579\n-2.386\n")
    code, out, _ = run(capsys, "dos", "--spectrum", str(spec), "--points", "11")
    assert code == 0 and out.splitlines()[0] == "energy_eV,dos" and len(out.splitlines()) == 12
    code, out, _ = run(capsys, "energetics", "--spectrum", str(spec))
    assert code == 0 and "homo_lumo_gap: 2.19300e+00 eV" in out and "B3LYP_tunneling_risk: yes" in out


@pytest.mark.parametrize(
    "argv,name",
    [
        (["gap", "--n", "0", "--m", "0"], "InvalidInput"),
        (["breakdown", "--r-gate", "0.5", "--r-inner", "0.3"], "NegativeGap"),
        (["landauer", "--energy", "1", "--temperature", "0"], "InvalidInput"),
    ],
)
def test_domain_errors_exit_1(capsys, argv, name):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith(f"error[{name}]: ")


def test_parse_error_names_line(capsys, tmp_path):
    bad = tmp_path / "bad.xyz"
    bad.write_text("1\nx\nXx 0 0 0\n")
    code, _, err = run(capsys, "volume", "--input", str(bad))
    assert code == 1 and err.startswith("error[ParseError]: line 3") and "'Xx'" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "gap", "--n", "x", "--m", "1")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_config_merged_under_flags(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# operating point\nvoltage = 2\ncapacitance=1e-18\njunctions = 1\n")
    code, out, _ = run(capsys, "--config", str(cfg), "perf")
    assert code == 0 and "voltage: 2.00000e+00 V" in out and "resistance: 2.58130e+04 ohm" in out
    code, out, _ = run(capsys, "--config", str(cfg), "perf", "--voltage", "1")
    assert "voltage: 1.00000e+00 V" in out
    cfg.write_text("n = 5\nm = 0\n")
    code, out, _ = run(capsys, "--config", str(cfg), "classify")
    assert code == 0 and "semiconducting" in out
    cfg.write_text("bogus = 1\n")
    assert run(capsys, "--config", str(cfg), "classify", "--n", "1", "--m", "1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [["build-cnt", "--n", "7", "--m", "3", "--cells", "2"], ["gap", "--n", "13", "--m", "5", "--method", "zone-folded"],
     ["system", "--json"], ["energetics"], ["paper-repro", "--no-device"]],
)
def test_deterministic_output(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_assemble_subset(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"components": ["gate"], "cap_tube_ends": False}))
    code, out, _ = run(capsys, "assemble", "--spec", str(spec))
    data = json.loads(out)
    assert code == 0 and data["total_atoms"] == data["atom_counts"]["gate"] == 1920


# -- paper-repro ------------------------------------------------------------------------------


def test_paper_repro_passes_and_covers_modules(capsys):
    code, out, _ = run(capsys, "paper-repro", "--json")
    rows = json.loads(out)
    assert code == 0 and rows and all(r["pass"] for r in rows)
    assert {r["module"] for r in rows} == set(repro.MODULES)


def test_paper_repro_strict_ln(capsys):
    code, out, _ = run(capsys, "paper-repro", "--strict-ln", "--no-device", "--json")
    rows = {r["quantity"]: r for r in json.loads(out)}
    assert code == 0
    assert abs(rows["ln(b/a) used for capacitance"]["computed"] - 1.3007) < 1e-4
    assert rows["parasitic capacitance"]["pass"]


def test_report_subcommand(capsys):
    code, out, _ = run(capsys, "report")
    assert code == 0 and "RC time constant" in out and "rows pass" in out


@pytest.fixture
def data_copy(tmp_path, monkeypatch):
    target = tmp_path / "data"
    shutil.copytree(repro.data_dir(), target)
    monkeypatch.setenv("NANOFET_DATA_DIR", str(target))
    return target


def test_paper_repro_missing_file(capsys, data_copy):
    (data_copy / "table1_gap_series.csv").unlink()
    code, _, err = run(capsys, "paper-repro", "--no-device")
    assert code == 1 and err.startswith("error[MissingData]") and "table1_gap_series.csv" in err


def test_paper_repro_corrupted_row(capsys, data_copy):
    path = data_copy / "table1_gap_series.csv"
    path.write_text(path.read_text().replace("6.825", "6.8x5"))
    code, _, err = run(capsys, "paper-repro", "--no-device")
    assert code == 1 and "table1_gap_series.csv" in err and "row 3" in err


def test_paper_repro_checksum_mismatch(capsys, data_copy):
    path = data_copy / "figure9_gate_fit.csv"
    path.write_text(path.read_text() + "22,22,-9.0\n")
    code, out, _ = run(capsys, "paper-repro", "--no-device")
    assert code == 1 and "reference files matching manifest" in out and "FAIL" in out


def test_manifest_matches_bundled_data():
    assert repro.verify_manifest() == []
