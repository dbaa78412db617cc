"""Regenerate the byte-level golden files in tests/golden/.

Run only when a format change is intended; the tests compare against the
committed files.
"""

from pathlib import Path

import numpy as np

from nanofet import formats as fm
from nanofet.electronic import GapSeries, extrapolate_gap
from nanofet.energetics import OrbitalSpectrum, dos_broadened
from nanofet.geometry import ChiralIndices, DeviceSpec, MolecularStructure, build_cnt, passivate_hydrogen

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"

TABLE1 = GapSeries(((1, 7.961), (2, 7.393), (5, 6.825), (10, 6.571), (20, 6.462)))
SPECTRUM = OrbitalSpectrum((-9.5, -7.25, -4.579, -2.386, 0.5), 3, "B3LYP")


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    files = {
        "cnt44_x1.xyz": fm.write_xyz(build_cnt(ChiralIndices(4, 4), 1)),
        "methane.xyz": fm.write_xyz(passivate_hydrogen(MolecularStructure(("C",), np.zeros((1, 3)), "methane"))),
        "table1_gap_series.csv": fm.write_gap_series(TABLE1),
        "fit_table1.json": fm.fit_result_json(extrapolate_gap(TABLE1)),
        "spectrum.csv": fm.write_spectrum(SPECTRUM),
        "dos.csv": fm.write_dos(*dos_broadened(SPECTRUM, 0.1, (-10.0, 1.0, 12))),
        "device_spec.json": fm.dump_json(fm.device_spec_to_dict(DeviceSpec())),
    }
    for name, text in files.items():
        (GOLDEN / name).write_text(text, encoding="utf-8")
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
