"""Analysis of tabulated quantum-chemistry outputs.

Nothing here runs an electronic-structure calculation: interaction
energies, orbital energies and coupling integrals are ingested as numbers
and only divided, differenced, fitted or broadened.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInput, NoVirtuals
from .fitting import ols_line

DEFAULT_SIGMA = 0.1           # eV
DEFAULT_TUNNELING_THRESHOLD = 0.1  # eV
DEFAULT_DOS_POINTS = 2001


@dataclass(frozen=True)
class InteractionRow:
    repeat_units: int
    energy_uncorrected: float
    energy_dispersion: float

    def __post_init__(self):
        if int(self.repeat_units) != self.repeat_units or self.repeat_units < 1:
            raise InvalidInput(f"repeat_units must be a positive integer, got {self.repeat_units}")


def per_unit_energy(row: InteractionRow) -> tuple[float, float]:
    return row.energy_uncorrected / row.repeat_units, row.energy_dispersion / row.repeat_units


def linear_trend(points: Sequence[tuple[float, float]]) -> tuple[float, float, float]:
    """OLS (slope, intercept, rms_residual); raises DegenerateFit if all x are equal."""
    return ols_line(points)


@dataclass(frozen=True)
class TrendReport:
    """Regression slope next to the mean per-unit ratio; they answer different questions."""

    slope: float
    intercept: float
    rms_residual: float
    mean_per_unit: float


def dispersion_trend(rows: Sequence[InteractionRow]) -> TrendReport:
    slope, intercept, rms = linear_trend([(r.repeat_units, r.energy_dispersion) for r in rows])
    mean = math.fsum(per_unit_energy(r)[1] for r in rows) / len(rows)
    return TrendReport(slope, intercept, rms, mean)


@dataclass(frozen=True)
class OrbitalSpectrum:
    energies: tuple[float, ...]
    occupied_count: int
    method_label: str = ""

    def __post_init__(self):
        e = tuple(float(x) for x in self.energies)
        if any(b < a for a, b in zip(e, e[1:])):
            raise InvalidInput("orbital energies must be non-decreasing")
        if not 1 <= self.occupied_count <= len(e):
            raise InvalidInput(f"occupied_count {self.occupied_count} outside 1..{len(e)}")
        object.__setattr__(self, "energies", e)


def orbital_gap(s: OrbitalSpectrum) -> tuple[float, float, float]:
    """(homo, lumo, lumo - homo)."""
    if s.occupied_count >= len(s.energies):
        raise NoVirtuals(f"{s.method_label or 'spectrum'} has no virtual orbitals")
    homo = s.energies[s.occupied_count - 1]
    lumo = s.energies[s.occupied_count]
    return homo, lumo, lumo - homo


@dataclass(frozen=True)
class ComponentLevels:
    homo: float
    lumo: float
    label: str = ""

    def __post_init__(self):
        if not self.lumo > self.homo:
            raise InvalidInput(f"{self.label}: LUMO must lie above HOMO")


def component_offset(a: ComponentLevels, b: ComponentLevels) -> tuple[float, float]:
    """(a.homo - b.homo, a.lumo - b.lumo)."""
    return a.homo - b.homo, a.lumo - b.lumo


@dataclass(frozen=True)
class TunnelingAssessment:
    at_risk: bool
    offset_homo: float
    threshold: float
    narrative: str


def tunneling_risk(offset_homo: float, threshold: float = DEFAULT_TUNNELING_THRESHOLD) -> TunnelingAssessment:
    """Flag when the channel HOMO sits more than ``threshold`` below the insulator HOMO."""
    if threshold < 0:
        raise InvalidInput("threshold must be non-negative")
    at_risk = offset_homo < -threshold
    if at_risk:
        text = (
            f"channel HOMO lies {-offset_homo:.4f} eV below the insulator HOMO; once a hole "
            f"sits in the channel, an insulator electron is energetically favoured to fill it"
        )
    else:
        text = f"HOMO offset {offset_homo:+.4f} eV is within the {threshold:.4f} eV threshold"
    return TunnelingAssessment(at_risk, offset_homo, threshold, text)


@dataclass(frozen=True)
class CouplingRecord:
    system_label: str
    j_ab_eff: float

    def __post_init__(self):
        if self.j_ab_eff < 0:
            raise InvalidInput("J_AB,eff must be non-negative")


def default_dos_grid(s: OrbitalSpectrum, sigma: float = DEFAULT_SIGMA) -> tuple[float, float, int]:
    return min(s.energies) - 6 * sigma, max(s.energies) + 6 * sigma, DEFAULT_DOS_POINTS


def dos_broadened(
    s: OrbitalSpectrum, sigma: float = DEFAULT_SIGMA, grid: tuple[float, float, int] | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Sum of unit-area Gaussians at each orbital energy, sampled on ``grid``."""
    if sigma <= 0:
        raise InvalidInput("sigma must be positive")
    lo, hi, points = grid if grid is not None else default_dos_grid(s, sigma)
    if int(points) < 2 or not hi > lo:
        raise InvalidInput("DoS grid needs hi > lo and at least two points")
    energy = np.linspace(lo, hi, int(points))
    levels = np.asarray(s.energies)
    z = (energy[:, None] - levels[None, :]) / sigma
    dos = np.exp(-0.5 * z * z).sum(axis=1) / (sigma * math.sqrt(2.0 * math.pi))
    return energy, dos
