"""Device and system performance chain: capacitance through Landauer accounting.

Everything is SI internally. Geometry enters in nm and is converted once,
in :class:`CapacitorGeometry`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import (
    BOLTZMANN,
    ELEMENTARY_CHARGE,
    EPSILON_0,
    HIROSHIMA_ENERGY,
    NM,
    NM3_PER_CM3,
    QUANTUM_RESISTANCE,
)
from .errors import InvalidInput, NegativeGap

HIROSHIMA_MIN_POWER = 1.0  # W


@dataclass(frozen=True)
class CapacitorGeometry:
    """Coaxial capacitor; radii and length in nm."""

    inner_radius: float
    outer_radius: float
    length: float
    dielectric_constant: float = 5.7

    def __post_init__(self):
        if not 0 < self.inner_radius < self.outer_radius:
            raise InvalidInput("need 0 < inner_radius < outer_radius")
        if self.length <= 0:
            raise InvalidInput("length must be positive")
        if self.dielectric_constant < 1:
            raise InvalidInput("dielectric constant must be >= 1")

    @property
    def log_ratio(self) -> float:
        return math.log(self.outer_radius / self.inner_radius)


def capacitance(g: CapacitorGeometry, log_ratio: float | None = None) -> float:
    """C = 2 pi kappa eps0 L / ln(b/a) in farads.

    ``log_ratio`` overrides the exactly computed ln(b/a), e.g. with a
    rounded value taken from a worked example.
    """
    ln = g.log_ratio if log_ratio is None else log_ratio
    return 2.0 * math.pi * g.dielectric_constant * EPSILON_0 * g.length * NM / ln


def _round_nm(x: float) -> float:
    # femtometre resolution strips binary noise such as 1.2 - 0.34 = 0.8599999999999999
    return round(x, 12)


def gap_metrics(r_gate: float, r_inner: float, vdw_offset: float) -> tuple[float, float]:
    """(nucleus-to-nucleus gap, gap less the vdW offset), all nm."""
    if not r_gate > r_inner:
        raise InvalidInput("r_gate must exceed r_inner")
    if vdw_offset < 0:
        raise InvalidInput("vdw_offset must be non-negative")
    nuclear = _round_nm(r_gate - r_inner)
    adjusted = _round_nm(nuclear - vdw_offset)
    if adjusted <= 0:
        raise NegativeGap(f"adjusted gap {adjusted:.4f} nm is not positive")
    return nuclear, adjusted


def breakdown_voltage(gap: float, dielectric_strength: float = 1.0) -> float:
    """Breakdown voltage (V) for a gap in nm and a strength in V/nm."""
    if gap <= 0 or dielectric_strength <= 0:
        raise InvalidInput("gap and dielectric strength must be positive")
    return gap * dielectric_strength


@dataclass(frozen=True)
class ResistanceModel:
    junction_count: int = 4
    quantum_resistance: float = QUANTUM_RESISTANCE

    def __post_init__(self):
        if self.junction_count < 0:
            raise InvalidInput("junction_count must be >= 0")
        if self.quantum_resistance <= 0:
            raise InvalidInput("quantum_resistance must be positive")


def junction_resistance(m: ResistanceModel) -> float:
    return m.junction_count * m.quantum_resistance


@dataclass(frozen=True)
class OperatingPoint:
    """Switching figures for one device.

    ``time_constant`` is always R*C. A device run ``slowdown`` times slower
    than that limit switches every ``period = slowdown * time_constant``;
    current, power and energy per operation follow from the period.
    """

    voltage: float
    capacitance: float
    resistance: float
    slowdown: float = 1.0

    def __post_init__(self):
        if self.voltage <= 0 or self.capacitance <= 0 or self.resistance <= 0:
            raise InvalidInput("voltage, capacitance and resistance must be positive")
        if self.slowdown < 1:
            raise InvalidInput("slowdown must be >= 1")

    @property
    def charge(self) -> float:
        return self.voltage * self.capacitance

    @property
    def electrons(self) -> float:
        return self.charge / ELEMENTARY_CHARGE

    @property
    def time_constant(self) -> float:
        return self.resistance * self.capacitance

    @property
    def period(self) -> float:
        return self.slowdown * self.time_constant

    @property
    def frequency(self) -> float:
        return 1.0 / self.period

    @property
    def current(self) -> float:
        return self.charge / self.period

    @property
    def power(self) -> float:
        return self.current**2 * self.resistance

    @property
    def energy_per_op(self) -> float:
        return self.power * self.period

    def to_json_dict(self) -> dict:
        return {
            "voltage_volts": self.voltage,
            "capacitance_farads": self.capacitance,
            "resistance_ohms": self.resistance,
            "slowdown": self.slowdown,
            "charge_coulombs": self.charge,
            "electrons": self.electrons,
            "time_constant_seconds": self.time_constant,
            "period_seconds": self.period,
            "frequency_hertz": self.frequency,
            "current_amperes": self.current,
            "power_watts": self.power,
            "energy_per_op_joules": self.energy_per_op,
        }


def operating_point(voltage: float, capacitance: float, resistance: float) -> OperatingPoint:
    return OperatingPoint(voltage, capacitance, resistance)


def scale_operating_point(op: OperatingPoint, s: float) -> OperatingPoint:
    """Run ``s`` times slower at fixed V and R: f/s, I/s, P/s^2, E/s."""
    if s < 1:
        raise InvalidInput("slowdown must be >= 1")
    return OperatingPoint(op.voltage, op.capacitance, op.resistance, op.slowdown * s)


@dataclass(frozen=True)
class ScalingScenario:
    slowdown: float = 1.0
    device_count: float = 1.0
    volume_per_device: float = 1000.0  # nm^3

    def __post_init__(self):
        if self.slowdown < 1:
            raise InvalidInput("slowdown must be >= 1")
        if self.device_count < 1:
            raise InvalidInput("device_count must be >= 1")
        if self.volume_per_device <= 0:
            raise InvalidInput("volume_per_device must be positive")


@dataclass(frozen=True)
class LandauerCheck:
    temperature: float
    kT: float
    kT_ln2: float
    energy_per_op: float

    @property
    def below_limit(self) -> bool:
        return self.energy_per_op < self.kT_ln2

    def to_json_dict(self) -> dict:
        return {
            "temperature_kelvin": self.temperature,
            "kT_joules": self.kT,
            "kT_ln2_joules": self.kT_ln2,
            "energy_per_op_joules": self.energy_per_op,
            "below_limit": self.below_limit,
        }


def landauer_check(energy_per_op: float, temperature: float = 300.0) -> LandauerCheck:
    if temperature <= 0:
        raise InvalidInput("temperature must be positive")
    kT = BOLTZMANN * temperature
    return LandauerCheck(temperature, kT, kT * math.log(2.0), energy_per_op)


@dataclass(frozen=True)
class SystemReport:
    device: OperatingPoint
    device_count: float
    total_power: float
    total_ops_per_second: float
    total_volume_cm3: float
    landauer: LandauerCheck

    @property
    def energy_per_op(self) -> float:
        return self.total_power / self.total_ops_per_second

    @property
    def hiroshima_seconds(self) -> float | None:
        """Seconds to dissipate 6.3e13 J; only meaningful for large systems."""
        if self.total_power <= HIROSHIMA_MIN_POWER:
            return None
        return HIROSHIMA_ENERGY / self.total_power

    def to_json_dict(self) -> dict:
        return {
            "device": self.device.to_json_dict(),
            "device_count": self.device_count,
            "total_power_watts": self.total_power,
            "total_ops_per_second": self.total_ops_per_second,
            "energy_per_op_joules": self.energy_per_op,
            "total_volume_cm3": self.total_volume_cm3,
            "hiroshima_seconds": self.hiroshima_seconds,
            "landauer": self.landauer.to_json_dict(),
        }


def system_report(scn: ScalingScenario, base: OperatingPoint, temperature: float = 300.0) -> SystemReport:
    device = scale_operating_point(base, scn.slowdown)
    total_power = scn.device_count * device.power
    total_ops = scn.device_count * device.frequency
    check = landauer_check(total_power / total_ops, temperature)
    volume = scn.device_count * scn.volume_per_device / NM3_PER_CM3
    return SystemReport(device, scn.device_count, total_power, total_ops, volume, check)
