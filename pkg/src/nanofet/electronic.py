"""Nanotube metallicity and band gaps, gap extrapolation and injection bias.

Zone folding works in reduced phases theta1 = k.a1, theta2 = k.a2 of the
graphene lattice. Cutting line q of a (n, m) tube, at axial fraction x of
the 1D Brillouin zone, has

    theta1 = 2 pi (-t2 q + m x) / N,   theta2 = 2 pi (t1 q - n x) / N

with N hexagons per cell and T = t1 a1 + t2 a2. The pi bands are
E = +/- t |1 + exp(i theta1) + exp(i theta2)|.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .constants import A_CC, HOPPING_T
from .errors import DegenerateFit, InvalidInput
from .fitting import ols_line
from .geometry.cnt import cnt_diameter, translation_indices
from .geometry.structure import ChiralIndices

SMALL_DIAMETER = 0.5  # nm, below this the analytic 0.8/D rule is unreliable
GAP_RULE_EV_NM = 0.8


class Metallicity(enum.Enum):
    METALLIC = "metallic"
    SEMICONDUCTING = "semiconducting"


def classify_metallicity(c: ChiralIndices) -> Metallicity:
    return Metallicity.METALLIC if (c.n - c.m) % 3 == 0 else Metallicity.SEMICONDUCTING


def gap_estimate(diameter: float) -> float:
    """Analytic semiconducting-tube gap, 0.8 eV / D[nm]."""
    if diameter <= 0:
        raise InvalidInput(f"diameter must be positive, got {diameter}")
    return GAP_RULE_EV_NM / diameter


@dataclass(frozen=True)
class TightBindingParams:
    t: float = HOPPING_T
    a_cc: float = A_CC
    k_samples: int = 2048

    def __post_init__(self):
        if self.t <= 0:
            raise InvalidInput("hopping t must be positive")
        if self.a_cc <= 0:
            raise InvalidInput("a_cc must be positive")
        if self.k_samples < 64:
            raise InvalidInput("k_samples must be >= 64")


def _abs_f(theta1, theta2):
    return np.abs(1.0 + np.exp(1j * theta1) + np.exp(1j * theta2))


def _golden_min(fn, lo: float, hi: float, tol: float = 1e-15, max_iter: int = 200) -> tuple[float, float]:
    """Golden-section search for a minimum of a unimodal fn on [lo, hi]."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fn(d)
    best = min((fc, c), (fd, d), (fn(a), a), (fn(b), b))
    return best[1], best[0]


def zone_folded_gap(c: ChiralIndices, p: TightBindingParams = TightBindingParams()) -> float:
    """Band gap (eV) from nearest-neighbour graphene bands on the tube's cutting lines.

    Lines q and N - q are time-reversal partners, so only q <= N/2 is
    scanned. A 64-point pass with a Lipschitz lower bound discards lines
    that cannot beat the current best; surviving lines are sampled with
    ``k_samples`` points and refined by golden section around the grid
    minimum.
    """
    n, m = c.n, c.m
    N = c.hexagons_per_cell
    t1, t2 = translation_indices(c)
    q = np.arange(N // 2 + 1, dtype=float)[:, None]
    a_q = 2.0 * math.pi * (-t2) * q / N
    b_q = 2.0 * math.pi * t1 * q / N
    s1 = 2.0 * math.pi * m / N
    s2 = -2.0 * math.pi * n / N
    lipschitz = abs(s1) + abs(s2)

    coarse_x = np.linspace(-0.5, 0.5, 64)[None, :]
    coarse = _abs_f(a_q + s1 * coarse_x, b_q + s2 * coarse_x)
    lower = coarse.min(axis=1) - lipschitz * (1.0 / 63.0) / 2.0
    upper = coarse.min()
    candidates = np.flatnonzero(lower <= upper)

    x = np.linspace(-0.5, 0.5, p.k_samples)
    dx = x[1] - x[0]
    best = math.inf
    for line in candidates:
        aq, bq = float(a_q[line, 0]), float(b_q[line, 0])
        vals = _abs_f(aq + s1 * x, bq + s2 * x)
        i = int(np.argmin(vals))
        if vals[i] - lipschitz * dx > best:
            continue
        lo, hi = x[max(i - 1, 0)], x[min(i + 1, len(x) - 1)]
        _, fmin = _golden_min(lambda xx: float(_abs_f(aq + s1 * xx, bq + s2 * xx)), lo, hi)
        best = min(best, fmin, float(vals[i]))
    return 2.0 * p.t * best


@dataclass(frozen=True)
class GapResult:
    chirality: ChiralIndices
    diameter: float
    metallicity: Metallicity
    gap: float
    method: str
    small_diameter_caveat: bool


def gap_for_chirality(
    c: ChiralIndices, method: str = "analytic", params: TightBindingParams = TightBindingParams()
) -> GapResult:
    """Gap with metallicity context: 0 for metallic tubes under the analytic rule."""
    d = cnt_diameter(c)
    kind = classify_metallicity(c)
    if method == "analytic":
        gap = 0.0 if kind is Metallicity.METALLIC else gap_estimate(d)
    elif method == "zone-folded":
        gap = zone_folded_gap(c, params)
    else:
        raise InvalidInput(f"unknown gap method {method!r}")
    return GapResult(c, d, kind, gap, method, d < SMALL_DIAMETER)


def tight_binding_gap_rule(diameter: float, p: TightBindingParams = TightBindingParams()) -> float:
    """Linearised-band estimate 2 t a_cc / D."""
    return 2.0 * p.t * p.a_cc / diameter


# -- finite-length extrapolation ------------------------------------------


@dataclass(frozen=True)
class GapSeries:
    observations: tuple[tuple[int, float], ...]
    label: str = ""

    def __post_init__(self):
        obs = tuple((int(n), float(g)) for n, g in self.observations)
        ns = [n for n, _ in obs]
        if any(n <= 0 for n in ns):
            raise InvalidInput("repeat units must be positive")
        if len(set(ns)) != len(ns):
            raise InvalidInput("repeat units must be unique")
        if any(g <= 0 for _, g in obs):
            raise InvalidInput("gaps must be positive")
        object.__setattr__(self, "observations", obs)


@dataclass(frozen=True)
class FitResult:
    g_infinity: float
    amplitude: float
    rms_residual: float

    def to_json_dict(self) -> dict:
        return {
            "g_infinity_eV": self.g_infinity,
            "amplitude_eV": self.amplitude,
            "rms_residual_eV": self.rms_residual,
        }


def extrapolate_gap(series: GapSeries | Iterable[tuple[int, float]]) -> FitResult:
    """Least-squares fit of g(N) = g_inf + A / N."""
    obs = series.observations if isinstance(series, GapSeries) else tuple(series)
    if len(obs) < 2:
        raise DegenerateFit("need at least two observations")
    if len({n for n, _ in obs}) == 1:
        raise DegenerateFit("all repeat-unit counts are equal")
    slope, intercept, rms = ols_line([(1.0 / n, g) for n, g in obs])
    return FitResult(intercept, slope, rms)


# -- work functions ----------------------------------------------------------


@dataclass(frozen=True)
class MaterialProperties:
    """Band-edge properties of a channel material (eV).

    ``electron_affinity`` is signed as conduction-band minimum minus vacuum
    level, so a positive value means the band lies above vacuum (negative
    electron affinity in the usual language).
    """

    work_function: float
    electron_affinity: float
    bandgap: float

    def __post_init__(self):
        if self.work_function < 0 or self.bandgap < 0:
            raise InvalidInput("work function and bandgap must be non-negative")

    @property
    def negative_electron_affinity(self) -> bool:
        return self.electron_affinity > 0


LONSDALEITE_CHANNEL = MaterialProperties(work_function=5.8, electron_affinity=0.67, bandgap=6.4)
CNT_WORK_FUNCTION = 5.0
CNT44_WORK_FUNCTION = 4.5


def injection_bias(channel: MaterialProperties, lead_work_function: float) -> float:
    """Source-gate bias (V) that aligns the lead Fermi level with the channel valence band."""
    if channel.work_function <= 0 or lead_work_function <= 0:
        raise InvalidInput("work functions must be positive")
    return channel.work_function - lead_work_function
