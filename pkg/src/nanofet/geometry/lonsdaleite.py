"""Hexagonal diamond blocks and cylindrical carving."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..constants import LONSDALEITE_A, LONSDALEITE_C, LONSDALEITE_Z
from ..errors import InvalidInput
from .structure import MolecularStructure


@dataclass(frozen=True)
class LonsdaleiteSpec:
    repeats: tuple[int, int, int] = (1, 1, 1)
    a: float = LONSDALEITE_A
    c: float = LONSDALEITE_C
    z: float = LONSDALEITE_Z

    def __post_init__(self):
        reps = tuple(int(r) for r in self.repeats)
        if len(reps) != 3 or any(r < 1 for r in reps):
            raise InvalidInput(f"repeats must be three integers >= 1, got {self.repeats}")
        if self.a <= 0 or self.c <= 0:
            raise InvalidInput("lattice constants must be positive")
        object.__setattr__(self, "repeats", reps)

    @property
    def cell_vectors(self) -> np.ndarray:
        return np.array(
            [
                [self.a, 0.0, 0.0],
                [-0.5 * self.a, 0.5 * math.sqrt(3.0) * self.a, 0.0],
                [0.0, 0.0, self.c],
            ]
        )

    @property
    def basis(self) -> np.ndarray:
        """Fractional 4f positions, wrapped into [0, 1).

        The cell origin is moved c/4 along z from the usual setting so that
        basal faces cut only axial bonds; a block's faces then passivate with
        one hydrogen per dangling bond instead of three on one site.
        """
        z = self.z
        frac = np.array(
            [
                [1 / 3, 2 / 3, z],
                [1 / 3, 2 / 3, 0.5 - z],
                [2 / 3, 1 / 3, 0.5 + z],
                [2 / 3, 1 / 3, 1.0 - z],
            ]
        )
        frac[:, 2] = np.mod(frac[:, 2] - 0.25, 1.0)
        return frac

    def channel_axis(self, i: int, j: int) -> np.ndarray:
        """Cartesian in-plane point of the empty hexagonal channel at lattice site (i, j)."""
        return i * self.cell_vectors[0] + j * self.cell_vectors[1]

    def central_channel(self) -> np.ndarray:
        """Channel axis (z = 0) closest to the centre of the block."""
        n1, n2, _ = self.repeats
        return self.channel_axis(n1 // 2, n2 // 2)


def build_lonsdaleite(spec: LonsdaleiteSpec) -> MolecularStructure:
    """Block of repeats[0] x repeats[1] x repeats[2] hexagonal cells, 4 atoms each."""
    n1, n2, n3 = spec.repeats
    cells = np.stack(
        np.meshgrid(np.arange(n1), np.arange(n2), np.arange(n3), indexing="ij"), axis=-1
    ).reshape(-1, 1, 3)
    frac = (cells + spec.basis[None, :, :]).reshape(-1, 3)
    positions = frac @ spec.cell_vectors
    return MolecularStructure(("C",) * len(positions), positions, f"lonsdaleite{n1}x{n2}x{n3}")


@dataclass(frozen=True)
class CarveSpec:
    """Coaxial annulus r_inner <= r <= r_outer, 0 <= t <= length along ``axis`` from ``origin``."""

    r_outer: float
    length: float
    r_inner: float = 0.0
    axis: tuple[float, float, float] = (0.0, 0.0, 1.0)
    origin: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        axis = np.asarray(self.axis, float)
        norm = np.linalg.norm(axis)
        if axis.shape != (3,) or not np.isfinite(norm) or norm == 0:
            raise InvalidInput(f"carve axis must be a non-zero 3-vector, got {self.axis}")
        if self.r_inner < 0 or not self.r_outer > self.r_inner:
            raise InvalidInput(f"need r_outer > r_inner >= 0, got ({self.r_inner}, {self.r_outer})")
        if self.length <= 0:
            raise InvalidInput("carve length must be positive")
        object.__setattr__(self, "axis", tuple(float(x) for x in axis / norm))
        object.__setattr__(self, "origin", tuple(float(x) for x in self.origin))


def cylindrical_coordinates(positions: np.ndarray, axis, origin) -> tuple[np.ndarray, np.ndarray]:
    """(radial distance, axial coordinate) of each position about the line origin + t*axis."""
    rel = np.asarray(positions, float) - np.asarray(origin, float)
    t = rel @ np.asarray(axis, float)
    radial = np.linalg.norm(rel - np.outer(t, axis), axis=1)
    return radial, t


def carve_cylinder(s: MolecularStructure, c: CarveSpec) -> MolecularStructure:
    """Keep atoms whose nuclei lie inside the annular cylinder; order preserved."""
    if len(s) == 0:
        return s
    r, t = cylindrical_coordinates(s.positions, c.axis, c.origin)
    keep = (r >= c.r_inner) & (r <= c.r_outer) & (t >= 0.0) & (t <= c.length)
    return s.subset(keep)
