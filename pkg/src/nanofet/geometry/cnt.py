"""Carbon nanotubes rolled from graphene along a chiral vector."""

from __future__ import annotations

import math

import numpy as np

from ..constants import A_GRAPHENE
from ..errors import InvalidInput
from .structure import ChiralIndices, MolecularStructure


def cnt_diameter(c: ChiralIndices, a_g: float = A_GRAPHENE) -> float:
    """Tube diameter in nm: a_g * sqrt(n^2 + nm + m^2) / pi."""
    return a_g * math.sqrt(c.length_squared) / math.pi


def translation_indices(c: ChiralIndices) -> tuple[int, int]:
    """Integer components (t1, t2) of the translation vector T = t1*a1 + t2*a2."""
    return (2 * c.m + c.n) // c.d_r, -(2 * c.n + c.m) // c.d_r


def translation_length(c: ChiralIndices, a_g: float = A_GRAPHENE) -> float:
    """|T| in nm, the axial period of the tube."""
    return a_g * math.sqrt(3.0 * c.length_squared) / c.d_r


def build_cnt(c: ChiralIndices, unit_cells: int, a_g: float = A_GRAPHENE) -> MolecularStructure:
    """Open-ended tube of ``unit_cells`` translational cells along +z.

    Graphene sites (i, j) + basis are mapped to fractional coordinates
    (u along Ch, v along T) with exact integer arithmetic, then rolled onto
    a cylinder of radius |Ch| / 2pi. Atoms are ordered by (z, azimuth).
    """
    if int(unit_cells) != unit_cells or unit_cells < 1:
        raise InvalidInput(f"unit_cells must be a positive integer, got {unit_cells}")
    unit_cells = int(unit_cells)
    n, m, L2, dR = c.n, c.m, c.length_squared, c.d_r
    t1, t2 = translation_indices(c)

    # With sites in thirds (I, J) = 3*(i, j) + basis offset:
    #   u = (I(2n+m) + J(2m+n)) / (6 L2)
    #   v = dR^2 (I(2t1+t2) + J(2t2+t1)) / (18 L2)
    u_den = 6 * L2
    v_den = 18 * L2
    cu = (2 * n + m, 2 * m + n)
    cv = (dR * dR * (2 * t1 + t2), dR * dR * (2 * t2 + t1))

    # a1, a2 span the unit cell parallelogram through corners 0, Ch, T, Ch+T
    corners_i = [0, n, t1, n + t1]
    corners_j = [0, m, t2, m + t2]
    i_lo, i_hi = min(corners_i) - 1, max(corners_i) + 1
    j_lo, j_hi = min(corners_j) - 1, max(corners_j) + 1
    ii, jj = np.meshgrid(np.arange(i_lo, i_hi + 1), np.arange(j_lo, j_hi + 1), indexing="ij")
    ii, jj = ii.ravel(), jj.ravel()

    u_num, v_num = [], []
    for offset in (0, 1):
        I = 3 * ii + offset
        J = 3 * jj + offset
        un = I * cu[0] + J * cu[1]
        vn = I * cv[0] + J * cv[1]
        keep = (un >= 0) & (un < u_den) & (vn >= 0) & (vn < v_den)
        u_num.append(un[keep])
        v_num.append(vn[keep])
    u_num = np.concatenate(u_num)
    v_num = np.concatenate(v_num)
    if len(u_num) != c.atoms_per_cell:
        raise AssertionError(f"{c}: enumerated {len(u_num)} atoms, expected {c.atoms_per_cell}")

    order = np.lexsort((u_num, v_num))
    u = u_num[order] / u_den
    v = v_num[order] / v_den

    radius = cnt_diameter(c, a_g) / 2.0
    period = translation_length(c, a_g)
    phi = 2.0 * math.pi * u
    cell_pos = np.column_stack([radius * np.cos(phi), radius * np.sin(phi), v * period])
    shifts = np.arange(unit_cells)[:, None, None] * np.array([0.0, 0.0, period])
    positions = (cell_pos[None, :, :] + shifts).reshape(-1, 3)
    elements = ("C",) * len(positions)
    return MolecularStructure(elements, positions, f"CNT{c}x{unit_cells}")


def cells_for_length(c: ChiralIndices, length: float, a_g: float = A_GRAPHENE) -> int:
    """Number of whole cells closest to ``length`` nm (at least one)."""
    return max(1, int(round(length / translation_length(c, a_g))))
