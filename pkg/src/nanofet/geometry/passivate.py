"""Hydrogen capping of dangling bonds."""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import cKDTree

from ..constants import CH_BOND_CUTOFF, CH_BOND_LENGTH, MIN_HH_DISTANCE
from ..errors import InvalidInput, StericClash
from .structure import MolecularStructure

_COS_T = -1.0 / 3.0
_SIN_T = math.sqrt(8.0) / 3.0
_HALF_T = math.acos(_COS_T) / 2.0

_METHANE = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], float) / math.sqrt(3.0)


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _perpendicular(u: np.ndarray) -> np.ndarray:
    """Deterministic unit vector orthogonal to u."""
    ref = np.array([0.0, 0.0, 1.0]) if abs(u[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    return _unit(np.cross(u, ref))


def missing_tetrahedral_directions(bond_dirs: np.ndarray, reference: np.ndarray | None = None) -> np.ndarray:
    """Unit vectors completing a tetrahedron around an atom with the given bonds.

    ``bond_dirs`` holds 0-3 unit vectors pointing at the existing neighbours.
    ``reference`` (for a single bond) selects the azimuth of the first new
    direction so that the added group is staggered against it.
    """
    k = len(bond_dirs)
    if k == 0:
        return _METHANE.copy()
    if k == 3:
        return _unit(-bond_dirs.sum(axis=0))[None, :]
    if k == 2:
        u1, u2 = bond_dirs
        bis = -_unit(u1 + u2)
        normal = _unit(np.cross(u1, u2))
        return np.array([
            math.cos(_HALF_T) * bis + math.sin(_HALF_T) * normal,
            math.cos(_HALF_T) * bis - math.sin(_HALF_T) * normal,
        ])
    if k == 1:
        u = bond_dirs[0]
        if reference is not None:
            p = reference - (reference @ u) * u
            p = _unit(p) if np.linalg.norm(p) > 1e-8 else _perpendicular(u)
        else:
            p = _perpendicular(u)
        q = np.cross(u, p)
        dirs = []
        for phi in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0):
            dirs.append(_COS_T * u + _SIN_T * (math.cos(phi) * p + math.sin(phi) * q))
        return np.array(dirs)
    raise InvalidInput(f"atom already has {k} neighbours")


def passivate_hydrogen(s: MolecularStructure) -> MolecularStructure:
    """Cap every carbon with fewer than four neighbours using C-H bonds of 0.109 nm.

    Existing atoms are never moved or removed; new hydrogens are appended in
    the order of their parent carbons. Raises :class:`StericClash` when an
    added hydrogen lands within 0.15 nm of another hydrogen or within
    bonding range of a carbon other than its parent.
    """
    el = s.element_array
    if len(s) and not np.all((el == "C") | (el == "H")):
        raise InvalidInput("passivation expects a hydrocarbon structure")
    pos = s.positions
    neighbors = s.neighbors
    new_pos, parents = [], []
    for i in np.flatnonzero(el == "C"):
        nbrs = neighbors[i]
        if len(nbrs) >= 4:
            continue
        dirs = np.array([_unit(pos[j] - pos[i]) for j in nbrs]).reshape(-1, 3)
        reference = None
        if len(nbrs) == 1:
            # stagger against the neighbour's other bonds
            j = nbrs[0]
            others = [k for k in neighbors[j] if k != i]
            if others:
                reference = pos[j] - pos[others[0]]
        for d in missing_tetrahedral_directions(dirs, reference):
            new_pos.append(pos[i] + CH_BOND_LENGTH * d)
            parents.append(int(i))

    if not new_pos:
        return s
    new_pos = np.array(new_pos)
    _check_clashes(s, new_pos, np.array(parents))
    return s.extended(("H",) * len(new_pos), new_pos)


def _check_clashes(s: MolecularStructure, new_pos: np.ndarray, parents: np.ndarray) -> None:
    new_tree = cKDTree(new_pos)
    pairs = new_tree.query_pairs(MIN_HH_DISTANCE, output_type="ndarray")
    if len(pairs):
        a, b = pairs[0]
        d = np.linalg.norm(new_pos[a] - new_pos[b])
        raise StericClash(
            f"hydrogens on carbons {parents[a]} and {parents[b]} would be {d:.3f} nm apart"
        )
    if len(s) == 0:
        return
    el = s.element_array
    old_tree = cKDTree(s.positions)
    for h, near in enumerate(old_tree.query_ball_point(new_pos, MIN_HH_DISTANCE)):
        for j in near:
            d = np.linalg.norm(new_pos[h] - s.positions[j])
            if el[j] == "H" or (j != parents[h] and d < CH_BOND_CUTOFF):
                raise StericClash(f"hydrogen on carbon {parents[h]} would be {d:.3f} nm from atom {j}")
