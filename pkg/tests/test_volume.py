import math

import numpy as np
import pytest

from nanofet.errors import InvalidInput
from nanofet.geometry import MolecularStructure, build_cnt, ChiralIndices, vdw_volume

SPHERE_C = 4.0 / 3.0 * math.pi * 0.17**3


def _atoms(elements, positions):
    return MolecularStructure(tuple(elements), np.asarray(positions, dtype=float))


def _lens_union(r, d):
    """Union volume of two equal spheres with centres d apart."""
    if d >= 2 * r:
        return 2 * 4 / 3 * math.pi * r**3
    cap = math.pi * (4 * r + d) * (2 * r - d) ** 2 / 12
    return 2 * 4 / 3 * math.pi * r**3 - cap


def test_single_atom():
    assert SPHERE_C == pytest.approx(0.02058, abs=1e-5)
    assert vdw_volume(_atoms("C", [[0, 0, 0]]), 0.01) == pytest.approx(SPHERE_C, rel=0.02)


def test_disjoint_atoms_add():
    one = vdw_volume(_atoms("C", [[0, 0, 0]]), 0.01)
    two = vdw_volume(_atoms("CC", [[0, 0, 0], [1.0, 0, 0]]), 0.01)
    assert two == pytest.approx(2 * SPHERE_C, rel=0.02)
    assert two == pytest.approx(2 * one, rel=0.01)


@pytest.mark.parametrize("d", [0.1, 0.154, 0.25])
def test_overlapping_pair_matches_lens(d):
    v = vdw_volume(_atoms("CC", [[0, 0, 0], [d, 0.013, -0.007]]), 0.008)
    assert v == pytest.approx(_lens_union(0.17, d), rel=0.02)


def test_matches_monte_carlo():
    rng = np.random.default_rng(7)
    pos = rng.uniform(0, 0.6, size=(12, 3))
    els = ["C" if k % 3 else "H" for k in range(12)]
    s = _atoms(els, pos)
    radii = np.array([0.17 if e == "C" else 0.12 for e in els])
    lo, hi = pos.min(0) - 0.17, pos.max(0) + 0.17
    pts = rng.uniform(lo, hi, size=(400_000, 3))
    inside = np.zeros(len(pts), dtype=bool)
    for p, r in zip(pos, radii):
        inside |= np.sum((pts - p) ** 2, axis=1) <= r * r
    mc = inside.mean() * np.prod(hi - lo)
    assert vdw_volume(s, 0.01) == pytest.approx(mc, rel=0.02)


def test_voxel_convergence_on_tube():
    tube = build_cnt(ChiralIndices(6, 6), 3)
    a, b = vdw_volume(tube, 0.02), vdw_volume(tube, 0.01)
    assert abs(a - b) / b < 0.03


def test_device_volume(device):
    coarse = vdw_volume(device.structure, 0.02)
    fine = vdw_volume(device.structure, 0.01)
    assert abs(coarse - fine) / fine < 0.03
    assert abs(fine / 46.52 - 1) <= 0.15


@pytest.mark.parametrize("voxel", [0.005, 0.06, -0.01])
def test_voxel_bounds(voxel):
    with pytest.raises(InvalidInput):
        vdw_volume(_atoms("C", [[0, 0, 0]]), voxel)


def test_empty_volume():
    assert vdw_volume(MolecularStructure.empty(), 0.02) == 0.0
