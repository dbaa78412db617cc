"""Van der Waals volume and bond/ring census."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass

import numpy as np

from ..constants import VDW_RADII
from ..errors import InvalidInput
from .structure import MolecularStructure


def vdw_volume(s: MolecularStructure, voxel: float = 0.02) -> float:
    """Volume (nm^3) of the union of vdW spheres, by counting voxel centres."""
    if not 0.005 < voxel <= 0.05:
        raise InvalidInput(f"voxel must be in (0.005, 0.05] nm, got {voxel}")
    if len(s) == 0:
        return 0.0
    radii = np.array([VDW_RADII[e] for e in s.elements])
    lo = s.positions.min(axis=0) - radii.max() - voxel
    hi = s.positions.max(axis=0) + radii.max() + voxel
    shape = tuple(int(math.ceil(v)) for v in (hi - lo) / voxel)
    grid = np.zeros(shape, dtype=bool)

    for r in np.unique(radii):
        # voxel-centre offsets are rebuilt per atom since centres are not grid-aligned
        half = int(math.ceil(r / voxel)) + 1
        steps = np.arange(-half, half + 1)
        for p in s.positions[radii == r]:
            f = (p - lo) / voxel - 0.5
            base = np.floor(f).astype(int)
            frac = f - base
            dx = (steps - frac[0]) ** 2
            dy = (steps - frac[1]) ** 2
            dz = (steps - frac[2]) ** 2
            mask = dx[:, None, None] + dy[None, :, None] + dz[None, None, :] <= (r / voxel) ** 2
            i0, j0, k0 = base - half
            sl = tuple(slice(max(a, 0), min(a + 2 * half + 1, n)) for a, n in zip((i0, j0, k0), shape))
            sub = tuple(slice(s_.start - a, s_.stop - a) for s_, a in zip(sl, (i0, j0, k0)))
            grid[sl] |= mask[sub]
    return float(np.count_nonzero(grid)) * voxel**3


@dataclass(frozen=True)
class Census:
    coordination: dict[str, dict[int, int]]
    rings: dict[int, int]
    atoms_without_ring: int

    def to_json_dict(self) -> dict:
        return {
            "coordination": {el: {str(k): v for k, v in h.items()} for el, h in self.coordination.items()},
            "rings": {str(k): v for k, v in self.rings.items()},
            "atoms_without_ring": self.atoms_without_ring,
        }


def smallest_ring(neighbors: list[list[int]], root: int, max_size: int) -> tuple[int, ...] | None:
    """Atoms of the shortest cycle through ``root`` (up to max_size), or None.

    Breadth-first search labels every node with the root branch it was
    reached through; the first edge joining two different branches closes
    the shortest cycle.
    """
    if len(neighbors[root]) < 2:
        return None
    depth = {root: 0}
    parent = {root: -1}
    branch = {root: -1}
    queue = deque()
    for k, nb in enumerate(neighbors[root]):
        depth[nb], parent[nb], branch[nb] = 1, root, k
        queue.append(nb)
    best = None
    best_len = max_size + 1
    while queue:
        u = queue.popleft()
        if 2 * depth[u] + 1 >= best_len:
            break
        for v in neighbors[u]:
            if v == parent[u] or v == root:
                continue
            if v not in depth:
                if depth[u] + 1 <= max_size // 2:
                    depth[v], parent[v], branch[v] = depth[u] + 1, u, branch[u]
                    queue.append(v)
                continue
            if branch[v] == branch[u]:
                continue
            size = depth[u] + depth[v] + 1
            if size < best_len:
                best_len, best = size, (u, v)
    if best is None:
        return None
    cycle = []
    for end in best:
        path = []
        while end != root:
            path.append(end)
            end = parent[end]
        cycle.extend(path)
    return tuple(sorted(cycle + [root]))


def bond_census(s: MolecularStructure, max_ring: int = 8) -> Census:
    """Coordination histogram per element and unique smallest rings by size."""
    coord: dict[str, Counter] = {}
    for el, k in zip(s.elements, s.coordination):
        coord.setdefault(el, Counter())[int(k)] += 1
    rings: set[tuple[int, ...]] = set()
    without = 0
    nbrs = s.neighbors
    for i in range(len(s)):
        ring = smallest_ring(nbrs, i, max_ring)
        if ring is None:
            without += 1
        else:
            rings.add(ring)
    sizes = Counter(len(r) for r in rings)
    return Census(
        {el: dict(sorted(h.items())) for el, h in sorted(coord.items())},
        dict(sorted(sizes.items())),
        without,
    )
