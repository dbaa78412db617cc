"""Core geometry types: chirality indices, atoms and molecular structures."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np
from scipy.spatial import cKDTree

from ..constants import CC_BOND_CUTOFF, CH_BOND_CUTOFF, MIN_ATOM_SEPARATION
from ..errors import InvalidInput

ELEMENTS = ("C", "H")


@dataclass(frozen=True, order=True)
class ChiralIndices:
    """Nanotube chirality (n, m), normalised so that n >= m."""

    n: int
    m: int

    def __post_init__(self):
        n, m = int(self.n), int(self.m)
        if n != self.n or m != self.m:
            raise InvalidInput(f"chiral indices must be integers, got ({self.n}, {self.m})")
        if n < 0 or m < 0:
            raise InvalidInput(f"chiral indices must be non-negative, got ({n}, {m})")
        if n == 0 and m == 0:
            raise InvalidInput("chiral indices (0, 0) do not describe a tube")
        if m > n:
            n, m = m, n
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)

    @property
    def length_squared(self) -> int:
        """n^2 + nm + m^2, i.e. |Ch|^2 in units of a_g^2."""
        return self.n * self.n + self.n * self.m + self.m * self.m

    @property
    def d_r(self) -> int:
        return math.gcd(2 * self.n + self.m, 2 * self.m + self.n)

    @property
    def hexagons_per_cell(self) -> int:
        return 2 * self.length_squared // self.d_r

    @property
    def atoms_per_cell(self) -> int:
        return 4 * self.length_squared // self.d_r

    def __str__(self) -> str:
        return f"({self.n},{self.m})"


class AtomSite(NamedTuple):
    element: str
    position: tuple[float, float, float]


@dataclass(frozen=True, eq=False)
class MolecularStructure:
    """An immutable list of C/H atoms with positions in nm.

    The bond graph is derived on demand from interatomic distances: C-C
    pairs closer than 0.18 nm and C-H pairs closer than 0.13 nm are bonded;
    H-H pairs never are. Construction only checks element symbols and
    finiteness; :meth:`validate` checks the full structural invariants and
    is called by the builders on their outputs.
    """

    elements: tuple[str, ...]
    positions: np.ndarray
    label: str = ""

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        pos = np.array(self.positions, dtype=float).reshape(-1, 3)
        if len(elements) != len(pos):
            raise InvalidInput(f"{len(elements)} elements but {len(pos)} positions")
        bad = sorted(set(elements) - set(ELEMENTS))
        if bad:
            raise InvalidInput(f"unsupported element(s): {', '.join(bad)}")
        if not np.all(np.isfinite(pos)):
            raise InvalidInput("atom coordinates must be finite")
        pos.setflags(write=False)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "positions", pos)

    @classmethod
    def from_atoms(cls, atoms: Iterable[AtomSite], label: str = "") -> MolecularStructure:
        atoms = list(atoms)
        return cls(
            tuple(a.element for a in atoms),
            np.array([a.position for a in atoms], dtype=float).reshape(-1, 3),
            label,
        )

    @classmethod
    def empty(cls, label: str = "") -> MolecularStructure:
        return cls((), np.zeros((0, 3)), label)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[AtomSite]:
        return iter(self.atoms)

    @property
    def atoms(self) -> list[AtomSite]:
        return [AtomSite(e, tuple(map(float, p))) for e, p in zip(self.elements, self.positions)]

    @cached_property
    def element_array(self) -> np.ndarray:
        return np.array(self.elements, dtype="<U1")

    def count(self, element: str) -> int:
        return int(np.count_nonzero(self.element_array == element))

    def subset(self, mask: np.ndarray | Sequence[int], label: str | None = None) -> MolecularStructure:
        idx = np.asarray(mask)
        if idx.dtype == bool:
            idx = np.flatnonzero(idx)
        return MolecularStructure(
            tuple(self.elements[i] for i in idx),
            self.positions[idx],
            self.label if label is None else label,
        )

    def translated(self, shift: Sequence[float]) -> MolecularStructure:
        return MolecularStructure(self.elements, self.positions + np.asarray(shift, float), self.label)

    def with_label(self, label: str) -> MolecularStructure:
        return MolecularStructure(self.elements, self.positions, label)

    def extended(self, elements: Sequence[str], positions: np.ndarray, label: str | None = None) -> MolecularStructure:
        """Return a copy with atoms appended (existing atoms stay a prefix)."""
        return MolecularStructure(
            self.elements + tuple(elements),
            np.vstack([self.positions, np.asarray(positions, float).reshape(-1, 3)]),
            self.label if label is None else label,
        )

    def allclose(self, other: MolecularStructure, atol: float = 1e-6) -> bool:
        return (
            self.elements == other.elements
            and self.positions.shape == other.positions.shape
            and bool(np.allclose(self.positions, other.positions, rtol=0.0, atol=atol))
        )

    # -- bond graph -----------------------------------------------------

    @cached_property
    def bonds(self) -> np.ndarray:
        """Sorted (k, 2) array of bonded index pairs (i < j)."""
        if len(self) < 2:
            return np.zeros((0, 2), dtype=int)
        tree = cKDTree(self.positions)
        pairs = tree.query_pairs(CC_BOND_CUTOFF, output_type="ndarray")
        if len(pairs) == 0:
            return np.zeros((0, 2), dtype=int)
        el = self.element_array
        d = np.linalg.norm(self.positions[pairs[:, 0]] - self.positions[pairs[:, 1]], axis=1)
        n_h = (el[pairs[:, 0]] == "H").astype(int) + (el[pairs[:, 1]] == "H").astype(int)
        keep = ((n_h == 0) & (d < CC_BOND_CUTOFF)) | ((n_h == 1) & (d < CH_BOND_CUTOFF))
        pairs = np.sort(pairs[keep], axis=1)
        order = np.lexsort((pairs[:, 1], pairs[:, 0]))
        return pairs[order]

    @cached_property
    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(len(self))]
        for i, j in self.bonds:
            adj[i].append(int(j))
            adj[j].append(int(i))
        for lst in adj:
            lst.sort()
        return adj

    @cached_property
    def coordination(self) -> np.ndarray:
        return np.array([len(n) for n in self.neighbors], dtype=int)

    def min_separation(self) -> float:
        if len(self) < 2:
            return math.inf
        d, _ = cKDTree(self.positions).query(self.positions, k=2)
        return float(d[:, 1].min())

    def validate(self) -> None:
        """Check atom separation and the C<=4 / H==1 coordination rules."""
        if len(self) == 0:
            return
        sep = self.min_separation()
        if sep < MIN_ATOM_SEPARATION:
            raise InvalidInput(f"{self.label or 'structure'}: atoms {sep:.4f} nm apart (< {MIN_ATOM_SEPARATION})")
        el = self.element_array
        coord = self.coordination
        over = np.flatnonzero((el == "C") & (coord > 4))
        if len(over):
            raise InvalidInput(f"{self.label or 'structure'}: carbon {over[0]} has {coord[over[0]]} neighbours")
        bad_h = np.flatnonzero((el == "H") & (coord != 1))
        if len(bad_h):
            raise InvalidInput(f"{self.label or 'structure'}: hydrogen {bad_h[0]} has {coord[bad_h[0]]} neighbours")


def concatenate(parts: Sequence[MolecularStructure], label: str = "") -> MolecularStructure:
    parts = [p for p in parts if len(p)]
    if not parts:
        return MolecularStructure.empty(label)
    elements = tuple(e for p in parts for e in p.elements)
    return MolecularStructure(elements, np.vstack([p.positions for p in parts]), label)
