"""Coaxial assembly of leads, channel, insulator and gate."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from ..constants import CH_BOND_LENGTH, GRAPHITE_INTERLAYER, MIN_COMPONENT_DISTANCE
from ..errors import ComponentOverlap, InvalidInput
from .cnt import build_cnt, cells_for_length, cnt_diameter, translation_length
from .lonsdaleite import CarveSpec, LonsdaleiteSpec, build_lonsdaleite, carve_cylinder
from .passivate import passivate_hydrogen
from .structure import ChiralIndices, MolecularStructure, concatenate

COMPONENTS = ("channel", "source", "drain", "insulator", "gate", "gate_lead")

# lonsdaleite carves start c/8 below a puckered ring so both ends are whole rings
RING_OFFSET = 1.0 / 8.0


@dataclass(frozen=True)
class DeviceSpec:
    """Parameters of a gate-all-around device built along +z.

    The channel occupies 0 <= z <= channel_repeats * c. ``insulator`` is a
    carve in that same frame. Leads start ``lead_gap`` beyond each channel
    end; the gate is centred on the channel and ``gate_lead_length`` > 0
    adds a tangential (4,4)-style stub beside it.
    """

    lead_chirality: ChiralIndices = ChiralIndices(4, 4)
    gate_chirality: ChiralIndices = ChiralIndices(20, 20)
    channel_repeats: int = 12
    insulator: CarveSpec | None = None
    lead_length: float = 1.7
    gate_length: float = 6.0
    channel_radius: float = 0.16
    lead_gap: float = 0.30
    gate_lead_length: float = 1.0
    cap_tube_ends: bool = True
    components: tuple[str, ...] = COMPONENTS
    lonsdaleite: LonsdaleiteSpec = field(default_factory=LonsdaleiteSpec)

    def __post_init__(self):
        # deferred import: electronic-model depends on geometry, not the reverse
        from ..electronic import Metallicity, classify_metallicity

        if int(self.channel_repeats) != self.channel_repeats or self.channel_repeats < 1:
            raise InvalidInput("channel_repeats must be a positive integer")
        for name in ("lead_chirality", "gate_chirality"):
            c = getattr(self, name)
            if classify_metallicity(c) is not Metallicity.METALLIC:
                raise InvalidInput(f"{name} {c} is not metallic")
        unknown = set(self.components) - set(COMPONENTS)
        if unknown:
            raise InvalidInput(f"unknown component(s): {sorted(unknown)}")

    @property
    def channel_length(self) -> float:
        return self.channel_repeats * self.lonsdaleite.c

    def insulator_carve(self) -> CarveSpec:
        if self.insulator is not None:
            return self.insulator
        return default_insulator(self)


def default_insulator(d: DeviceSpec) -> CarveSpec:
    """Annulus between two clean Lonsdaleite shells, one repeat longer than the channel at each end.

    The inner face (first shell 0.525 nm) leaves room for the channel and
    lead hydrogens; the outer face (shell 1.05 nm) keeps its hydrogens a vdW
    gap inside a (20,20) gate. Both radii passivate without steric clashes.
    """
    c = d.lonsdaleite.c
    return CarveSpec(r_outer=1.06, length=d.channel_length + 2 * c, r_inner=0.5, origin=(0.0, 0.0, -c))


@dataclass(frozen=True, eq=False)
class Device:
    structure: MolecularStructure
    component_of_atom: np.ndarray
    spec: DeviceSpec

    def component(self, name: str) -> MolecularStructure:
        return self.structure.subset(self.component_of_atom == COMPONENTS.index(name), label=name)

    def counts(self) -> dict[str, int]:
        return {name: int(np.count_nonzero(self.component_of_atom == k)) for k, name in enumerate(COMPONENTS)}


def _lonsdaleite_parts(d: DeviceSpec) -> dict[str, MolecularStructure]:
    lat = d.lonsdaleite
    ins = d.insulator_carve()
    want_ins = "insulator" in d.components
    r_max = max(d.channel_radius, ins.r_outer if want_ins else 0.0)
    z_lo = min(0.0, ins.origin[2] if want_ins else 0.0)
    z_hi = max(d.channel_length, ins.origin[2] + ins.length if want_ins else 0.0)
    # rhombic cell inradius is n * a * sqrt(3) / 4 around the central channel
    n_xy = 2 * int(math.ceil((r_max + lat.a) / (lat.a * math.sqrt(3.0) / 2.0)))
    n_z = int(math.ceil((z_hi - z_lo) / lat.c)) + 2
    block_spec = LonsdaleiteSpec((n_xy, n_xy, n_z), lat.a, lat.c, lat.z)
    z_cell0 = math.floor(z_lo / lat.c) - 1
    shift = -block_spec.central_channel() + np.array([0.0, 0.0, (z_cell0 + RING_OFFSET) * lat.c])
    block = build_lonsdaleite(block_spec).translated(shift)

    parts = {}
    if "channel" in d.components:
        rod = carve_cylinder(block, CarveSpec(r_outer=d.channel_radius, length=d.channel_length))
        parts["channel"] = passivate_hydrogen(rod).with_label("channel")
    if want_ins:
        parts["insulator"] = passivate_hydrogen(carve_cylinder(block, ins)).with_label("insulator")
    return parts


def cap_tube_ends(tube: MolecularStructure) -> MolecularStructure:
    """Add in-plane hydrogens to under-coordinated sp2 atoms at open tube ends."""
    pos = tube.positions
    new = []
    for i, nbrs in enumerate(tube.neighbors):
        if len(nbrs) >= 3 or tube.elements[i] != "C":
            continue
        radial = pos[i] * np.array([1.0, 1.0, 0.0])
        radial = radial / np.linalg.norm(radial)
        if len(nbrs) == 2:
            d = -((pos[nbrs[0]] - pos[i]) + (pos[nbrs[1]] - pos[i]))
            d -= (d @ radial) * radial
            new.append(pos[i] + CH_BOND_LENGTH * d / np.linalg.norm(d))
        elif len(nbrs) == 1:
            u = (pos[nbrs[0]] - pos[i]) / np.linalg.norm(pos[nbrs[0]] - pos[i])
            w = np.cross(radial, u)
            for sign in (1.0, -1.0):
                d = -0.5 * u + sign * math.sqrt(3.0) / 2.0 * w
                new.append(pos[i] + CH_BOND_LENGTH * d)
    if not new:
        return tube
    return tube.extended(("H",) * len(new), np.array(new))


def _tube(c: ChiralIndices, length: float, cap: bool, label: str) -> MolecularStructure:
    t = build_cnt(c, cells_for_length(c, length))
    t = cap_tube_ends(t) if cap else t
    return t.with_label(label)


def _rotate_z_to_y(s: MolecularStructure) -> MolecularStructure:
    p = s.positions
    return MolecularStructure(s.elements, np.column_stack([p[:, 0], p[:, 2], -p[:, 1]]), s.label)


def junction_zones(d: DeviceSpec, gate_lead_contact: np.ndarray | None, width: float = 0.45):
    """Declared junction zones as (component pair, predicate on positions)."""
    L = d.channel_length
    zones = [
        (("channel", "source"), lambda p: np.abs(p[:, 2]) <= width + d.lead_gap),
        (("channel", "drain"), lambda p: np.abs(p[:, 2] - L) <= width + d.lead_gap),
    ]
    if gate_lead_contact is not None:
        radius = cnt_diameter(d.lead_chirality) / 2.0 + GRAPHITE_INTERLAYER + width
        zones.append(
            (("gate", "gate_lead"), lambda p: np.linalg.norm(p - gate_lead_contact, axis=1) <= radius)
        )
    return zones


def assemble_device(d: DeviceSpec) -> Device:
    """Concatenate all requested components about the z axis and check clearances."""
    parts = _lonsdaleite_parts(d)
    L = d.channel_length
    lead_r = cnt_diameter(d.lead_chirality) / 2.0
    if "source" in d.components:
        src = _tube(d.lead_chirality, d.lead_length, d.cap_tube_ends, "source")
        top = src.positions[:, 2].max()
        parts["source"] = src.translated([0.0, 0.0, -d.lead_gap - top])
    if "drain" in d.components:
        drn = _tube(d.lead_chirality, d.lead_length, d.cap_tube_ends, "drain")
        bottom = drn.positions[:, 2].min()
        parts["drain"] = drn.translated([0.0, 0.0, L + d.lead_gap - bottom])

    gate_r = cnt_diameter(d.gate_chirality) / 2.0
    gate_mid = L / 2.0
    contact = None
    if "gate" in d.components:
        cells = cells_for_length(d.gate_chirality, d.gate_length)
        gate = build_cnt(d.gate_chirality, cells)
        gate = cap_tube_ends(gate) if d.cap_tube_ends else gate
        z0 = gate_mid - cells * translation_length(d.gate_chirality) / 2.0
        parts["gate"] = gate.with_label("gate").translated([0.0, 0.0, z0])
    if "gate_lead" in d.components and d.gate_lead_length > 0:
        stub = _rotate_z_to_y(_tube(d.lead_chirality, d.gate_lead_length, d.cap_tube_ends, "gate_lead"))
        x = gate_r + GRAPHITE_INTERLAYER + lead_r
        parts["gate_lead"] = stub.translated([x, 0.0, gate_mid])
        contact = np.array([gate_r, 0.0, gate_mid])

    ordered = [(name, parts[name]) for name in COMPONENTS if name in parts]
    _check_overlaps(ordered, junction_zones(d, contact))
    structure = concatenate([s for _, s in ordered], label="mFET")
    tags = np.concatenate(
        [np.full(len(s), COMPONENTS.index(name), dtype=int) for name, s in ordered]
    ) if ordered else np.zeros(0, dtype=int)
    structure.validate()
    return Device(structure, tags, d)


def _check_overlaps(parts, zones, cutoff: float = MIN_COMPONENT_DISTANCE) -> None:
    trees = {name: cKDTree(s.positions) for name, s in parts if len(s)}
    names = [name for name, s in parts if len(s)]
    lookup = dict(parts)
    for a_idx, a in enumerate(names):
        for b in names[a_idx + 1:]:
            pairs = trees[a].query_ball_tree(trees[b], cutoff)
            hits = [(i, j) for i, js in enumerate(pairs) for j in js]
            if not hits:
                continue
            pa = lookup[a].positions[[i for i, _ in hits]]
            pb = lookup[b].positions[[j for _, j in hits]]
            exempt = np.zeros(len(hits), dtype=bool)
            for pair, inside in zones:
                if set(pair) == {a, b}:
                    exempt |= inside(pa) & inside(pb)
            if not exempt.all():
                k = int(np.flatnonzero(~exempt)[0])
                dist = float(np.linalg.norm(pa[k] - pb[k]))
                raise ComponentOverlap(f"{a} and {b} atoms {dist:.3f} nm apart outside a junction zone")
