"""Structure builders and measurements (positions in nm)."""

from .assembly import COMPONENTS, Device, DeviceSpec, assemble_device, cap_tube_ends
from .cnt import build_cnt, cnt_diameter, translation_length
from .lonsdaleite import CarveSpec, LonsdaleiteSpec, build_lonsdaleite, carve_cylinder
from .measure import Census, bond_census, vdw_volume
from .passivate import passivate_hydrogen
from .structure import AtomSite, ChiralIndices, MolecularStructure, concatenate

__all__ = [
    "COMPONENTS", "AtomSite", "CarveSpec", "Census", "ChiralIndices", "Device", "DeviceSpec",
    "LonsdaleiteSpec", "MolecularStructure", "assemble_device", "bond_census", "build_cnt",
    "build_lonsdaleite", "cap_tube_ends", "carve_cylinder", "cnt_diameter", "concatenate",
    "passivate_hydrogen", "translation_length", "vdw_volume",
]
