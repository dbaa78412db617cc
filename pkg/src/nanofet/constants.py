"""Physical constants and fixed model parameters.

Lengths are in nm and energies in eV unless a name says otherwise; the
electrostatics constants are SI.
"""

import math

# graphene / CNT
A_GRAPHENE = 0.246                    # nm, graphene lattice constant
A_CC = A_GRAPHENE / math.sqrt(3.0)    # nm, C-C bond in graphene (~0.142)
HOPPING_T = 2.7                       # eV, nearest-neighbour pi hopping

# Lonsdaleite (hexagonal diamond), P6_3/mmc with C on 4f sites
LONSDALEITE_A = 0.2522                # nm
LONSDALEITE_C = 0.4119                # nm
LONSDALEITE_Z = 0.0625                # 4f internal parameter

# bond detection
CC_BOND_CUTOFF = 0.18                 # nm
CH_BOND_CUTOFF = 0.13                 # nm
CH_BOND_LENGTH = 0.109                # nm
MIN_ATOM_SEPARATION = 0.08            # nm
MIN_HH_DISTANCE = 0.15                # nm
MIN_COMPONENT_DISTANCE = 0.15         # nm

VDW_RADII = {"C": 0.17, "H": 0.12}    # nm
GRAPHITE_INTERLAYER = 0.34            # nm

TETRAHEDRAL_ANGLE = math.degrees(math.acos(-1.0 / 3.0))

# electrostatics and thermodynamics (SI)
EPSILON_0 = 8.85e-12                  # F/m, value used by the device analysis
ELEMENTARY_CHARGE = 1.602e-19         # C
BOLTZMANN = 1.380649e-23              # J/K
QUANTUM_RESISTANCE = 25813.0          # ohm, h/e^2 as quoted
DIAMOND_KAPPA = 5.7
HIROSHIMA_ENERGY = 6.3e13             # J

NM = 1e-9                             # m per nm
NM3_PER_CM3 = 1e21
