"""Frozen reference data.

The structure constants, adjoint orbits, configuration codes and incidence
edges below were derived by hand from the block forms of the sixteen basis
matrices and cross-checked against the oracles before being frozen.  Tests
treat this module as ground truth; if the package and this file disagree,
the package is wrong.
"""

from __future__ import annotations

import math

SQRT_HALF = math.sqrt(0.5)
SQ3_HALF = math.sqrt(3.0) / 2.0

# [M_i, M_j] = coef * M_k for i < j in the rotating index set {2,3,4,6,7,8};
# (0.0, 0) marks a vanishing bracket.  The full table follows by
# antisymmetry and [M_i, M_i] = 0.
COMMUTATORS = {
    (2, 3): (2.0, 8),
    (2, 4): (2.0, 7),
    (2, 6): (0.0, 0),
    (2, 7): (2.0, 4),
    (2, 8): (2.0, 3),
    (3, 4): (-2.0, 6),
    (3, 6): (-2.0, 4),
    (3, 7): (0.0, 0),
    (3, 8): (-2.0, 2),
    (4, 6): (2.0, 3),
    (4, 7): (-2.0, 2),
    (4, 8): (0.0, 0),
    (6, 7): (-2.0, 8),
    (6, 8): (2.0, 7),
    (7, 8): (-2.0, 6),
}

# exp(-t M_k) M_j exp(t M_k) expanded back in the basis, for k in {6,7,8}.
# Entries are tuples of (index, factor) with factor one of "1", "c", "s",
# "-s" standing for 1, cos 2t, sin 2t, -sin 2t.
ADJOINT_ORBITS = {
    6: {
        2: ((2, "1"),),
        3: ((3, "c"), (4, "-s")),
        4: ((4, "c"), (3, "s")),
        6: ((6, "1"),),
        7: ((7, "c"), (8, "s")),
        8: ((8, "c"), (7, "-s")),
    },
    7: {
        2: ((2, "c"), (4, "s")),
        3: ((3, "1"),),
        4: ((4, "c"), (2, "-s")),
        6: ((6, "c"), (8, "-s")),
        7: ((7, "1"),),
        8: ((8, "c"), (6, "s")),
    },
    8: {
        2: ((2, "c"), (3, "s")),
        3: ((3, "c"), (2, "-s")),
        4: ((4, "1"),),
        6: ((6, "c"), (7, "s")),
        7: ((7, "c"), (6, "-s")),
        8: ((8, "1"),),
    },
}

# Eigenvalue configuration attached to each stratum of the parameter sphere.
STRATUM_CONFIGS = {
    "P1": "b^2",
    "P2": "b^2",
    "P3": "b^2",
    "P4": "b^2",
    "P5": "b1b2",
    "P6": "b1b2",
    "L1": "b1b2",
    "L2": "b1b2",
    "L3": "b1b2",
    "L4": "b1b2",
    "L5": "b1b2",
    "L6": "b1b2",
    "S1": "bg+",
    "S2": "bg-",
    "S3": "bg-",
    "S4": "bg+",
    "V1": "g+1g+2",
    "V2": "g-g+",
    "V3": "g-1g-2",
    "V4": "g-g+",
}

STRATUM_DIMENSIONS = {
    "P1": 0, "P2": 0, "P3": 0, "P4": 0, "P5": 0, "P6": 0,
    "L1": 1, "L2": 1, "L3": 1, "L4": 1, "L5": 1, "L6": 1,
    "S1": 2, "S2": 2, "S3": 2, "S4": 2,
    "V1": 3, "V2": 3, "V3": 3, "V4": 3,
}

# One representative unit point ((nu1, nu2, nu3, nu4), hemisphere) per
# stratum, evaluated at nu5 = 1.  V1/V3 sit off the nu2 = nu3 = nu4 = 0
# axis on purpose: on the axis the two eigenvalue pairs coincide and the
# configuration degenerates away from the generic code.
REPRESENTATIVES = {
    "P1": ((0.0, SQRT_HALF, SQRT_HALF, 0.0), +1),
    "P2": ((0.0, -SQRT_HALF, SQRT_HALF, 0.0), +1),
    "P3": ((0.0, SQRT_HALF, -SQRT_HALF, 0.0), -1),
    "P4": ((0.0, -SQRT_HALF, -SQRT_HALF, 0.0), -1),
    "P5": ((0.0, 0.0, 1.0, 0.0), +1),
    "P6": ((0.0, 0.0, -1.0, 0.0), -1),
    "L1": ((0.0, 0.5, SQ3_HALF, 0.0), +1),
    "L2": ((0.0, -0.5, SQ3_HALF, 0.0), +1),
    "L3": ((0.0, 0.5, -SQ3_HALF, 0.0), -1),
    "L4": ((0.0, -0.5, -SQ3_HALF, 0.0), -1),
    "L5": ((0.0, 0.0, SQRT_HALF, SQRT_HALF), +1),
    "L6": ((0.0, 0.0, SQRT_HALF, -SQRT_HALF), +1),
    "S1": ((0.25, 0.5, 0.75, SQRT_HALF / 2.0), +1),
    "S2": ((-0.25, -0.5, 0.75, SQRT_HALF / 2.0), +1),
    "S3": ((-0.25, 0.5, 0.75, -SQRT_HALF / 2.0), +1),
    "S4": ((0.25, -0.5, 0.75, -SQRT_HALF / 2.0), +1),
    "V1": ((SQRT_HALF, 0.0, SQRT_HALF, 0.0), +1),
    "V2": ((0.0, SQRT_HALF, 0.0, SQRT_HALF), +1),
    "V3": ((-SQRT_HALF, 0.0, SQRT_HALF, 0.0), +1),
    "V4": ((0.0, -SQRT_HALF, 0.0, SQRT_HALF), +1),
}

# Closure relations (lower stratum, higher stratum), dimensions differing
# by exactly one.  12 point-curve + 16 curve-sheet + 8 sheet-region = 36.
INCIDENCE_EDGES = frozenset(
    [
        ("P1", "L1"),
        ("P2", "L2"),
        ("P3", "L3"),
        ("P4", "L4"),
        ("P5", "L1"),
        ("P5", "L2"),
        ("P5", "L5"),
        ("P5", "L6"),
        ("P6", "L3"),
        ("P6", "L4"),
        ("P6", "L5"),
        ("P6", "L6"),
        ("L1", "S1"),
        ("L1", "S3"),
        ("L2", "S2"),
        ("L2", "S4"),
        ("L3", "S1"),
        ("L3", "S3"),
        ("L4", "S2"),
        ("L4", "S4"),
        ("L5", "S1"),
        ("L5", "S2"),
        ("L5", "S3"),
        ("L5", "S4"),
        ("L6", "S1"),
        ("L6", "S2"),
        ("L6", "S3"),
        ("L6", "S4"),
        ("S1", "V1"),
        ("S1", "V2"),
        ("S2", "V3"),
        ("S2", "V4"),
        ("S3", "V2"),
        ("S3", "V3"),
        ("S4", "V1"),
        ("S4", "V4"),
    ]
)

# Which sheets bound each open region (read off INCIDENCE_EDGES).
REGION_SHEETS = {
    "V1": {"S1", "S4"},
    "V2": {"S1", "S3"},
    "V3": {"S2", "S3"},
    "V4": {"S2", "S4"},
}
