"""Stratification of the parameter 3-sphere by eigenvalue configuration.

Twenty strata: four open regions V1..V4 (components of the complement of
the critical surface), four ruled sheets S1..S4, six curve strata L1..L6
(arcs of the surface's self-intersection circles), and six distinguished
points P1..P6 (four pinch points and the two self-tangency points).  V3
is the only stratum of stable systems.

Configurations are evaluated at a ray-interior scale: for a unit sphere
point and weight nu5 the matrix is built at t0 = |nu5| / (2 sqrt(2))
times the point, which keeps every eigenvalue imaginary part inside
[|nu5|/2, 3 |nu5|/2].  The configuration is constant along the ray up to
its first degeneracy; unit scale sits past that degeneracy on the great
circle nu1 = nu2 = 0, so evaluating inside the ray is the only reading
that labels the whole circle consistently.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .algebra import ReducedCoords, homogeneous_reduced
from .errors import AmbiguousStratum
from .geometry import (
    F_critical,
    P_POINTS,
    SQRT_HALF,
    SpherePoint,
    TWO_PI,
    grad_F,
    param_phi,
)
from .linalg import CLUSTER_TOL_DEFAULT, Mat4
from .spectra import (
    CONFIG_BETA_STABLE,
    CONFIG_BETA_UNSTABLE,
    CONFIG_DOUBLE_NILPOTENT,
    CONFIG_MIXED,
    CONFIG_STABLE_PAIRS,
    CONFIG_TWO_IMAGINARY,
    CONFIG_UNSTABLE_PAIRS,
    ZERO_RE_TOL_SAMPLED,
    EigConfig,
    classify_configuration,
    spectrum,
)

__all__ = [
    "IncidenceGraph",
    "STRATA",
    "SampleRecord",
    "StabilityReport",
    "StratumLabel",
    "SurfaceMesh",
    "build_incidence",
    "classify_point",
    "configuration_at",
    "evaluation_matrix",
    "interior_scale",
    "mesh_surface",
    "representatives",
    "sphere_samples",
    "stability_report",
]


@dataclass(frozen=True)
class StratumLabel:
    name: str
    dimension: int
    expected_config: str


STRATA: dict[str, StratumLabel] = {
    "V1": StratumLabel("V1", 3, CONFIG_UNSTABLE_PAIRS),
    "V2": StratumLabel("V2", 3, CONFIG_MIXED),
    "V3": StratumLabel("V3", 3, CONFIG_STABLE_PAIRS),
    "V4": StratumLabel("V4", 3, CONFIG_MIXED),
    "S1": StratumLabel("S1", 2, CONFIG_BETA_UNSTABLE),
    "S2": StratumLabel("S2", 2, CONFIG_BETA_STABLE),
    "S3": StratumLabel("S3", 2, CONFIG_BETA_STABLE),
    "S4": StratumLabel("S4", 2, CONFIG_BETA_UNSTABLE),
    "L1": StratumLabel("L1", 1, CONFIG_TWO_IMAGINARY),
    "L2": StratumLabel("L2", 1, CONFIG_TWO_IMAGINARY),
    "L3": StratumLabel("L3", 1, CONFIG_TWO_IMAGINARY),
    "L4": StratumLabel("L4", 1, CONFIG_TWO_IMAGINARY),
    "L5": StratumLabel("L5", 1, CONFIG_TWO_IMAGINARY),
    "L6": StratumLabel("L6", 1, CONFIG_TWO_IMAGINARY),
    "P1": StratumLabel("P1", 0, CONFIG_DOUBLE_NILPOTENT),
    "P2": StratumLabel("P2", 0, CONFIG_DOUBLE_NILPOTENT),
    "P3": StratumLabel("P3", 0, CONFIG_DOUBLE_NILPOTENT),
    "P4": StratumLabel("P4", 0, CONFIG_DOUBLE_NILPOTENT),
    "P5": StratumLabel("P5", 0, CONFIG_TWO_IMAGINARY),
    "P6": StratumLabel("P6", 0, CONFIG_TWO_IMAGINARY),
}


def interior_scale(nu5: float) -> float:
    """Ray-interior evaluation scale t0 = |nu5| / (2 sqrt(2))."""
    return abs(float(nu5)) / (2.0 * math.sqrt(2.0))


def evaluation_matrix(p: SpherePoint, nu5: float) -> Mat4:
    """The canonical-family matrix at the ray-interior scale."""
    if nu5 == 0.0:
        raise ValueError("evaluation_matrix: nu5 must be nonzero")
    t0 = interior_scale(nu5)
    return homogeneous_reduced(ReducedCoords(np.append(t0 * p.nu4, float(nu5))))


def configuration_at(
    p: SpherePoint,
    nu5: float,
    tol: float,
    cluster_tol: float = CLUSTER_TOL_DEFAULT,
) -> EigConfig:
    """Eigenvalue configuration at a sphere point, read inside the ray."""
    return classify_configuration(evaluation_matrix(p, nu5), tol, cluster_tol)


_SQ3_HALF = math.sqrt(3.0) / 2.0
_REP_COORDS: dict[str, tuple[tuple[float, float, float, float], int]] = {
    "P1": (P_POINTS["P1"], +1),
    "P2": (P_POINTS["P2"], +1),
    "P3": (P_POINTS["P3"], -1),
    "P4": (P_POINTS["P4"], -1),
    "P5": (P_POINTS["P5"], +1),
    "P6": (P_POINTS["P6"], -1),
    "L1": ((0.0, 0.5, _SQ3_HALF, 0.0), +1),
    "L2": ((0.0, -0.5, _SQ3_HALF, 0.0), +1),
    "L3": ((0.0, 0.5, -_SQ3_HALF, 0.0), -1),
    "L4": ((0.0, -0.5, -_SQ3_HALF, 0.0), -1),
    "L5": ((0.0, 0.0, SQRT_HALF, SQRT_HALF), +1),
    "L6": ((0.0, 0.0, SQRT_HALF, -SQRT_HALF), +1),
    "S1": ((0.25, 0.5, 0.75, SQRT_HALF / 2.0), +1),
    "S2": ((-0.25, -0.5, 0.75, SQRT_HALF / 2.0), +1),
    "S3": ((-0.25, 0.5, 0.75, -SQRT_HALF / 2.0), +1),
    "S4": ((0.25, -0.5, 0.75, -SQRT_HALF / 2.0), +1),
    # V1/V3 avoid the axis nu2 = nu3 = nu4 = 0, where the two pairs
    # coincide and the configuration degenerates to g+g+ / g-g-.
    "V1": ((SQRT_HALF, 0.0, SQRT_HALF, 0.0), +1),
    "V2": ((0.0, SQRT_HALF, 0.0, SQRT_HALF), +1),
    "V3": ((-SQRT_HALF, 0.0, SQRT_HALF, 0.0), +1),
    "V4": ((0.0, -SQRT_HALF, 0.0, SQRT_HALF), +1),
}


def representatives() -> dict[str, tuple[SpherePoint, float]]:
    """One exact representative point per stratum, all at nu5 = 1."""
    return {
        name: (SpherePoint(np.array(coords), disc), 1.0)
        for name, (coords, disc) in _REP_COORDS.items()
    }


def classify_point(p: SpherePoint, nu5: float, tol: float = 1e-9) -> StratumLabel:
    """Assign a sphere point to its stratum.

    Cascade: exact P points first; then the two self-intersection loci --
    the great circle nu1 = nu2 = 0 split by sign nu4 into L5/L6, and the
    circle nu1 = nu4 = 0 with nu2^2 < nu3^2 split into L1..L4 by the
    signs of nu2 and nu3 (its nu2^2 > nu3^2 remainder carries the mixed
    configuration and is grouped with V2/V4); then the sheets via
    |F| <= tol, labelled by the (nu1, nu2) sign quadrant; otherwise an
    open region via the count of stable eigenvalues.  Matches that leave
    the label undetermined at this tol raise AmbiguousStratum.
    """
    if nu5 == 0.0:
        raise ValueError("classify_point: nu5 must be nonzero")
    if tol <= 0.0:
        raise ValueError("classify_point: tol must be positive")
    v = p.nu4
    n1, n2, n3, n4 = (float(c) for c in v)

    for name, coords in P_POINTS.items():
        if np.max(np.abs(v - np.array(coords))) <= tol:
            return STRATA[name]

    on_circle_a = abs(n1) <= tol and abs(n2) <= tol  # nu1 = nu2 = 0
    on_circle_b = abs(n1) <= tol and abs(n4) <= tol  # nu1 = nu4 = 0
    if on_circle_a and on_circle_b:
        raise AmbiguousStratum("point sits within tol of both self-intersection loci")
    if on_circle_a:
        return STRATA["L5"] if n4 > 0.0 else STRATA["L6"]
    if on_circle_b:
        margin = n2 * n2 - n3 * n3
        if abs(margin) <= 4.0 * tol:
            raise AmbiguousStratum(
                "point sits within tol of a pinch point without matching it"
            )
        if margin < 0.0:
            if n3 > 0.0:
                return STRATA["L1"] if n2 > 0.0 else STRATA["L2"]
            return STRATA["L3"] if n2 > 0.0 else STRATA["L4"]
        # past the pinch points the circle carries the mixed configuration
        return STRATA["V2"] if n2 > 0.0 else STRATA["V4"]

    F = float(F_critical(v))
    if abs(F) <= tol and abs(n2) * math.sqrt(2.0) <= 1.0 + tol:
        if abs(n1) <= tol or abs(n2) <= tol:
            raise AmbiguousStratum(
                "on the critical surface but the sign quadrant is not resolved"
            )
        if n1 > 0.0:
            return STRATA["S1"] if n2 > 0.0 else STRATA["S4"]
        return STRATA["S3"] if n2 > 0.0 else STRATA["S2"]

    cfg = configuration_at(p, nu5, tol)
    if cfg.stable_count == 4:
        return STRATA["V3"]
    if cfg.stable_count == 0:
        return STRATA["V1"]
    if abs(n2) <= tol:
        raise AmbiguousStratum("mixed configuration with unresolved sign of nu2")
    return STRATA["V2"] if n2 > 0.0 else STRATA["V4"]


# -- incidence -----------------------------------------------------------------


@dataclass(frozen=True)
class IncidenceGraph:
    """Strata adjacency; edges join consecutive dimensions only."""

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def __post_init__(self):
        for a, b in self.edges:
            if STRATA[b].dimension != STRATA[a].dimension + 1:
                raise ValueError(f"non-consecutive edge ({a}, {b})")

    def neighbors(self, name: str) -> frozenset[str]:
        out = {b for a, b in self.edges if a == name}
        out |= {a for a, b in self.edges if b == name}
        return frozenset(out)


def _probe_classify(point: np.ndarray, nu5: float, tol: float) -> str | None:
    try:
        return classify_point(SpherePoint(point / np.linalg.norm(point)), nu5, tol).name
    except AmbiguousStratum:
        return None


def build_incidence(grid_n: int, nu5: float = 1.0, tol: float = 1e-9) -> IncidenceGraph:
    """Adjacency graph of the 20 strata from mesh-scale probing.

    Probes sit one mesh step h = 2 pi / grid_n away from each lower
    stratum: along the two self-intersection circles on either side of
    each P point (P-L edges), at chart neighbors of anchor points on each
    L locus (L-S edges), and off-sheet along the gradient of F from
    interior sheet points (S-V edges).  Anchors and offsets are fixed, so
    refining the grid reproduces the same edge set.
    """
    if grid_n < 64:
        raise ValueError("build_incidence: grid_n must be >= 64")
    h = TWO_PI / float(grid_n)
    edges: set[tuple[str, str]] = set()

    def circle_a(theta: float) -> np.ndarray:  # nu1 = nu2 = 0
        return np.array([0.0, 0.0, math.cos(theta), math.sin(theta)])

    def circle_b(theta: float) -> np.ndarray:  # nu1 = nu4 = 0
        return np.array([0.0, math.cos(theta), math.sin(theta), 0.0])

    p_angles = {
        "P1": [(circle_b, math.pi / 4.0)],
        "P2": [(circle_b, 3.0 * math.pi / 4.0)],
        "P3": [(circle_b, -math.pi / 4.0)],
        "P4": [(circle_b, 5.0 * math.pi / 4.0)],
        "P5": [(circle_a, 0.0), (circle_b, math.pi / 2.0)],
        "P6": [(circle_a, math.pi), (circle_b, 3.0 * math.pi / 2.0)],
    }
    for pname, specs in p_angles.items():
        for circ, theta in specs:
            for sgn in (+1.0, -1.0):
                label = _probe_classify(circ(theta + sgn * h), nu5, tol)
                if label is not None and STRATA[label].dimension == 1:
                    edges.add((pname, label))

    # L-S edges from chart neighbors: L5/L6 cross the fold columns
    # t = pi/2 and 3 pi/2, L1..L4 cross the mirror column s = 0.
    l_anchors = {
        "L5": [(+1, 0.55, math.pi / 2.0), (+1, -0.55, 3.0 * math.pi / 2.0),
               (-1, 0.55, math.pi / 2.0), (-1, -0.55, 3.0 * math.pi / 2.0)],
        "L6": [(+1, -0.55, math.pi / 2.0), (+1, 0.55, 3.0 * math.pi / 2.0),
               (-1, -0.55, math.pi / 2.0), (-1, 0.55, 3.0 * math.pi / 2.0)],
        "L1": [(+1, 0.0, 0.6), (+1, 0.0, TWO_PI - 0.6)],
        "L2": [(+1, 0.0, math.pi - 0.6), (+1, 0.0, math.pi + 0.6)],
        "L3": [(-1, 0.0, 0.6), (-1, 0.0, TWO_PI - 0.6)],
        "L4": [(-1, 0.0, math.pi - 0.6), (-1, 0.0, math.pi + 0.6)],
    }
    for lname, spots in l_anchors.items():
        for disc, s0, t0 in spots:
            anchor = param_phi(disc, s0, t0)
            if classify_point(anchor, nu5, tol).name != lname:
                raise AmbiguousStratum(f"anchor for {lname} drifted off its locus")
            deltas = [(h, 0.0), (-h, 0.0)] if s0 == 0.0 else [(0.0, h), (0.0, -h)]
            for ds, dt in deltas:
                q = param_phi(disc, s0 + ds, (t0 + dt) % TWO_PI)
                label = _probe_classify(q.nu4, nu5, tol)
                if label is not None and STRATA[label].dimension == 2:
                    edges.add((lname, label))

    # S-V edges: push off the sheet along the gradient of F (tangent to
    # the sphere automatically: F is homogeneous and vanishes there).
    s_anchors = {
        "S1": [(+1, 0.5, math.pi / 4.0), (-1, 0.5, math.pi / 4.0)],
        "S2": [(+1, 0.5, 3.0 * math.pi / 4.0), (-1, 0.5, 3.0 * math.pi / 4.0)],
        "S3": [(+1, -0.5, math.pi / 4.0), (-1, -0.5, math.pi / 4.0)],
        "S4": [(+1, -0.5, 3.0 * math.pi / 4.0), (-1, -0.5, 3.0 * math.pi / 4.0)],
    }
    for sname, spots in s_anchors.items():
        for disc, s0, t0 in spots:
            q = param_phi(disc, s0, t0)
            if classify_point(q, nu5, tol).name != sname:
                raise AmbiguousStratum(f"anchor for {sname} drifted off its sheet")
            g = grad_F(q.nu4)
            g = g - float(np.dot(g, q.nu4)) * q.nu4
            gn = float(np.linalg.norm(g))
            if gn == 0.0:
                continue
            g = g / gn
            for sgn in (+1.0, -1.0):
                label = _probe_classify(q.nu4 + sgn * h * g, nu5, tol)
                if label is not None and STRATA[label].dimension == 3:
                    edges.add((sname, label))

    return IncidenceGraph(tuple(sorted(STRATA)), frozenset(edges))


# -- sampling and the stability domain -----------------------------------------


def sphere_samples(n: int, seed: int) -> np.ndarray:
    """n quasi-uniform points on the unit 3-sphere, deterministic per seed.

    An additive-recurrence sequence (fractional powers of 2, badly
    approximable) with a seeded Cranley-Patterson shift is pushed through
    the measure-preserving torus chart
    (u, v, w) -> (sqrt(1-u) sin 2 pi v, sqrt(1-u) cos 2 pi v,
                  sqrt(u) sin 2 pi w,  sqrt(u) cos 2 pi w).
    """
    if n <= 0:
        raise ValueError("sphere_samples: n must be positive")
    rng = np.random.default_rng(seed)
    shift = rng.random(3)
    alphas = np.array([2.0 ** 0.25 - 1.0, 2.0 ** 0.5 - 1.0, 2.0 ** 0.75 - 1.0])
    k = np.arange(1, n + 1)[:, None]
    uvw = (k * alphas[None, :] + shift[None, :]) % 1.0
    u, v, w = uvw[:, 0], uvw[:, 1], uvw[:, 2]
    r1, r2 = np.sqrt(1.0 - u), np.sqrt(u)
    pts = np.column_stack(
        [
            r1 * np.sin(TWO_PI * v),
            r1 * np.cos(TWO_PI * v),
            r2 * np.sin(TWO_PI * w),
            r2 * np.cos(TWO_PI * w),
        ]
    )
    # renormalize so every row honors the SpherePoint unit-norm invariant
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    return pts


@dataclass(frozen=True)
class SampleRecord:
    point: SpherePoint
    stratum: str
    config: str
    max_real_part: float
    stable: bool


@dataclass(frozen=True)
class StabilityReport:
    records: tuple[SampleRecord, ...]
    stable_strata: frozenset[str]
    stable_component_count: int
    unstable_component_count: int
    mixed_component_count: int
    stable_boundary_strata: frozenset[str]


_CHORD_NODES = np.linspace(0.0, 1.0, 5)
_CHORD_VAND_INV = np.linalg.inv(np.vander(_CHORD_NODES, 5))


def _chord_sign_constant(a: np.ndarray, b: np.ndarray, sign: float) -> bool:
    """True when F keeps the given strict sign along the arc from a to b.

    F is a quartic form, so its restriction to the chord is a quartic in
    the line parameter, and normalizing onto the sphere rescales it
    positively.  Five samples pin the quartic exactly; checking its value
    at the endpoints and at every stationary point inside (0, 1) decides
    the sign on the whole arc, not just at sampled points.
    """
    vals = np.array([float(F_critical((1.0 - t) * a + t * b)) for t in _CHORD_NODES])
    if np.any(sign * vals <= 0.0):
        return False
    coeffs = _CHORD_VAND_INV @ vals
    for r in np.roots(np.polyder(coeffs)):
        tr = float(r.real)
        if 0.0 < tr < 1.0:
            v = float(F_critical((1.0 - tr) * a + tr * b))
            if sign * v <= 0.0:
                return False
    return True


def _flood_components(points, kinds, signs, tree_k=12, rescue_k=48):
    """Union same-kind neighbors whose connecting arc stays on one side
    of the critical surface; return components and the kNN table.

    A second pass widens the neighbor search for members of very small
    components: near the self-intersection circles the mixed regions
    narrow into wedges a few degrees across, and a sample caught there
    may see no valid arc among its first dozen neighbors even though the
    wedge widens a step further out.  The arc test itself is exact, so
    extra candidates can only connect what is genuinely connected.
    """
    n = len(points)
    tree = cKDTree(points)
    _, nbrs = tree.query(points, k=min(tree_k + 1, n))
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def try_link(i: int, j: int) -> None:
        if kinds[i] != kinds[j] or kinds[i] == "critical":
            return
        if signs[i] == 0.0 or signs[i] != signs[j]:
            return
        ri, rj = find(i), find(j)
        if ri == rj:
            return
        if _chord_sign_constant(points[i], points[j], signs[i]):
            parent[ri] = rj

    for i in range(n):
        for j in nbrs[i][1:]:
            try_link(i, int(j))

    sizes: dict[int, int] = {}
    for i in range(n):
        sizes[find(i)] = sizes.get(find(i), 0) + 1
    small_cut = max(3, n // 200)
    strays = [i for i in range(n) if sizes[find(i)] < small_cut]
    if strays:
        for i in strays:
            _, wide = tree.query(points[i], k=min(rescue_k + 1, n))
            for j in wide[1:]:
                try_link(i, int(j))

    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    return comps, nbrs


def _surface_crossing(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Bisect F along the arc from a to b down to a sign-change point."""

    def f_at(t: float) -> float:
        q = (1.0 - t) * a + t * b
        return float(F_critical(q / np.linalg.norm(q)))

    lo, hi = 0.0, 1.0
    flo, fhi = f_at(lo), f_at(hi)
    if flo == 0.0 or flo * fhi > 0.0:
        return None
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = f_at(mid)
        if fm == 0.0:
            break
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    t = 0.5 * (lo + hi)
    q = (1.0 - t) * a + t * b
    return q / np.linalg.norm(q)


def _sample_record(row: np.ndarray, nu5: float, tol: float, zero_re_tol: float):
    """One sample's record plus its stability kind."""
    sp = SpherePoint(row / np.linalg.norm(row))
    label = classify_point(sp, nu5, tol)
    mat = evaluation_matrix(sp, nu5)
    cfg = classify_configuration(mat, tol)
    spec = spectrum(mat, tol)
    thresh = zero_re_tol * (1.0 + max(abs(z) for z in spec.eigenvalues))
    res = [z.real for z in spec.eigenvalues]
    if all(r < -thresh for r in res):
        kind = "stable"
    elif all(r > thresh for r in res):
        kind = "unstable"
    elif any(abs(r) <= thresh for r in res):
        kind = "critical"
    else:
        kind = "mixed"
    record = SampleRecord(
        point=sp,
        stratum=label.name,
        config=cfg.code,
        max_real_part=spec.max_real_part,
        stable=kind == "stable",
    )
    return record, kind


def stability_report(
    samples,
    nu5: float = 1.0,
    tol: float = 1e-9,
    zero_re_tol: float = ZERO_RE_TOL_SAMPLED,
    workers: int = 1,
) -> StabilityReport:
    """Classify samples, flood-fill the sign regions, audit stability.

    samples is an (n, 4) array of unit vectors or a list of SpherePoint.
    A sample is stable when every eigenvalue real part sits below the
    relative threshold at the ray-interior evaluation; samples straddling
    the threshold are tagged critical and excluded from the component
    counts.  Boundary strata of the stable region are found by bisecting
    F along sample arcs that cross from stable into mixed territory.
    workers > 1 spreads per-sample classification over that many threads;
    output order is independent of the worker count.
    """
    pts = np.array(
        [s.nu4 if isinstance(s, SpherePoint) else s for s in samples], dtype=float
    )
    if workers > 1 and len(pts) > 1:
        chunks = np.array_split(np.arange(len(pts)), workers * 4)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(
                    lambda idx: [
                        _sample_record(pts[i], nu5, tol, zero_re_tol) for i in idx
                    ],
                    chunk,
                )
                for chunk in chunks
                if len(chunk)
            ]
            merged = [pair for fut in futures for pair in fut.result()]
    else:
        merged = [_sample_record(row, nu5, tol, zero_re_tol) for row in pts]
    records: list[SampleRecord] = [rec for rec, _ in merged]
    kinds: list[str] = [kind for _, kind in merged]

    signs = np.sign(F_critical(pts))
    comps, nbrs = _flood_components(pts, kinds, signs)
    counts = {"stable": 0, "unstable": 0, "mixed": 0}
    for members in comps.values():
        k = kinds[members[0]]
        if k in counts:
            counts[k] += 1

    boundary: set[str] = set()
    for i in range(len(pts)):
        if kinds[i] != "stable":
            continue
        for j in nbrs[i][1:]:
            j = int(j)
            if kinds[j] != "mixed":
                continue
            q = _surface_crossing(pts[i], pts[j])
            if q is None:
                continue
            name = _probe_classify(q, nu5, tol)
            if name is not None:
                boundary.add(name)

    return StabilityReport(
        records=tuple(records),
        stable_strata=frozenset(r.stratum for r in records if r.stable),
        stable_component_count=counts["stable"],
        unstable_component_count=counts["unstable"],
        mixed_component_count=counts["mixed"],
        stable_boundary_strata=frozenset(boundary),
    )


# -- surface meshes ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SurfaceMesh:
    """Welded triangle mesh of one hemisphere's ruled surface."""

    disc: int
    vertices: np.ndarray  # (V, 4) sphere coordinates
    params: np.ndarray  # (V, 2) chart (s, t) per vertex
    triangles: np.ndarray  # (T, 3) vertex indices
    strata: tuple[str, ...]  # per-vertex stratum name

    def euler_characteristic(self) -> int:
        edges = set()
        for tri in self.triangles:
            a, b, c = (int(x) for x in tri)
            edges.add((min(a, b), max(a, b)))
            edges.add((min(b, c), max(b, c)))
            edges.add((min(a, c), max(a, c)))
        return len(self.vertices) - len(edges) + len(self.triangles)


def mesh_surface(
    disc, resolution: int, nu5: float = 1.0, tol: float = 1e-9
) -> SurfaceMesh:
    """Triangulate the chart rectangle and weld the two-to-one loci.

    Welds are exact index identifications on the (s, t) grid: the seam
    t = 0 ~ 2 pi always; the fold (s, pi/2) ~ (-s, 3 pi/2) and the mirror
    (0, t) ~ (0, 2 pi - t) whenever the grid hits those lines, i.e. when
    resolution is divisible by 4.  Triangles collapsed by a weld are
    dropped.  Output is deterministic for a given input.
    """
    if resolution < 8:
        raise ValueError("mesh_surface: resolution must be >= 8")
    from .geometry import _normalize_disc

    d = _normalize_disc(disc)
    res = int(resolution)
    s_vals = np.linspace(-1.0, 1.0, res + 1)
    t_vals = np.linspace(0.0, TWO_PI, res + 1)
    quarter = res // 4 if res % 4 == 0 else None
    half = res // 2 if res % 2 == 0 else None

    def canon(i: int, j: int) -> tuple[int, int]:
        if j == res:
            j = 0
        if quarter is not None and j == 3 * quarter:
            i, j = res - i, quarter
        if half is not None and i == half and j != 0:
            j = min(j, res - j)
        return i, j

    vert_id: dict[tuple[int, int], int] = {}
    coords: list[np.ndarray] = []
    params: list[tuple[float, float]] = []

    def vid(i: int, j: int) -> int:
        key = canon(i, j)
        if key not in vert_id:
            ci, cj = key
            p = param_phi(d, float(s_vals[ci]), float(t_vals[cj]))
            vert_id[key] = len(coords)
            coords.append(p.nu4)
            params.append((float(s_vals[ci]), float(t_vals[cj])))
        return vert_id[key]

    triangles: list[tuple[int, int, int]] = []
    for i in range(res):
        for j in range(res):
            v00, v10 = vid(i, j), vid(i + 1, j)
            v01, v11 = vid(i, j + 1), vid(i + 1, j + 1)
            for tri in ((v00, v10, v11), (v00, v11, v01)):
                if len(set(tri)) == 3:
                    triangles.append(tri)

    vertices = np.array(coords)
    strata = tuple(
        classify_point(SpherePoint(row, d), nu5, tol).name for row in vertices
    )
    return SurfaceMesh(
        disc=d,
        vertices=vertices,
        params=np.array(params),
        triangles=np.array(triangles, dtype=int),
        strata=strata,
    )
