"""Eigenvalue extraction and pair-configuration classification.

A matrix in the commuting family has eigenvalues in conjugate pairs; the
classifier names the sign pattern of the two pairs (stable/unstable/
imaginary) and, for a coincident imaginary pair, separates the semisimple
case from the nilpotent one by the rank of the annihilator A^2 + beta^2 id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RankAnomalous, UnresolvedConfiguration
from .linalg import CLUSTER_TOL_DEFAULT, Mat4, char_poly, quartic_roots

__all__ = [
    "CONFIG_BETA_STABLE",
    "CONFIG_BETA_UNSTABLE",
    "CONFIG_COINCIDENT_STABLE",
    "CONFIG_COINCIDENT_STABLE_NILPOTENT",
    "CONFIG_COINCIDENT_UNSTABLE",
    "CONFIG_COINCIDENT_UNSTABLE_NILPOTENT",
    "CONFIG_DOUBLE_NILPOTENT",
    "CONFIG_DOUBLE_SEMISIMPLE",
    "CONFIG_MIXED",
    "CONFIG_STABLE_PAIRS",
    "CONFIG_TWO_IMAGINARY",
    "CONFIG_UNSTABLE_PAIRS",
    "EigConfig",
    "Spectrum",
    "ZERO_RE_TOL_ANALYTIC",
    "ZERO_RE_TOL_SAMPLED",
    "classify_configuration",
    "is_semisimple_double_pair",
    "spectrum",
]

# Configuration codes: 'g' for a complex pair off the imaginary axis with the
# sign of its real part, 'b' for an imaginary pair.  Distinct pairs carry
# indices; 'bb' is the semisimple coincident imaginary pair, 'b^2' the
# nilpotent one, and the g..g / g^2 variants cover coincident off-axis pairs.
CONFIG_STABLE_PAIRS = "g-1g-2"
CONFIG_UNSTABLE_PAIRS = "g+1g+2"
CONFIG_MIXED = "g-g+"
CONFIG_BETA_STABLE = "bg-"
CONFIG_BETA_UNSTABLE = "bg+"
CONFIG_TWO_IMAGINARY = "b1b2"
CONFIG_DOUBLE_SEMISIMPLE = "bb"
CONFIG_DOUBLE_NILPOTENT = "b^2"
CONFIG_COINCIDENT_STABLE = "g-g-"
CONFIG_COINCIDENT_UNSTABLE = "g+g+"
CONFIG_COINCIDENT_STABLE_NILPOTENT = "g-^2"
CONFIG_COINCIDENT_UNSTABLE_NILPOTENT = "g+^2"

# Real-part zero thresholds (relative): analytic inputs vs sampled data.
ZERO_RE_TOL_ANALYTIC = 1e-9
ZERO_RE_TOL_SAMPLED = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Four eigenvalues, their coincidence clusters, and summary fields.

    semisimple_double_pair is set only when the spectrum is a coincident
    imaginary pair +-i beta (True: semisimple, False: nilpotent part
    present); it stays None otherwise.
    """

    eigenvalues: tuple[complex, complex, complex, complex]
    clusters: tuple[tuple[int, ...], ...]
    max_real_part: float
    semisimple_double_pair: bool | None


@dataclass(frozen=True)
class EigConfig:
    code: str
    stable_count: int


def _cluster_indices(roots, cluster_tol):
    """Union-find clustering under the relative coincidence threshold."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(roots[i] - roots[j])
            if gap <= cluster_tol * (1.0 + max(abs(roots[i]), abs(roots[j]))):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=lambda g: g[0]))


def _re_is_zero(z: complex, tol: float) -> bool:
    return abs(z.real) <= tol * (1.0 + abs(z))


def _im_is_zero(z: complex, tol: float) -> bool:
    return abs(z.imag) <= tol * (1.0 + abs(z))


def _annihilator_rank(B: Mat4, A: Mat4, tol: float) -> int:
    """Rank of an annihilator, thresholded against A's own scale.

    A relative-to-B threshold would report full rank for the numerically
    zero matrix (its largest singular value is roundoff), so singular
    values are measured against (1 + ||A||)^2, the natural size of a
    quadratic polynomial in A.
    """
    svals = np.linalg.svd(B.entries, compute_uv=False)
    scale = (1.0 + float(np.linalg.norm(A.entries, 2))) ** 2
    return int(np.sum(svals > max(tol, 1e-12) * scale))


def is_semisimple_double_pair(A: Mat4, beta: float, tol: float) -> bool:
    """True iff A with spectrum {+-i beta (double)} has no nilpotent part.

    rank(A^2 + beta^2 id) is 0 exactly for the semisimple case and 2 when
    a rank-two nilpotent rides on top; anything else means the premise
    (a double imaginary pair) did not hold, raised as RankAnomalous.
    """
    B = Mat4(A.entries @ A.entries + float(beta) ** 2 * np.eye(4))
    r = _annihilator_rank(B, A, tol)
    if r == 0:
        return True
    if r == 2:
        return False
    raise RankAnomalous(f"annihilator rank {r}, expected 0 or 2")


def spectrum(A: Mat4, tol: float, cluster_tol: float = CLUSTER_TOL_DEFAULT) -> Spectrum:
    """Eigenvalues of A via the quartic of char_poly, plus clustering.

    When the clustered spectrum is a coincident imaginary pair, the
    semisimple/nilpotent flag is filled in; otherwise left None.
    """
    roots = quartic_roots(char_poly(A), tol).roots
    clusters = _cluster_indices(roots, cluster_tol)
    max_re = max(z.real for z in roots)
    flag = None
    if len(clusters) == 2 and all(len(c) == 2 for c in clusters):
        means = [sum(roots[i] for i in c) / 2.0 for c in clusters]
        conj_gap = abs(means[0] - means[1].conjugate())
        if (
            conj_gap <= cluster_tol * (1.0 + abs(means[0]))
            and all(_re_is_zero(m, tol) for m in means)
            and not any(_im_is_zero(m, tol) for m in means)
        ):
            u, v = _double_pair_quadratic(A)
            beta = math.sqrt(max(v - u * u / 4.0, 0.0))
            flag = is_semisimple_double_pair(A, beta, tol)
    return Spectrum(tuple(roots), clusters, float(max_re), flag)


def _double_pair_quadratic(A: Mat4) -> tuple[float, float]:
    """Coefficients (u, v) of the square root of the char polynomial.

    Under the coincident-pair premise the characteristic polynomial is
    (x^2 + u x + v)^2, so u and v fall out of its third- and second-order
    coefficients.  Those are computed from traces and stay accurate where
    the roots themselves are ill-conditioned (double roots only come out
    to sqrt(eps)), which is exactly when this branch runs.
    """
    c = char_poly(A).a
    u = c[1] / 2.0
    v = (c[2] - u * u) / 2.0
    return u, v


def _coincident_pair_semisimple(A: Mat4, u: float, v: float, tol: float) -> bool:
    """Semisimplicity test for a coincident pair with x^2 + u x + v = 0."""
    E = A.entries
    B = Mat4(E @ E + u * E + v * np.eye(4))
    r = _annihilator_rank(B, A, tol)
    if r == 0:
        return True
    if r == 2:
        return False
    raise RankAnomalous(f"annihilator rank {r}, expected 0 or 2")


def classify_configuration(
    A: Mat4, tol: float, cluster_tol: float = CLUSTER_TOL_DEFAULT
) -> EigConfig:
    """Name the two-pair eigenvalue configuration of A.

    Cascade: reject real/zero eigenvalues (UnresolvedConfiguration), read
    the sign of each pair's real part against the relative threshold
    tol*(1+|lambda|), check pair coincidence against cluster_tol, and for
    coincident pairs split semisimple from nilpotent by annihilator rank.
    """
    sp = spectrum(A, tol, cluster_tol)
    roots = sp.eigenvalues
    if any(_im_is_zero(z, tol) for z in roots):
        raise UnresolvedConfiguration(
            f"real or zero eigenvalue in {roots}; no pair configuration applies"
        )
    upper_idx = [i for i, z in enumerate(roots) if z.imag > 0.0]
    upper_idx.sort(key=lambda i: (roots[i].real, roots[i].imag))
    if len(upper_idx) != 2:
        raise UnresolvedConfiguration(f"could not split {roots} into conjugate pairs")
    i1, i2 = upper_idx
    w1, w2 = roots[i1], roots[i2]
    stable_count = 2 * sum(1 for w in (w1, w2) if w.real < -tol * (1.0 + abs(w)))

    same_cluster = any(i1 in c and i2 in c for c in sp.clusters)

    if same_cluster:
        u, v = _double_pair_quadratic(A)
        alpha = -u / 2.0
        beta = math.sqrt(max(v - alpha * alpha, 0.0))
        w = complex(alpha, beta)
        if _re_is_zero(w, tol):
            flag = sp.semisimple_double_pair
            if flag is None:
                flag = is_semisimple_double_pair(A, beta, tol)
            code = CONFIG_DOUBLE_SEMISIMPLE if flag else CONFIG_DOUBLE_NILPOTENT
        elif w.real < 0.0:
            ss = _coincident_pair_semisimple(A, u, v, tol)
            code = CONFIG_COINCIDENT_STABLE if ss else CONFIG_COINCIDENT_STABLE_NILPOTENT
        else:
            ss = _coincident_pair_semisimple(A, u, v, tol)
            code = (
                CONFIG_COINCIDENT_UNSTABLE if ss else CONFIG_COINCIDENT_UNSTABLE_NILPOTENT
            )
        return EigConfig(code, stable_count)

    signs = []
    for w in (w1, w2):
        if _re_is_zero(w, tol):
            signs.append(0)
        elif w.real < 0.0:
            signs.append(-1)
        else:
            signs.append(1)
    s = tuple(sorted(signs))
    if s == (0, 0):
        code = CONFIG_TWO_IMAGINARY
    elif s == (-1, 0):
        code = CONFIG_BETA_STABLE
    elif s == (0, 1):
        code = CONFIG_BETA_UNSTABLE
    elif s == (-1, -1):
        code = CONFIG_STABLE_PAIRS
    elif s == (1, 1):
        code = CONFIG_UNSTABLE_PAIRS
    else:
        code = CONFIG_MIXED
    return EigConfig(code, stable_count)
