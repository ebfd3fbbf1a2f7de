"""Stability atlas for 4x4 real linear systems near a 1:1 resonance.

The package maps the versal neighborhood of the semisimple resonant
matrix: the commuting unfolding and its three-angle reduction to a
five-parameter canonical family, the critical set where eigenvalues
leave the imaginary axis, the ruled critical surface in the parameter
3-sphere, and the stratification of that sphere by eigenvalue
configuration, with the stable region singled out.
"""

from .algebra import (
    BasisSet,
    CentralizerCoords,
    ReducedCoords,
    adjoint_action,
    basis,
    centralizer_coefficients,
    centralizer_unfolding,
    commutator_table,
    embed,
    homogeneous_reduced,
    homogeneous_unfolding,
    reduce_to_canonical,
    reduced_unfolding,
)
from .errors import (
    AmbiguousStratum,
    DecompositionFailure,
    DegeneratePolynomial,
    DomainError,
    RankAnomalous,
    ResonanceAtlasError,
    UnresolvedConfiguration,
)
from .geometry import (
    F_critical,
    G_full,
    G_sphere,
    NormalFormReport,
    P_POINTS,
    RootTriple,
    SpherePoint,
    f_surface,
    grad_F,
    hessian_F,
    normal_form_residual,
    param_phi,
    phi_coeffs,
    psi,
    unit_point,
)
from .linalg import (
    Mat2,
    Mat4,
    PolyCoeffs,
    RootSet,
    char_poly,
    commutator,
    exp_generator,
    frobenius_inner,
    numeric_rank,
    quartic_roots,
)
from .spectra import (
    EigConfig,
    Spectrum,
    classify_configuration,
    is_semisimple_double_pair,
    spectrum,
)
from .stratification import (
    IncidenceGraph,
    STRATA,
    SampleRecord,
    StabilityReport,
    StratumLabel,
    SurfaceMesh,
    build_incidence,
    classify_point,
    configuration_at,
    evaluation_matrix,
    interior_scale,
    mesh_surface,
    representatives,
    sphere_samples,
    stability_report,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousStratum",
    "BasisSet",
    "CentralizerCoords",
    "DecompositionFailure",
    "DegeneratePolynomial",
    "DomainError",
    "EigConfig",
    "F_critical",
    "G_full",
    "G_sphere",
    "IncidenceGraph",
    "Mat2",
    "Mat4",
    "NormalFormReport",
    "P_POINTS",
    "PolyCoeffs",
    "RankAnomalous",
    "ReducedCoords",
    "ResonanceAtlasError",
    "RootSet",
    "RootTriple",
    "STRATA",
    "SampleRecord",
    "SpherePoint",
    "Spectrum",
    "StabilityReport",
    "StratumLabel",
    "SurfaceMesh",
    "UnresolvedConfiguration",
    "adjoint_action",
    "basis",
    "build_incidence",
    "centralizer_coefficients",
    "centralizer_unfolding",
    "char_poly",
    "classify_configuration",
    "classify_point",
    "commutator",
    "commutator_table",
    "configuration_at",
    "embed",
    "evaluation_matrix",
    "exp_generator",
    "f_surface",
    "frobenius_inner",
    "grad_F",
    "hessian_F",
    "homogeneous_reduced",
    "homogeneous_unfolding",
    "interior_scale",
    "is_semisimple_double_pair",
    "mesh_surface",
    "normal_form_residual",
    "numeric_rank",
    "param_phi",
    "phi_coeffs",
    "psi",
    "quartic_roots",
    "reduce_to_canonical",
    "reduced_unfolding",
    "representatives",
    "spectrum",
    "sphere_samples",
    "stability_report",
    "unit_point",
    "__version__",
]
