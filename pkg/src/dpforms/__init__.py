"""Exact toolkit for forms of singular del Pezzo surfaces.

Picard-lattice arithmetic for the two blow-up models, censuses of
(-1)-curve classes with an independent search oracle, orbifold
anti-plurigenus tables, the Galois invariant ell with branch-and-bound
and exhaustive solvers, the rationality/cylindricity decision table,
and exact analysis of hyperplane-section splitting.
"""

from .curves import (
    DELTA,
    E_ZERO,
    EXCEPTIONAL,
    FIBER_RESIDUAL,
    PLANE_DEGREE,
    Q_SECTION,
    CurveFamily,
    SearchBox,
    brute_force_minus_one_classes,
    closed_form_minus_one_classes,
    curves_meeting_q,
    default_search_box,
    delta_class,
    distinguished_e0,
    family_classes,
)
from .errors import (
    BasisMismatchError,
    BoxTooSmallError,
    InfeasibleEllError,
    InputFormatError,
    InternalInvariantError,
    InvalidActionError,
    ParameterError,
    SystemSizeError,
    ToolkitError,
    UnsupportedModelError,
)
from .galois import (
    BRUTE_FORCE_LIMIT,
    CurveSystem,
    EllResult,
    GaloisAction,
    ValidationReport,
    brute_force_ell,
    build_curve_system,
    compute_ell,
    orbit_partition,
    q_point_forced,
    standard_curve_system,
    validate_action,
)
from .lattice import (
    HIRZEBRUCH,
    PLANE,
    DivisorClass,
    SurfaceModel,
    anticanonical_class,
    build_model,
    classes_to_document,
    document_to_classes,
    gram_determinant,
    intersect,
    is_unimodular,
    k_squared_singular,
    lattice_signature,
    load_schema,
    signature_of,
)
from .riemann_roch import (
    EmbeddingDescriptor,
    TableRow,
    anti_plurigenus_table,
    correction_residue,
    correction_term,
    embedding_descriptor,
    h0_anti_plurigenus,
)
from .sections import (
    BinaryForm,
    Factorization,
    LineCensus,
    SplitValue,
    UnivariatePoly,
    binary_form,
    ci_split_polynomial,
    factor_over_rationals,
    is_rational_square,
    line_census,
    poly,
    poly_text,
    rational_roots,
)
from .verdicts import (
    TriState,
    Verdict,
    classify,
    feasible_ell,
    is_del_pezzo,
    parse_tristate,
)
from .verification import CheckResult, run_all
from .cli import run

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "BasisMismatchError",
    "BinaryForm",
    "BoxTooSmallError",
    "CheckResult",
    "CurveFamily",
    "CurveSystem",
    "DELTA",
    "DivisorClass",
    "E_ZERO",
    "EXCEPTIONAL",
    "EllResult",
    "EmbeddingDescriptor",
    "FIBER_RESIDUAL",
    "Factorization",
    "GaloisAction",
    "HIRZEBRUCH",
    "InfeasibleEllError",
    "InputFormatError",
    "InternalInvariantError",
    "InvalidActionError",
    "LineCensus",
    "PLANE",
    "PLANE_DEGREE",
    "ParameterError",
    "Q_SECTION",
    "SearchBox",
    "SplitValue",
    "SurfaceModel",
    "SystemSizeError",
    "TableRow",
    "ToolkitError",
    "TriState",
    "UnivariatePoly",
    "UnsupportedModelError",
    "ValidationReport",
    "Verdict",
    "anti_plurigenus_table",
    "anticanonical_class",
    "binary_form",
    "brute_force_ell",
    "brute_force_minus_one_classes",
    "build_curve_system",
    "build_model",
    "ci_split_polynomial",
    "classes_to_document",
    "classify",
    "closed_form_minus_one_classes",
    "compute_ell",
    "correction_residue",
    "correction_term",
    "curves_meeting_q",
    "default_search_box",
    "delta_class",
    "distinguished_e0",
    "document_to_classes",
    "embedding_descriptor",
    "factor_over_rationals",
    "family_classes",
    "feasible_ell",
    "gram_determinant",
    "h0_anti_plurigenus",
    "intersect",
    "is_del_pezzo",
    "is_rational_square",
    "is_unimodular",
    "k_squared_singular",
    "lattice_signature",
    "line_census",
    "load_schema",
    "orbit_partition",
    "parse_tristate",
    "poly",
    "poly_text",
    "q_point_forced",
    "rational_roots",
    "run",
    "run_all",
    "signature_of",
    "standard_curve_system",
    "validate_action",
    "__version__",
]
