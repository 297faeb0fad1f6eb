"""Moment-matrix hierarchy for synchronous projection correlations.

Builds and validates hierarchy certificates, solves level-k feasibility
by alternating projections, detects rank loops certifying
finite-dimensional realizations, and runs the matricial-spanning tests
that probe constant-overlap and unbiased-basis existence questions.
"""

from .applications import (
    MubIndex,
    SearchReport,
    flatten_pvms,
    mub_level1,
    mub_level1_factor,
    mub_null_coefficients,
    p_mub,
    p_sic,
    reference_mubs,
    reference_sic,
    search_t2,
    sic_level1,
    sic_level1_factor,
)
from .certificate import (
    COMPLEX,
    REAL,
    Certificate,
    ClassTable,
    Correlation,
    ValidationReport,
    class_positions,
    from_projections,
    gram_factor,
    group_positions,
    level1_certificate,
    materialize,
    symmetry_mode,
    validate,
)
from .hierarchy import HierarchyReport, certify, check_rank_loop, numerical_rank
from .solver import (
    AffineClassProjection,
    SolverConfig,
    SolverReport,
    export_sdpa,
    project_affine,
    project_psd,
    solve_feasibility,
)
from .spanning import SpanningReport, check_matricially_spanning, commutator_stack, nullity
from .words import (
    CYCLIC,
    CYCLIC_REVERSAL,
    CanonicalClass,
    Word,
    canonical_class,
    collapse_powers,
    dagger,
    enumerate_classes,
    enumerate_words,
    pairs_equivalent,
    reduce_word,
    rotations,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLEX",
    "CYCLIC",
    "CYCLIC_REVERSAL",
    "REAL",
    "AffineClassProjection",
    "CanonicalClass",
    "Certificate",
    "ClassTable",
    "Correlation",
    "HierarchyReport",
    "MubIndex",
    "SearchReport",
    "SolverConfig",
    "SolverReport",
    "SpanningReport",
    "ValidationReport",
    "Word",
    "canonical_class",
    "certify",
    "check_matricially_spanning",
    "check_rank_loop",
    "class_positions",
    "collapse_powers",
    "commutator_stack",
    "dagger",
    "enumerate_classes",
    "enumerate_words",
    "export_sdpa",
    "flatten_pvms",
    "from_projections",
    "gram_factor",
    "group_positions",
    "level1_certificate",
    "materialize",
    "mub_level1",
    "mub_level1_factor",
    "mub_null_coefficients",
    "nullity",
    "numerical_rank",
    "p_mub",
    "p_sic",
    "pairs_equivalent",
    "project_affine",
    "project_psd",
    "reduce_word",
    "reference_mubs",
    "reference_sic",
    "rotations",
    "search_t2",
    "sic_level1",
    "sic_level1_factor",
    "solve_feasibility",
    "symmetry_mode",
    "validate",
]
