"""Exact computation of exponent semigroups of rational matrices.

The exponent semigroup of a square rational matrix A collects the natural
numbers n with A^n integral.  This package computes it exactly, decides
power integrality with certificates, constructs matrices realizing any
prescribed subsemigroup of N, and reports bounds on the smallest possible
matrix dimension.
"""

from .bounds import DimensionBounds, Justification, bounds, consecutive_run_bound
from .constructions import (
    ConstructionResult,
    SuperdiagonalVector,
    family_2x2,
    find_superdiagonal,
    nilpotent_matrix,
    represent,
)
from .exponents import (
    ExponentAnalysis,
    StateBudget,
    classify_cyclic,
    exponent_semigroup,
    verify_membership,
)
from .linalg import (
    DimensionMismatchError,
    IntegerLattice,
    Polynomial,
    RankDeficientError,
    RationalMatrix,
    char_poly,
    direct_sum,
    hnf,
    kron,
    mat_mul,
    mat_pow,
    min_poly,
)
from .power_integral import (
    NoIntegralSpectrum,
    TfaeReport,
    Witness,
    integral_similarity,
    invariant_lattice,
    quick_reject,
    tfae_report,
    uniform_denominator,
)
from .semigroups import (
    FULL,
    TRIVIAL,
    Kind,
    NumericalData,
    SubsemigroupDesc,
    apery_set,
    contains,
    frobenius_number,
    from_generators,
    is_pseudosymmetric,
    is_symmetric,
    minimal_generators_from_membership,
)

__all__ = [
    "DimensionBounds",
    "Justification",
    "bounds",
    "consecutive_run_bound",
    "ConstructionResult",
    "SuperdiagonalVector",
    "family_2x2",
    "find_superdiagonal",
    "nilpotent_matrix",
    "represent",
    "ExponentAnalysis",
    "StateBudget",
    "classify_cyclic",
    "exponent_semigroup",
    "verify_membership",
    "DimensionMismatchError",
    "IntegerLattice",
    "Polynomial",
    "RankDeficientError",
    "RationalMatrix",
    "char_poly",
    "direct_sum",
    "hnf",
    "kron",
    "mat_mul",
    "mat_pow",
    "min_poly",
    "NoIntegralSpectrum",
    "TfaeReport",
    "Witness",
    "integral_similarity",
    "invariant_lattice",
    "quick_reject",
    "tfae_report",
    "uniform_denominator",
    "FULL",
    "TRIVIAL",
    "Kind",
    "NumericalData",
    "SubsemigroupDesc",
    "apery_set",
    "contains",
    "frobenius_number",
    "from_generators",
    "is_pseudosymmetric",
    "is_symmetric",
    "minimal_generators_from_membership",
]

__version__ = "0.1.0"
