"""Sectional matrices of homogeneous polynomial ideals.

Exact commutative-algebra computations over Q: polynomial arithmetic,
Buchberger's algorithm with degree truncation, generic initial ideals, and
the sectional-matrix diagnostics (maximal growth, persistence, dimension,
degree, regularity, reduction numbers, GCD detection for truncations, and
saturation verdicts).
"""

from .errors import (
    EnumerationGuardError,
    GenericityError,
    InconclusiveError,
    InfiniteReductionNumberError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    RingMismatchError,
    SecmatError,
    SemanticError,
)
from .gin import GinResult, is_saturated, regularity, rgin
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_equal,
    leading_term_ideal,
    normal_form,
    s_polynomial,
    truncation_ideal,
)
from .monomial_ideals import (
    HilbertNumerator,
    MonomialIdeal,
    colon_by_irrelevant,
    count_monomials_oracle,
    hilbert_function_value,
    hilbert_numerator,
    is_member,
    is_strongly_stable,
    restrict_to_first_vars,
    saturate_monomial,
)
from .parsing import InputDocument, parse_document, parse_polynomial
from .polynomials import (
    Ideal,
    Polynomial,
    apply_linear_change,
    divides,
    gcd_of_polynomials,
    multivariate_gcd,
    try_divide,
)
from .report import AnalysisReport, GrowthReport, analyze, report_from_dict, report_to_dict
from .rings import DEGLEX, DEGREVLEX, LEX, PowerProduct, Ring, TermOrder, compare
from .sectional import (
    BinomialExpansion,
    SectionalMatrix,
    SectionHilbertSummary,
    binomial_expansion,
    check_bounds,
    dim_deg,
    expansion_shift,
    gcd_of_truncation,
    hilbert_polynomial_of_section,
    hilbert_series_of_section,
    maximal_growth,
    no_new_generators_check,
    persistence_extend,
    potential_gcd_degree,
    reduction_number,
    saturated_growth_equivalence,
    sectional_matrix,
    sectional_matrix_direct_oracle,
    truncation_dim_deg,
    truncation_regularity_check,
    truncation_saturation,
    unipoly_value,
)

__version__ = "0.1.0"
