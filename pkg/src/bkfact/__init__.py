"""Exact factorization residuals and open-box certification for second-order
bivariate linear partial differential operators with polynomial coefficients.

The package decides exact factorizability (a00 equals the residual R built
along a characteristic root), and certifies approximate factorizability
(|a00 - R| < eps on an open rectangle) with exact rational arithmetic:
closed-form quantifier-free criteria for the affine case, exact quadratic
extrema, and Bernstein subdivision for higher degree.
"""

from .certify import (
    Certificate,
    CertifiedInside,
    CertRequest,
    Extrema,
    GridWitness,
    QfVariant,
    ReducedProblem,
    Unknown,
    UnivQuad,
    Violated,
    bernstein_certify,
    certify_open_box,
    lifted_sufficient,
    qf_linear,
    qf_neg_casewise,
    qf_neg_compact,
    qf_nonpos_combined,
    qf_predicate,
    quad_box_extrema,
    quad_from_reduced,
    quad_interval_decision,
    sample_falsify,
    triangle_sufficient,
    univariate_sufficient,
)
from .errors import (
    BkfactError,
    DegreeTooHighError,
    ExponentError,
    NoRationalRootsError,
    NotSecondOrderError,
    NotSimpleRootError,
    ParseError,
    PreconditionViolatedError,
    ZeroLeadingError,
)
from .lpdo import (
    CANONICAL_SYMBOL,
    CharRoot,
    FirstOrderFactor,
    LPDO2,
    PrincipalSymbol,
    ReducedCoeffs,
    ResidualTrace,
    apply_operator,
    canonical_residual,
    characteristic_roots,
    compose_first_order,
    degree_necessary_check,
    exactness_system_deg1,
    family_deg1,
    is_exactly_factorizable,
    reconstruct_factors,
    reduced_coeffs,
    residual,
    residual_closed_deg1,
    residual_closed_deg2,
)
from .parsing import parse_poly
from .poly import (
    Box,
    Poly1,
    Poly2,
    RangeEnclosure,
    as_fraction,
    bernstein_enclosure,
    char_diff,
    format_poly,
    linear_comb,
    poly_mul,
)
from .report import Report, RootReport, approx_factor_report, reduced_problem

__version__ = "0.1.0"
