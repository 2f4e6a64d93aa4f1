"""Certified rational enclosures and inequality certificates for psi functions.

The package computes interval enclosures, with exact rational endpoints, of
the digamma and trigamma functions and of several classical constants; it
manipulates truncated asymptotic expansions exactly; and it replays a
collection of published two-sided bounds relating the two functions, either
by certified evaluation on grids or by polynomial positivity certificates.
"""

from __future__ import annotations

from .interval import (
    DomainError,
    Interval,
    ROUNDING_GUARD_BITS,
    Rational,
    iv_arith,
    parse_rational,
    round_outward,
)
from .elementary import iv_exp, iv_ln, iv_pi, iv_sinh, ln2_enclosure
from .series import (
    AsymptoticExpansion,
    UnsupportedOperationError,
    bernoulli,
    digamma_expansion,
    expansion,
    format_expansion,
    series_add,
    series_derivative,
    series_exp,
    series_mul,
    series_scale,
    series_sub,
    theta_expansion,
    trigamma_exp_digamma_expansion,
    trigamma_expansion,
)
from .polygamma import (
    batir_bstar_enclosure,
    digamma_enclosure,
    digamma_zero,
    euler_gamma_enclosure,
    trigamma_enclosure,
)
from .polycert import (
    CertificateReport,
    LogRationalExpr,
    Polynomial,
    RationalFunction,
    certify_negative_on_ray,
    logexpr_derivative,
    logexpr_limit_at_infinity,
    poly_taylor_shift,
    positivity_on_ray,
    rational_from_expansion,
)
from .expressions import (
    Add,
    Const,
    Digamma,
    Div,
    EvalContext,
    Exp,
    Expr,
    Ln,
    Mul,
    Neg,
    NamedConstant,
    PowInt,
    Sinh,
    Trigamma,
    Var,
    evaluate,
)
from .theorems import (
    CertReport,
    InequalityEntry,
    InequalityPair,
    catalog,
    certify_symbolic,
    check_grid,
    compare_bounds,
    default_grid,
    geometric_grid,
    tightness_report,
)

__version__ = "0.1.0"

__all__ = [
    "Add",
    "AsymptoticExpansion",
    "CertReport",
    "CertificateReport",
    "Const",
    "Digamma",
    "Div",
    "DomainError",
    "EvalContext",
    "Exp",
    "Expr",
    "InequalityEntry",
    "InequalityPair",
    "Interval",
    "Ln",
    "LogRationalExpr",
    "Mul",
    "Neg",
    "NamedConstant",
    "PowInt",
    "Polynomial",
    "ROUNDING_GUARD_BITS",
    "Rational",
    "RationalFunction",
    "Sinh",
    "Trigamma",
    "UnsupportedOperationError",
    "Var",
    "__version__",
    "batir_bstar_enclosure",
    "bernoulli",
    "catalog",
    "certify_negative_on_ray",
    "certify_symbolic",
    "check_grid",
    "compare_bounds",
    "default_grid",
    "digamma_enclosure",
    "digamma_expansion",
    "digamma_zero",
    "euler_gamma_enclosure",
    "evaluate",
    "expansion",
    "format_expansion",
    "geometric_grid",
    "iv_arith",
    "iv_exp",
    "iv_ln",
    "iv_pi",
    "iv_sinh",
    "ln2_enclosure",
    "logexpr_derivative",
    "logexpr_limit_at_infinity",
    "parse_rational",
    "poly_taylor_shift",
    "positivity_on_ray",
    "rational_from_expansion",
    "round_outward",
    "series_add",
    "series_derivative",
    "series_exp",
    "series_mul",
    "series_scale",
    "series_sub",
    "theta_expansion",
    "tightness_report",
    "trigamma_enclosure",
    "trigamma_exp_digamma_expansion",
    "trigamma_expansion",
]
