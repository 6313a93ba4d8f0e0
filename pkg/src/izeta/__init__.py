"""Exact and numerical toolkit for the interpolated multiple-zeta algebra.

The symbolic half works in the algebra of words on letters z_k with
coefficients in Q[t]: quasi-shuffle products, the interpolation operator,
cyclic and sum identity families, and exact span-membership certificates.
The numeric half evaluates nested zeta sums by compensated truncation with
extrapolated error estimates, through a compiled kernel when available.
"""

from .algebra import (
    FormalSum,
    Index,
    RatPoly,
    T,
    Word,
    as_sum,
    circle,
    circle_act,
    harmonic_product,
    parse_formal_sum,
    parse_index,
    parse_ratpoly,
    parse_word,
    star_product,
    substitute_t,
    t_harmonic_product,
    word_linear,
)
from .interpolate import (
    Contraction,
    d_dt,
    enumerate_contractions,
    index_expansions,
    log_s,
    s_alpha,
    s_poly,
    s_t,
    taylor_shift,
    zeta_t_words,
)
from .identities import (
    alt_sum,
    csf_generator,
    csf_generator_linear,
    cyclic_C,
    cyclic_Sigma,
    cyclic_delta,
    odd_product_check,
    sum_poly,
    sum_words,
    two_one_lhs_index,
    two_one_rhs_word,
    words_of_weight,
)
from .reduction import (
    RelationCertificate,
    SpanSolver,
    span_membership,
    verify_csf_reduction,
    verify_sf_reduction,
)
from .numeric import (
    IdentityCheck,
    NumResult,
    VerifyReport,
    eval_element,
    kernel_name,
    mzsv,
    mzv,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "Contraction",
    "FormalSum",
    "IdentityCheck",
    "Index",
    "NumResult",
    "RatPoly",
    "RelationCertificate",
    "SpanSolver",
    "T",
    "VerifyReport",
    "Word",
    "alt_sum",
    "as_sum",
    "circle",
    "circle_act",
    "csf_generator",
    "csf_generator_linear",
    "cyclic_C",
    "cyclic_Sigma",
    "cyclic_delta",
    "d_dt",
    "enumerate_contractions",
    "eval_element",
    "harmonic_product",
    "index_expansions",
    "kernel_name",
    "log_s",
    "mzsv",
    "mzv",
    "odd_product_check",
    "parse_formal_sum",
    "parse_index",
    "parse_ratpoly",
    "parse_word",
    "s_alpha",
    "s_poly",
    "s_t",
    "span_membership",
    "star_product",
    "substitute_t",
    "sum_poly",
    "sum_words",
    "t_harmonic_product",
    "taylor_shift",
    "two_one_lhs_index",
    "two_one_rhs_word",
    "verify_csf_reduction",
    "verify_identity",
    "verify_sf_reduction",
    "word_linear",
    "words_of_weight",
    "zeta_t_words",
]
