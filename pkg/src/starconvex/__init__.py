"""Coefficient criteria, sharp functions, Wright-type series and numeric
verification for the S*C(alpha, beta; gamma) family of analytic functions."""

from .criteria import (
    CriterionResult,
    closed_form_F_condition,
    closed_form_F_lhs,
    closed_form_integral_condition,
    closed_form_integral_lhs,
    coefficient_bound,
    criterion_sum,
    criterion_weight,
    extremal_function,
    iff_membership_T,
    is_member_sufficient,
)
from .model import (
    ClassParams,
    ConsistencyError,
    Convention,
    ConventionError,
    DiskGrid,
    DomainError,
    SignedPowerSeries,
    SingularityError,
    VerificationReport,
    WrightParams,
)
from .special import (
    WrightCoefficientTable,
    build_F,
    build_G,
    integral_transform,
    ln_gamma,
    ln_wright_coefficient,
    pochhammer,
    wright_coefficient,
    wright_table,
)
from .verifier import cross_validate, eval_series, min_re_phi, phi_ratio

__version__ = "0.1.0"
