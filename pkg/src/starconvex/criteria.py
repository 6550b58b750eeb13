"""Coefficient criteria for membership in S*C(alpha, beta; gamma) and its
negative-coefficient subclass TS*C(alpha, beta; gamma).

For class A series the coefficient sum is only a sufficient condition; for
class T it is necessary and sufficient.  The closed-form conditions on
(lambda, mu) are upper bounds on that sum for the Wright-type series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .model import (
    ClassParams,
    Convention,
    ConventionError,
    DomainError,
    SignedPowerSeries,
    WrightParams,
)

# Absolute slack when comparing a criterion sum with its budget; sharp
# functions sit exactly on the boundary.
TOLERANCE = 1e-12

MEMBER = "member"
NOT_MEMBER = "not a member"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CriterionResult:
    value: float
    budget: float
    satisfied: bool
    per_term: Optional[tuple[tuple[int, float, float], ...]] = None

    @property
    def margin(self) -> float:
        return self.budget - self.value

    def to_dict(self) -> dict:
        out = {
            "value": self.value,
            "budget": self.budget,
            "margin": self.margin,
            "satisfied": self.satisfied,
        }
        if self.per_term is not None:
            out["per_term"] = [list(t) for t in self.per_term]
        return out


def criterion_weight(params: ClassParams, n: int) -> float:
    """``(1 + (n-1) gamma) (n - alpha - (n-1) alpha beta)``, positive for n >= 2."""
    if n < 2:
        raise DomainError(f"criterion weights start at n = 2, got {n}")
    a, b, g = params.alpha, params.beta, params.gamma
    return (1.0 + (n - 1) * g) * (n - a - (n - 1) * a * b)


def criterion_sum(
    series: SignedPowerSeries, params: ClassParams, per_term: bool = False
) -> CriterionResult:
    """Weighted coefficient sum against the budget ``1 - alpha``."""
    terms = []
    for n, a in series.terms():
        w = criterion_weight(params, n)
        terms.append((n, w, w * abs(a)))
    value = math.fsum(t[2] for t in terms)
    budget = params.budget
    return CriterionResult(
        value=value,
        budget=budget,
        satisfied=value <= budget + TOLERANCE,
        per_term=tuple(terms) if per_term else None,
    )


def verdict(result: CriterionResult, convention: Convention) -> str:
    """Label a criterion outcome; class A failures prove nothing."""
    if result.satisfied:
        return MEMBER
    return NOT_MEMBER if convention is Convention.T else INCONCLUSIVE


def is_member_sufficient(series: SignedPowerSeries, params: ClassParams) -> bool:
    """True guarantees membership of a class A series. False is inconclusive."""
    if series.convention is not Convention.A:
        raise ConventionError(
            "is_member_sufficient takes class A series; use iff_membership_T for class T"
        )
    return criterion_sum(series, params).satisfied


def iff_membership_T(series: SignedPowerSeries, params: ClassParams) -> bool:
    """Exact membership test for a class T series."""
    if series.convention is not Convention.T:
        raise ConventionError(
            "iff_membership_T takes class T series; use is_member_sufficient for class A"
        )
    return criterion_sum(series, params).satisfied


def coefficient_bound(params: ClassParams, n: int) -> float:
    """Largest admissible ``a_n`` for a class T member."""
    return params.budget / criterion_weight(params, n)


def extremal_function(
    params: ClassParams, n: int, convention: "Convention | str" = Convention.A
) -> SignedPowerSeries:
    """Single-term series ``z +/- bound * z^n`` attaining equality in the criterion."""
    coeffs = [0.0] * (n - 2) + [coefficient_bound(params, n)]
    return SignedPowerSeries(Convention.parse(convention), tuple(coeffs))


def closed_form_F_lhs(w: WrightParams, params: ClassParams) -> float:
    """``{(1-ab) g + [1 - ab + (2 - (1+b) a) g] mu} mu^-2 e^{1/mu}``."""
    w.require_theorem_hypothesis()
    a, b, g = params.alpha, params.beta, params.gamma
    mu = w.mu
    linear = 1.0 - a * b + (2.0 - (1.0 + b) * a) * g
    return ((1.0 - a * b) * g + linear * mu) * math.exp(1.0 / mu) / (mu * mu)


def closed_form_F_condition(w: WrightParams, params: ClassParams) -> bool:
    """Sufficient condition for F in S*C(alpha, beta; gamma) and, by the same
    bound, for G in TS*C(alpha, beta; gamma)."""
    return closed_form_F_lhs(w, params) <= params.budget


def closed_form_integral_lhs(w: WrightParams, params: ClassParams) -> float:
    """``{(1-ab) g / mu + (1-b)(1-g) a (1 - e^{-1/mu})} e^{1/mu}``."""
    w.require_theorem_hypothesis()
    a, b, g = params.alpha, params.beta, params.gamma
    mu = w.mu
    return (
        (1.0 - a * b) * g / mu + (1.0 - b) * (1.0 - g) * a * -math.expm1(-1.0 / mu)
    ) * math.exp(1.0 / mu)


def closed_form_integral_condition(w: WrightParams, params: ClassParams) -> bool:
    """Sufficient condition for the integral transforms of F and G."""
    return closed_form_integral_lhs(w, params) <= params.budget
