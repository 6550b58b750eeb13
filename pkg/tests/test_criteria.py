import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import random_params
from starconvex import (
    ClassParams,
    Convention,
    ConventionError,
    DomainError,
    SignedPowerSeries,
    WrightParams,
    build_F,
    build_G,
    closed_form_F_condition,
    closed_form_F_lhs,
    closed_form_integral_condition,
    closed_form_integral_lhs,
    coefficient_bound,
    criterion_sum,
    criterion_weight,
    extremal_function,
    iff_membership_T,
    integral_transform,
    is_member_sufficient,
)
from starconvex.criteria import INCONCLUSIVE, MEMBER, NOT_MEMBER, verdict

unit_open = st.floats(0.0, 1.0, exclude_max=True)
unit_closed = st.floats(0.0, 1.0)
params_st = st.builds(ClassParams, unit_open, unit_open, unit_closed)


@pytest.mark.parametrize(
    "alpha,beta,gamma,n,expected",
    [(0, 0, 0, 2, 2.0), (0.5, 0.5, 1, 2, 2.5), (0.5, 0, 0, 2, 1.5)],
)
def test_weight_examples(alpha, beta, gamma, n, expected):
    assert criterion_weight(ClassParams(alpha, beta, gamma), n) == expected


def test_weight_domain():
    with pytest.raises(DomainError):
        criterion_weight(ClassParams(0.1), 1)


def test_weight_positive(rng):
    for _ in range(10_000):
        p = random_params(rng)
        n = int(rng.integers(2, 101))
        assert criterion_weight(p, n) > 0.0


def _ordered(lo_hi):
    return tuple(sorted(lo_hi))


pair_open = st.tuples(unit_open, unit_open).map(_ordered)
pair_closed = st.tuples(unit_closed, unit_closed).map(_ordered)


@settings(max_examples=300, deadline=None)
@given(a=pair_open, b=pair_open, g=pair_closed, n=st.integers(2, 50))
def test_weight_monotone(a, b, g, n):
    base = criterion_weight(ClassParams(a[0], b[0], g[0]), n)
    assert criterion_weight(ClassParams(a[0], b[0], g[1]), n) >= base
    assert criterion_weight(ClassParams(a[1], b[0], g[0]), n) <= base
    assert criterion_weight(ClassParams(a[0], b[1], g[0]), n) <= base


@settings(max_examples=300, deadline=None)
@given(a=unit_open, b=unit_open, n=st.integers(2, 200))
def test_weight_reductions(a, b, n):
    assert criterion_weight(ClassParams(a, b, 0.0), n) == pytest.approx(n - a - (n - 1) * a * b, rel=1e-15)
    assert criterion_weight(ClassParams(a, b, 1.0), n) == pytest.approx(n * (n - a - (n - 1) * a * b), rel=1e-15)
    assert criterion_weight(ClassParams(a, 0.0, 0.0), n) == pytest.approx(n - a, rel=1e-15)
    assert criterion_weight(ClassParams(a, 0.0, 1.0), n) == pytest.approx(n * (n - a), rel=1e-15)


def test_criterion_sum_examples():
    r = criterion_sum(SignedPowerSeries.identity(), ClassParams(0.3, 0.2, 0.1))
    assert r.value == 0.0 and r.satisfied

    p = ClassParams(0.5, 0.0, 0.0)
    r = criterion_sum(extremal_function(p, 2, "A"), p)
    assert r.value == pytest.approx(0.5, rel=1e-15) and r.satisfied
    assert r.margin == pytest.approx(0.0, abs=1e-15)

    r = criterion_sum(SignedPowerSeries("A", (1.0,)), ClassParams(0.0))
    assert r.value == 2.0 and r.budget == 1.0 and not r.satisfied


def test_criterion_uses_absolute_values():
    p = ClassParams(0.2, 0.1, 0.4)
    pos = criterion_sum(SignedPowerSeries("A", (0.05, 0.01)), p)
    neg = criterion_sum(SignedPowerSeries("A", (-0.05, 0.01)), p)
    assert pos.value == neg.value


def test_per_term_sums_to_value(rng):
    for _ in range(50):
        p = random_params(rng)
        coeffs = rng.random(int(rng.integers(1, 30)))
        r = criterion_sum(SignedPowerSeries("T", coeffs), p, per_term=True)
        assert r.value == math.fsum(c for _, _, c in r.per_term)
        assert [t[0] for t in r.per_term] == list(range(2, len(coeffs) + 2))
        assert r.satisfied == (r.value <= r.budget + 1e-12)


def test_tie_tolerance():
    p = ClassParams(0.0)
    assert criterion_sum(SignedPowerSeries("T", (0.5 + 4e-13,)), p).satisfied
    assert not criterion_sum(SignedPowerSeries("T", (0.5 + 1e-11,)), p).satisfied


def test_is_member_sufficient_examples():
    assert is_member_sufficient(build_F(WrightParams(1.0, 2.0), 40), ClassParams(0, 0, 0))
    assert is_member_sufficient(SignedPowerSeries.identity(), ClassParams(0.9))
    assert not is_member_sufficient(SignedPowerSeries("A", (0.9,)), ClassParams(0.5, 0, 1))
    with pytest.raises(ConventionError):
        is_member_sufficient(SignedPowerSeries("T", (0.1,)), ClassParams(0.0))


def test_iff_membership_T_examples():
    p = ClassParams(0.5, 0, 0)
    s = SignedPowerSeries("T", (1 / 3,))
    assert iff_membership_T(s, p)
    assert criterion_sum(s, p).margin == pytest.approx(0.0, abs=1e-15)
    assert iff_membership_T(SignedPowerSeries.identity("T"), p)
    assert not iff_membership_T(SignedPowerSeries("T", (0.6,)), ClassParams(0, 0, 1))
    with pytest.raises(ConventionError):
        iff_membership_T(SignedPowerSeries("A", (0.1,)), p)


def test_verdict_labels():
    p = ClassParams(0.0, 0, 1)
    fail = criterion_sum(SignedPowerSeries("T", (0.6,)), p)
    assert verdict(fail, Convention.T) == NOT_MEMBER
    assert verdict(fail, Convention.A) == INCONCLUSIVE
    assert verdict(criterion_sum(SignedPowerSeries.identity(), p), Convention.A) == MEMBER


def test_extremal_examples():
    s = extremal_function(ClassParams(0.5, 0, 0), 2, Convention.T)
    assert s.convention is Convention.T and s.coefficients == pytest.approx((1 / 3,), rel=1e-15)
    s = extremal_function(ClassParams(0, 0, 1), 2, Convention.A)
    assert s.coefficients == (0.25,)
    s = extremal_function(ClassParams(0, 0, 0), 3, "T")
    assert s.coefficients == pytest.approx((0.0, 1 / 3), rel=1e-15)


def test_extremal_sharpness(rng):
    for _ in range(1000):
        p = random_params(rng)
        n = int(rng.integers(2, 21))
        conv = Convention.A if rng.random() < 0.5 else Convention.T
        r = criterion_sum(extremal_function(p, n, conv), p)
        assert abs(r.value - p.budget) <= 1e-13
        assert r.satisfied


@pytest.mark.parametrize(
    "alpha,beta,gamma,n,expected",
    [(0, 0, 1, 2, 0.25), (0, 0, 0, 2, 0.5), (0.5, 0.5, 1, 2, 0.2)],
)
def test_coefficient_bound_examples(alpha, beta, gamma, n, expected):
    assert coefficient_bound(ClassParams(alpha, beta, gamma), n) == pytest.approx(expected, rel=1e-15)


@settings(max_examples=300, deadline=None)
@given(p=params_st, n=st.integers(2, 100))
def test_bound_times_weight(p, n):
    assert coefficient_bound(p, n) * criterion_weight(p, n) == pytest.approx(p.budget, rel=1e-15)
    assert extremal_function(p, n).coefficients[-1] == coefficient_bound(p, n)


@settings(max_examples=200, deadline=None)
@given(p=params_st, n=st.integers(2, 30), over=st.floats(1e-9, 1.0))
def test_t_bound_is_necessary(p, n, over):
    # exceeding the bound by more than the tie tolerance fails the iff test
    assume(p.budget * over > 1e-11)
    coeffs = [0.0] * (n - 2) + [coefficient_bound(p, n) * (1 + over)]
    assert not iff_membership_T(SignedPowerSeries("T", coeffs), p)


@pytest.mark.parametrize(
    "lam,mu,a,b,g,lhs,ok",
    [
        (1, 2, 0, 0, 0, 0.8243606353500641, True),  # (2/4) e^0.5
        (1, 2, 0, 0, 1, 2.885262223725224, False),  # (7/4) e^0.5
        (1, 10, 0, 0, 1, 0.3426029846034508, True),  # (31/100) e^0.1
    ],
)
def test_closed_form_F_examples(lam, mu, a, b, g, lhs, ok):
    w, p = WrightParams(lam, mu), ClassParams(a, b, g)
    assert closed_form_F_lhs(w, p) == pytest.approx(lhs, rel=1e-14)
    assert closed_form_F_condition(w, p) is ok


@pytest.mark.parametrize(
    "lam,mu,a,b,g,lhs,ok",
    [
        (2.3, 0.9, 0, 0.7, 0, 0.0, True),
        (1, 2, 0, 0, 1, 0.8243606353500641, True),  # (1/2) e^0.5
        (1, 0.5, 0.6, 0, 0, 3.8334336593583904, False),  # 0.6 (e^2 - 1)
    ],
)
def test_closed_form_integral_examples(lam, mu, a, b, g, lhs, ok):
    w, p = WrightParams(lam, mu), ClassParams(a, b, g)
    assert closed_form_integral_lhs(w, p) == pytest.approx(lhs, rel=1e-14, abs=1e-300)
    assert closed_form_integral_condition(w, p) is ok


@pytest.mark.parametrize("lam,mu", [(0.99, 2.0), (1.0, 0.462), (2.0, 0.3)])
def test_closed_forms_require_hypothesis(lam, mu):
    with pytest.raises(DomainError):
        closed_form_F_condition(WrightParams(lam, mu), ClassParams(0.1))
    with pytest.raises(DomainError):
        closed_form_integral_condition(WrightParams(lam, mu), ClassParams(0.1))


@settings(max_examples=300, deadline=None)
@given(a=unit_open, b=unit_open, mu=st.floats(0.463, 50.0))
def test_closed_form_reductions(a, b, mu):
    w = WrightParams(1.0, mu)
    e = math.exp(1 / mu)
    # gamma = 0 and gamma = 1 specialisations
    assert closed_form_F_lhs(w, ClassParams(a, b, 0)) == pytest.approx((1 - a * b) * e / mu, rel=1e-13)
    assert closed_form_F_lhs(w, ClassParams(a, b, 1)) == pytest.approx(
        ((1 - a * b) / mu**2 + (3 - 2 * a * b - a) / mu) * e, rel=1e-13)
    assert closed_form_integral_lhs(w, ClassParams(a, b, 0)) == pytest.approx(
        (1 - b) * a * (e - 1), rel=1e-12, abs=1e-300)
    assert closed_form_integral_lhs(w, ClassParams(a, b, 1)) == pytest.approx((1 - a * b) * e / mu, rel=1e-13)


def _random_theorem_point(rng):
    w = WrightParams(float(rng.uniform(1.0, 3.0)), float(rng.uniform(0.462, 20.0)) + 1e-12)
    # mix in exact boundary values of the class parameters
    def pick(lo, hi, closed):
        u = rng.random()
        if u < 0.1:
            return 0.0
        if closed and u < 0.2:
            return 1.0
        return float(rng.uniform(lo, hi))
    return w, ClassParams(pick(0, 0.999999, False), pick(0, 0.999999, False), pick(0, 1, True))


def test_closed_form_implies_sum(rng):
    hits_F = hits_I = 0
    for _ in range(3000):
        w, p = _random_theorem_point(rng)
        F = build_F(w, 40)
        if closed_form_F_condition(w, p):
            hits_F += 1
            assert criterion_sum(F, p).satisfied
            assert iff_membership_T(build_G(w, 40), p)
            # the closed form bounds the full series, so it also bounds the sum
            bound = (1 - p.alpha * p.beta) * p.gamma / w.mu**2 + (
                1 - p.alpha * p.beta + (2 - (1 + p.beta) * p.alpha) * p.gamma) / w.mu + (
                1 - p.alpha) * -math.expm1(-1 / w.mu)
            assert criterion_sum(F, p).value <= bound * (1 + 1e-12)
        if closed_form_integral_condition(w, p):
            hits_I += 1
            assert is_member_sufficient(integral_transform(F), p)
            assert iff_membership_T(integral_transform(build_G(w, 40)), p)
    assert hits_F > 100 and hits_I > 100


def test_converse_can_fail():
    # closed form is only sufficient: found on the scan's first axis point
    w, p = WrightParams(1.0, 0.5), ClassParams(0.0)
    assert not closed_form_F_condition(w, p)
    assert criterion_sum(build_F(w, 40), p).satisfied
