import dataclasses

import numpy as np
import pytest

from starconvex import (
    ClassParams,
    Convention,
    DiskGrid,
    DomainError,
    SignedPowerSeries,
    VerificationReport,
    WrightParams,
)


@pytest.mark.parametrize(
    "alpha,beta,gamma",
    [(1.0, 0, 0), (-0.1, 0, 0), (0, 1.0, 0), (0, -1e-9, 0), (0, 0, 1.0001), (0, 0, -0.5),
     (float("nan"), 0, 0), (0, float("inf"), 0)],
)
def test_class_params_rejects_out_of_range(alpha, beta, gamma):
    with pytest.raises(DomainError):
        ClassParams(alpha, beta, gamma)


def test_class_params_accepts_boundaries():
    p = ClassParams(0.0, 0.0, 1.0)
    assert p.budget == 1.0
    assert ClassParams(0.999, 0.999, 0.0).gamma == 0.0


def test_class_params_is_frozen():
    p = ClassParams(0.5)
    with pytest.raises(dataclasses.FrozenInstanceError):
        p.alpha = 0.1


def test_t_series_rejects_negative_coefficients():
    with pytest.raises(DomainError):
        SignedPowerSeries(Convention.T, (0.1, -0.2))


def test_a_series_keeps_signed_reals():
    s = SignedPowerSeries(Convention.A, (0.1, -0.2))
    assert s.coefficients == (0.1, -0.2)
    assert s.signed_coefficients() == [1.0, 0.1, -0.2]


def test_truncation_counts_stored_terms():
    assert SignedPowerSeries.identity().truncation == 1
    s = SignedPowerSeries("T", [0.1, 0.0, 0.3])
    assert s.truncation == 4
    assert s.convention is Convention.T
    assert list(s.terms()) == [(2, 0.1), (3, 0.0), (4, 0.3)]
    assert s.signed_coefficients() == [1.0, -0.1, -0.0, -0.3]


def test_unknown_convention():
    with pytest.raises(DomainError):
        Convention.parse("B")


@pytest.mark.parametrize("lam,mu", [(-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_wright_params_rejects(lam, mu):
    with pytest.raises(DomainError):
        WrightParams(lam, mu)


def test_wright_theorem_hypothesis():
    assert WrightParams(1.0, 0.47).satisfies_theorem_hypothesis
    assert not WrightParams(0.5, 2.0).satisfies_theorem_hypothesis
    assert not WrightParams(1.0, 0.462).satisfies_theorem_hypothesis
    with pytest.raises(DomainError):
        WrightParams(1.0, 0.4).require_theorem_hypothesis()


@pytest.mark.parametrize(
    "radii,angles",
    [((), 8), ((0.5, 0.5), 8), ((0.6, 0.5), 8), ((1.0,), 8), ((0.0,), 8), ((0.5,), 7)],
)
def test_grid_validation(radii, angles):
    with pytest.raises(DomainError):
        DiskGrid(radii, angles)


def test_geometric_grid_concentrates_near_boundary():
    g = DiskGrid.geometric(64, 256, 0.999)
    r = np.asarray(g.radii)
    assert r[-1] == 0.999 and r[0] == pytest.approx(0.01)
    assert np.all(np.diff(r) > 0)
    # spacing shrinks toward |z| = 1
    assert np.all(np.diff(np.diff(r)) < 0)
    assert g.size == 64 * 256


def test_grid_point_order():
    g = DiskGrid((0.25, 0.5), 8)
    pts = g.points()
    assert pts.shape == (16,)
    assert pts[0] == 0.25
    assert pts[8] == 0.5
    np.testing.assert_allclose(pts[2], 0.25j, atol=1e-16)


def test_report_round_trip():
    r = VerificationReport(0.1, 0.5, 0.4, 0.7, complex(0.3, -0.2), True, True,
                           Convention.T, "member", 16)
    assert VerificationReport.from_dict(r.to_dict()) == r
