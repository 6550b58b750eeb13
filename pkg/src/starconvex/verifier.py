"""Direct numerical check of the defining inequality ``Re phi(z) > alpha``.

``phi`` is the ratio

    (z f' + gamma z^2 f'') / (gamma z (f' + beta z f'') + (1 - gamma)(beta z f' + (1 - beta) f))

which reduces to ``z f'/(beta z f' + (1-beta) f)`` at gamma = 0 and to
``(f' + z f'')/(f' + beta z f'')`` at gamma = 1.  Sampling can falsify
membership but never proves it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .criteria import criterion_sum, verdict
from .model import (
    ClassParams,
    ConsistencyError,
    DiskGrid,
    DomainError,
    SignedPowerSeries,
    SingularityError,
    VerificationReport,
)

SINGULAR_MODULUS = 1e-14
NUMERIC_SLACK = 1e-9


@dataclass(frozen=True)
class PhiSample:
    z: complex
    phi: complex

    @property
    def re_phi(self) -> float:
        return self.phi.real


def _horner(series: SignedPowerSeries, z):
    """Return ``(f(z)/z, f'(z), f''(z))``, highest degree first.

    Works for scalars and ndarrays alike.
    """
    s = series.signed_coefficients()  # s[k] multiplies z^(k+1)
    N = len(s)
    f = 0.0 * z
    f1 = 0.0 * z
    f2 = 0.0 * z
    for k in range(N - 1, -1, -1):
        n = k + 1
        f = f * z + s[k]
        f1 = f1 * z + n * s[k]
        if n >= 2:
            f2 = f2 * z + n * (n - 1) * s[k]
    return f, f1, f2


def eval_series(series: SignedPowerSeries, z: complex) -> tuple[complex, complex, complex]:
    """``(f(z), f'(z), f''(z))`` for a point inside the unit disk."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| must be < 1, got |z| = {abs(z)}")
    f_over_z, f1, f2 = _horner(series, z)
    return complex(f_over_z * z), complex(f1), complex(f2)


def _ratio_parts(f_over_z, f1, f2, z, params: ClassParams):
    # Numerator and denominator of phi, both divided by z. This removes the
    # 0/0 at the origin and leaves the ratio unchanged elsewhere.
    b, g = params.beta, params.gamma
    num = f1 + g * z * f2
    den = g * (f1 + b * z * f2) + (1.0 - g) * (b * f1 + (1.0 - b) * f_over_z)
    return num, den


def phi_ratio(series: SignedPowerSeries, params: ClassParams, z: complex) -> complex:
    """The class ratio at ``z``; ``phi(0) = 1`` by continuity."""
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| must be < 1, got |z| = {abs(z)}")
    num, den = _ratio_parts(*_horner(series, z), z, params)
    if abs(den) < SINGULAR_MODULUS:
        raise SingularityError(z, abs(den))
    return num / den


def phi_sample(series: SignedPowerSeries, params: ClassParams, z: complex) -> PhiSample:
    return PhiSample(complex(z), phi_ratio(series, params, z))


def phi_on_points(series: SignedPowerSeries, params: ClassParams, zs: np.ndarray) -> np.ndarray:
    """Vectorised ``phi`` over an array of points; raises on the first
    (in array order) near-singular denominator."""
    zs = np.asarray(zs, dtype=complex)
    if zs.size and np.max(np.abs(zs)) >= 1.0:
        raise DomainError("all sample points must satisfy |z| < 1")
    num, den = _ratio_parts(*_horner(series, zs), zs, params)
    bad = np.abs(den) < SINGULAR_MODULUS
    if bad.any():
        i = int(np.argmax(bad))
        raise SingularityError(zs[i], abs(den[i]))
    return num / den


def min_re_phi(
    series: SignedPowerSeries, params: ClassParams, grid: DiskGrid
) -> tuple[float, complex]:
    """Smallest ``Re phi`` on the grid and the first point attaining it."""
    zs = grid.points()
    re = phi_on_points(series, params, zs).real
    i = int(np.argmin(re))  # first occurrence wins ties
    return float(re[i]), complex(zs[i])


def cross_validate(
    series: SignedPowerSeries, params: ClassParams, grid: DiskGrid
) -> VerificationReport:
    """Run the coefficient criterion and the sampling check side by side.

    Raises :class:`ConsistencyError` if the criterion passes but some sample
    falls below ``alpha``: the criterion is sufficient, so that is a bug.
    """
    crit = criterion_sum(series, params)
    lo, where = min_re_phi(series, params, grid)
    passed_numeric = lo > params.alpha - NUMERIC_SLACK
    report = VerificationReport(
        criterion_value=crit.value,
        criterion_budget=crit.budget,
        margin=crit.budget - crit.value,
        min_re_phi=lo,
        argmin_z=where,
        passed_criterion=crit.satisfied,
        passed_numeric=passed_numeric,
        convention=series.convention,
        verdict=verdict(crit, series.convention),
        grid_size=grid.size,
    )
    if crit.satisfied and not passed_numeric:
        raise ConsistencyError(
            f"criterion satisfied (margin {report.margin:.3e}) but "
            f"Re phi = {lo!r} < alpha = {params.alpha} at z = {where!r}"
        )
    return report
