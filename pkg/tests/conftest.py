import numpy as np
import pytest

from starconvex import ClassParams, Convention, SignedPowerSeries


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


def random_params(rng) -> ClassParams:
    return ClassParams(
        float(rng.uniform(0.0, 1.0 - 1e-9)),
        float(rng.uniform(0.0, 1.0 - 1e-9)),
        float(rng.uniform(0.0, 1.0)),
    )


def random_series(rng, convention, max_degree=20) -> SignedPowerSeries:
    N = int(rng.integers(2, max_degree + 1))
    mags = rng.exponential(1.0, N - 1) * rng.random(N - 1) ** 2
    if convention is Convention.A:
        mags = mags * rng.choice([-1.0, 1.0], N - 1)
    return SignedPowerSeries(convention, tuple(float(m) for m in mags))
