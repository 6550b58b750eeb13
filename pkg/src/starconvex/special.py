"""Log-gamma, Pochhammer symbols and the Wright-type series F, G and their
integral transforms.

All gamma quotients are assembled in log space: ``Gamma(lambda*(n-1) + mu)``
leaves double range long before the coefficients themselves underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    Convention,
    DomainError,
    SignedPowerSeries,
    WrightParams,
)

DEFAULT_TRUNCATION = 40

# Lanczos approximation, g = 7, 9 terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

_EULER_GAMMA = 0.57721566490153286061
# zeta(k) for k = 2..30
_ZETA = (
    1.6449340668482264365,
    1.2020569031595942854,
    1.0823232337111381915,
    1.0369277551433699263,
    1.0173430619844491397,
    1.0083492773819228268,
    1.0040773561979443394,
    1.0020083928260822144,
    1.0009945751278180853,
    1.0004941886041194646,
    1.0002460865533080483,
    1.0001227133475784891,
    1.0000612481350587048,
    1.0000305882363070205,
    1.0000152822594086519,
    1.0000076371976378998,
    1.0000038172932649998,
    1.0000019082127165539,
    1.0000009539620338728,
    1.0000004769329867878,
    1.0000002384505027277,
    1.0000001192199259653,
    1.0000000596081890513,
    1.0000000298035035147,
    1.0000000149015548284,
    1.0000000074507117898,
    1.0000000037253340248,
    1.0000000018626597235,
    1.0000000009313274324,
)
# Taylor expansion about 1 is used for |x - 1| and |x - 2| below this.
_ROOT_WINDOW = 0.25

_FACTORIALS = tuple(math.factorial(k) for k in range(21))


def _lngamma_near_one(eps: float) -> float:
    # ln Gamma(1 + eps) = -gamma*eps + sum_{k>=2} (-1)^k zeta(k) eps^k / k
    acc = 0.0
    for k in range(len(_ZETA) + 1, 1, -1):
        term = _ZETA[k - 2] / k
        acc = acc * eps + (term if k % 2 == 0 else -term)
    return eps * (acc * eps - _EULER_GAMMA)


def _lngamma_lanczos(x: float) -> float:
    x -= 1.0
    a = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        a += _LANCZOS_COEFFS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (x + 0.5) * math.log(t) - t + math.log(a)


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for real ``x > 0``.

    Lanczos away from the roots at 1 and 2; a zeta-series Taylor expansion
    close to them so that relative accuracy holds where ``ln Gamma`` vanishes.
    """
    x = float(x)
    if not x > 0.0 or math.isnan(x):
        raise DomainError(f"ln_gamma needs x > 0, got {x}")
    if math.isinf(x):
        return math.inf
    if x == 1.0 or x == 2.0:
        return 0.0
    if abs(x - 1.0) <= _ROOT_WINDOW:
        return _lngamma_near_one(x - 1.0)
    if abs(x - 2.0) <= _ROOT_WINDOW:
        eps = x - 2.0
        return math.log1p(eps) + _lngamma_near_one(eps)
    if x < 0.5:
        # ln Gamma(x) = ln Gamma(x + 1) - ln x
        return ln_gamma(x + 1.0) - math.log(x)
    return _lngamma_lanczos(x)


def factorial(n: int) -> float:
    """``n!`` as a float: exact table to 20, ``exp(ln_gamma(n + 1))`` above."""
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    if n < len(_FACTORIALS):
        return float(_FACTORIALS[n])
    return math.exp(ln_gamma(n + 1.0))


def ln_factorial(n: int) -> float:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    if n < len(_FACTORIALS):
        return math.log(_FACTORIALS[n])
    return ln_gamma(n + 1.0)


def pochhammer(mu: float, k: int) -> float:
    """Rising factorial ``(mu)_k = mu (mu + 1) ... (mu + k - 1)``.

    Direct product for ``k <= 30``; gamma-function quotient beyond.
    """
    mu = float(mu)
    if not mu > 0.0:
        raise DomainError(f"pochhammer needs mu > 0, got {mu}")
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    if k <= 30:
        out = 1.0
        for j in range(k):
            out *= mu + j
        return out
    return math.exp(ln_gamma(mu + k) - ln_gamma(mu))


def ln_wright_coefficient(params: WrightParams, n: int) -> float:
    """Log of :func:`wright_coefficient`; finite even where the value underflows."""
    if n < 2:
        raise DomainError(f"Wright coefficients start at n = 2, got {n}")
    m = n - 1
    arg = params.lam * m + params.mu
    if not arg > 0.0:
        raise DomainError(
            f"lambda*(n-1) + mu = {arg} is not positive at n={n}; "
            "the gamma quotient leaves the supported domain"
        )
    return ln_gamma(params.mu) - ln_gamma(arg) - 1.0 / params.mu - ln_factorial(m)


def wright_coefficient(params: WrightParams, n: int) -> float:
    """Coefficient of ``z^n`` in F_{lambda,mu}:
    ``Gamma(mu) / Gamma(lambda (n-1) + mu) * exp(-1/mu) / (n-1)!``.

    Underflows to 0.0 once the log drops below about -745.
    """
    return math.exp(ln_wright_coefficient(params, n))


@dataclass(frozen=True)
class WrightCoefficientTable:
    params: WrightParams
    values: tuple[float, ...]

    def rows(self):
        """``(n, c_n)`` pairs starting at n = 2."""
        return [(k + 2, v) for k, v in enumerate(self.values)]


def wright_table(params: WrightParams, N: int = DEFAULT_TRUNCATION) -> WrightCoefficientTable:
    if N < 1:
        raise DomainError(f"truncation N must be >= 1, got {N}")
    return WrightCoefficientTable(
        params, tuple(wright_coefficient(params, n) for n in range(2, N + 1))
    )


def build_F(params: WrightParams, N: int = DEFAULT_TRUNCATION) -> SignedPowerSeries:
    """Truncation of ``F_{lambda,mu}(z) = z + (W_{lambda,mu}(z) - z) e^{-1/mu}``."""
    return SignedPowerSeries(Convention.A, wright_table(params, N).values)


def build_G(params: WrightParams, N: int = DEFAULT_TRUNCATION) -> SignedPowerSeries:
    """Truncation of ``G = 2z - F``: the same magnitudes, subtracted."""
    return SignedPowerSeries(Convention.T, wright_table(params, N).values)


def integral_transform(series: SignedPowerSeries) -> SignedPowerSeries:
    """Alexander-type transform ``f -> int_0^z f(t)/t dt``; maps a_n to a_n/n."""
    return SignedPowerSeries(
        series.convention, tuple(a / n for n, a in series.terms())
    )
