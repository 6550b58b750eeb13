"""Value types shared across the package.

Everything here is a frozen dataclass validated at construction; out-of-range
input raises :class:`DomainError` instead of being clamped.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

# Wright parameters must clear this for the closed-form theorems to apply.
MU_THEOREM_MIN = 0.462


class DomainError(ValueError):
    """An argument lies outside the domain of an operation or type."""


class ConventionError(ValueError):
    """A series with the wrong sign convention was passed to a criterion."""


class SingularityError(ArithmeticError):
    """The ratio denominator vanished (to working precision) at ``z``."""

    def __init__(self, z: complex, modulus: float):
        self.z = complex(z)
        self.modulus = float(modulus)
        super().__init__(f"denominator modulus {modulus:.3e} at z={self.z!r}")


class ConsistencyError(RuntimeError):
    """A criterion-passing series failed the numeric check.

    The coefficient criterion is sufficient, so this indicates a bug in the
    criterion or in the evaluator rather than a property of the input.
    """


class Convention(str, enum.Enum):
    """Sign convention of the non-linear terms.

    ``A`` is ``z + sum a_n z^n``; ``T`` is ``z - sum a_n z^n`` with ``a_n >= 0``.
    """

    A = "A"
    T = "T"

    @classmethod
    def parse(cls, value: "str | Convention") -> "Convention":
        if isinstance(value, Convention):
            return value
        key = str(value).strip().upper()
        if key in ("A", "CLASSA"):
            return cls.A
        if key in ("T", "CLASST"):
            return cls.T
        raise DomainError(f"unknown convention {value!r}; expected 'A' or 'T'")


def _finite(name: str, value) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


@dataclass(frozen=True)
class ClassParams:
    """The triple (alpha, beta, gamma) selecting a member of the class family.

    ``gamma = 0`` gives the starlike-type class S*(alpha, beta), ``gamma = 1``
    the convex-type class C(alpha, beta).
    """

    alpha: float
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        alpha = _finite("alpha", self.alpha)
        beta = _finite("beta", self.beta)
        gamma = _finite("gamma", self.gamma)
        if not 0.0 <= alpha < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
        if not 0.0 <= beta < 1.0:
            raise DomainError(f"beta must lie in [0, 1), got {beta}")
        if not 0.0 <= gamma <= 1.0:
            raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    @property
    def budget(self) -> float:
        """Right-hand side ``1 - alpha`` of every coefficient inequality."""
        return 1.0 - self.alpha


@dataclass(frozen=True)
class SignedPowerSeries:
    """Truncated normalized series ``z +/- sum_{n=2}^{N} a_n z^n``.

    ``coefficients[k]`` holds ``a_{k+2}``. Under :attr:`Convention.T` the stored
    values are the nonnegative magnitudes that get subtracted. Under
    :attr:`Convention.A` they are real coefficients added to ``z``; the criteria
    consume only their absolute values.
    """

    convention: Convention
    coefficients: tuple[float, ...] = ()

    def __post_init__(self):
        conv = Convention.parse(self.convention)
        coeffs = tuple(_finite(f"a_{k + 2}", c) for k, c in enumerate(self.coefficients))
        if conv is Convention.T:
            for k, c in enumerate(coeffs):
                if c < 0.0:
                    raise DomainError(
                        f"class T series need a_n >= 0; got a_{k + 2} = {c}"
                    )
        object.__setattr__(self, "convention", conv)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def identity(cls, convention: "Convention | str" = Convention.A) -> "SignedPowerSeries":
        return cls(Convention.parse(convention), ())

    @property
    def truncation(self) -> int:
        """Highest retained degree N (1 for the bare series ``z``)."""
        return 1 + len(self.coefficients)

    @property
    def sign(self) -> float:
        return 1.0 if self.convention is Convention.A else -1.0

    def terms(self):
        """Yield ``(n, a_n)`` pairs for n = 2..N."""
        for k, c in enumerate(self.coefficients):
            yield k + 2, c

    def signed_coefficients(self) -> list[float]:
        """Full coefficient list ``[s_1, s_2, ..., s_N]`` with ``s_1 = 1``."""
        s = self.sign
        return [1.0] + [s * c for c in self.coefficients]


@dataclass(frozen=True)
class WrightParams:
    """The pair (lambda, mu) parameterizing the Wright-type functions.

    Construction only needs ``lambda > -1`` and ``mu > 0``; the closed-form
    conditions additionally require :meth:`require_theorem_hypothesis`.
    """

    lam: float
    mu: float

    def __post_init__(self):
        lam = _finite("lambda", self.lam)
        mu = _finite("mu", self.mu)
        if not lam > -1.0:
            raise DomainError(f"lambda must exceed -1, got {lam}")
        if not mu > 0.0:
            raise DomainError(f"mu must be positive, got {mu}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def satisfies_theorem_hypothesis(self) -> bool:
        return self.lam >= 1.0 and self.mu > MU_THEOREM_MIN

    def require_theorem_hypothesis(self) -> None:
        if not self.satisfies_theorem_hypothesis:
            raise DomainError(
                f"closed-form conditions need lambda >= 1 and mu > {MU_THEOREM_MIN}; "
                f"got lambda={self.lam}, mu={self.mu}"
            )


@dataclass(frozen=True)
class DiskGrid:
    """Polar sample of the open unit disk.

    Points are visited radius-major (ascending radii), then by angle
    ``2*pi*k/angles_per_radius`` for ascending k.
    """

    radii: tuple[float, ...]
    angles_per_radius: int = 256

    def __post_init__(self):
        radii = tuple(_finite("radius", r) for r in self.radii)
        if not radii:
            raise DomainError("grid needs at least one radius")
        for r in radii:
            if not 0.0 < r < 1.0:
                raise DomainError(f"radii must lie in (0, 1), got {r}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise DomainError("radii must be strictly increasing")
        n = self.angles_per_radius
        if isinstance(n, bool) or int(n) != n or n < 8:
            raise DomainError(f"angles_per_radius must be an integer >= 8, got {n}")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "angles_per_radius", int(n))

    @classmethod
    def geometric(
        cls,
        n_radii: int = 64,
        angles: int = 256,
        r_max: float = 0.999,
        r_min: float = 0.01,
    ) -> "DiskGrid":
        """Radii whose distance to the boundary shrinks geometrically.

        ``1 - r`` runs from ``1 - r_min`` down to ``1 - r_max``, packing samples
        near ``|z| = 1`` where the ratio extrema live.
        """
        if n_radii < 1:
            raise DomainError("n_radii must be >= 1")
        if not 0.0 < r_max < 1.0:
            raise DomainError(f"r_max must lie in (0, 1), got {r_max}")
        if n_radii == 1:
            return cls((float(r_max),), angles)
        if not 0.0 < r_min < r_max:
            raise DomainError(f"r_min must lie in (0, r_max), got {r_min}")
        gaps = np.geomspace(1.0 - r_min, 1.0 - r_max, n_radii)
        radii = [1.0 - g for g in gaps]
        radii[-1] = float(r_max)
        return cls(tuple(float(r) for r in radii), angles)

    @property
    def size(self) -> int:
        return len(self.radii) * self.angles_per_radius

    def points(self) -> np.ndarray:
        """Complex sample points, flattened in iteration order."""
        n = self.angles_per_radius
        theta = 2.0 * np.pi * np.arange(n) / n
        unit = np.cos(theta) + 1j * np.sin(theta)
        return (np.asarray(self.radii)[:, None] * unit[None, :]).ravel()


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one series both by criterion and by sampling."""

    criterion_value: float
    criterion_budget: float
    margin: float
    min_re_phi: float
    argmin_z: complex
    passed_criterion: bool
    passed_numeric: bool
    convention: Convention = Convention.A
    verdict: str = ""
    grid_size: int = 0

    def to_dict(self) -> dict:
        return {
            "criterion_value": self.criterion_value,
            "criterion_budget": self.criterion_budget,
            "margin": self.margin,
            "min_re_phi": self.min_re_phi,
            "argmin_z": [self.argmin_z.real, self.argmin_z.imag],
            "passed_criterion": self.passed_criterion,
            "passed_numeric": self.passed_numeric,
            "convention": self.convention.value,
            "verdict": self.verdict,
            "grid_size": self.grid_size,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        re, im = data["argmin_z"]
        return cls(
            criterion_value=float(data["criterion_value"]),
            criterion_budget=float(data["criterion_budget"]),
            margin=float(data["margin"]),
            min_re_phi=float(data["min_re_phi"]),
            argmin_z=complex(re, im),
            passed_criterion=bool(data["passed_criterion"]),
            passed_numeric=bool(data["passed_numeric"]),
            convention=Convention.parse(data.get("convention", "A")),
            verdict=str(data.get("verdict", "")),
            grid_size=int(data.get("grid_size", 0)),
        )


def as_series(convention, coefficients: Sequence[float]) -> SignedPowerSeries:
    return SignedPowerSeries(Convention.parse(convention), tuple(coefficients))
