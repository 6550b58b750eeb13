"""Parameter-region scans comparing a closed-form condition with the
coefficient criterion of the matching Wright-type series."""

from __future__ import annotations

import csv
import enum
import io
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .criteria import (
    closed_form_F_lhs,
    closed_form_integral_lhs,
    criterion_sum,
)
from .model import MU_THEOREM_MIN, ClassParams, DomainError, WrightParams
from .special import DEFAULT_TRUNCATION, build_F, build_G, integral_transform

AXES = ("alpha", "beta", "gamma", "lambda", "mu")
MAX_POINTS = 10_000_000
COLUMNS = AXES + (
    "closed_form_lhs",
    "closed_form",
    "criterion_value",
    "criterion",
    "agreement",
)


class Condition(str, enum.Enum):
    F_condition = "F_condition"
    integral_condition = "integral_condition"
    criterion_F = "criterion_F"
    criterion_G = "criterion_G"
    criterion_F_hat = "criterion_F_hat"
    criterion_G_hat = "criterion_G_hat"


def _series_F(w, N):
    return build_F(w, N)


def _series_G(w, N):
    return build_G(w, N)


def _series_F_hat(w, N):
    return integral_transform(build_F(w, N))


def _series_G_hat(w, N):
    return integral_transform(build_G(w, N))


# condition -> (closed-form LHS, series builder)
_PAIRS: dict[Condition, tuple[Callable, Callable]] = {
    Condition.F_condition: (closed_form_F_lhs, _series_F),
    Condition.criterion_F: (closed_form_F_lhs, _series_F),
    Condition.criterion_G: (closed_form_F_lhs, _series_G),
    Condition.integral_condition: (closed_form_integral_lhs, _series_F_hat),
    Condition.criterion_F_hat: (closed_form_integral_lhs, _series_F_hat),
    Condition.criterion_G_hat: (closed_form_integral_lhs, _series_G_hat),
}


def _check_axis_value(name: str, value: float) -> None:
    ok = {
        "alpha": 0.0 <= value < 1.0,
        "beta": 0.0 <= value < 1.0,
        "gamma": 0.0 <= value <= 1.0,
        "lambda": value >= 1.0,
        "mu": value > MU_THEOREM_MIN,
    }[name]
    if not ok:
        raise DomainError(f"{name} = {value} is outside the scan domain")


@dataclass(frozen=True)
class ScanSpec:
    """Axes ``name -> (min, max, steps)`` plus fixed values for the rest."""

    axes: Mapping[str, tuple[float, float, int]]
    fixed: Mapping[str, float] = field(default_factory=dict)
    condition: Condition = Condition.F_condition
    truncation: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        object.__setattr__(self, "condition", Condition(self.condition))
        axes = {}
        for name, (lo, hi, steps) in self.axes.items():
            if name not in AXES:
                raise DomainError(f"unknown axis {name!r}; choose from {AXES}")
            if int(steps) != steps or steps < 1:
                raise DomainError(f"axis {name} needs steps >= 1, got {steps}")
            if hi < lo:
                raise DomainError(f"axis {name} has max < min")
            _check_axis_value(name, float(lo))
            _check_axis_value(name, float(hi))
            axes[name] = (float(lo), float(hi), int(steps))
        fixed = {}
        for name in AXES:
            if name in axes:
                continue
            if name not in self.fixed:
                raise DomainError(f"{name} is neither an axis nor fixed")
            value = float(self.fixed[name])
            _check_axis_value(name, value)
            fixed[name] = value
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "fixed", fixed)
        if self.size > MAX_POINTS:
            raise DomainError(f"scan has {self.size} points; limit is {MAX_POINTS}")
        if self.truncation < 1:
            raise DomainError("truncation must be >= 1")

    @property
    def size(self) -> int:
        out = 1
        for _, _, steps in self.axes.values():
            out *= steps
        return out

    def axis_values(self, name: str) -> list[float]:
        if name in self.axes:
            lo, hi, steps = self.axes[name]
            if steps == 1:
                return [lo]
            return [float(v) for v in np.linspace(lo, hi, steps)]
        return [self.fixed[name]]

    def points(self) -> Iterator[tuple[float, ...]]:
        """Grid points as (alpha, beta, gamma, lambda, mu); alpha varies slowest."""
        return itertools.product(*(self.axis_values(n) for n in AXES))


@dataclass(frozen=True)
class ScanRow:
    alpha: float
    beta: float
    gamma: float
    lam: float
    mu: float
    closed_form_lhs: float
    closed_form: bool
    criterion_value: float
    criterion: bool

    @property
    def agreement(self) -> bool:
        return self.closed_form == self.criterion

    @property
    def violation(self) -> bool:
        """Closed form holds but the criterion fails: must never happen."""
        return self.closed_form and not self.criterion


def evaluate_point(point: Sequence[float], condition: Condition, N: int) -> ScanRow:
    alpha, beta, gamma, lam, mu = point
    params = ClassParams(alpha, beta, gamma)
    w = WrightParams(lam, mu)
    lhs_fn, build = _PAIRS[Condition(condition)]
    lhs = lhs_fn(w, params)
    crit = criterion_sum(build(w, N), params)
    return ScanRow(
        alpha, beta, gamma, lam, mu,
        closed_form_lhs=lhs,
        closed_form=lhs <= params.budget,
        criterion_value=crit.value,
        criterion=crit.satisfied,
    )


def run_scan(spec: ScanSpec, workers: int = 1, chunksize: int = 256) -> list[ScanRow]:
    """Evaluate every grid point; rows come back in grid order for any worker count."""
    points = list(spec.points())

    def work(chunk):
        return [evaluate_point(p, spec.condition, spec.truncation) for p in chunk]

    chunks = [points[i:i + chunksize] for i in range(0, len(points), chunksize)]
    if workers <= 1:
        parts = map(work, chunks)
        return [row for part in parts for row in part]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # Executor.map yields results in submission order.
        return [row for part in pool.map(work, chunks) for row in part]


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return repr(float(x))


def write_csv(rows: Iterable[ScanRow], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow(
            [
                _fmt(r.alpha), _fmt(r.beta), _fmt(r.gamma), _fmt(r.lam), _fmt(r.mu),
                _fmt(r.closed_form_lhs), _fmt(r.closed_form),
                _fmt(r.criterion_value), _fmt(r.criterion), _fmt(r.agreement),
            ]
        )


def rows_to_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def summarize(rows: Sequence[ScanRow]) -> dict:
    return {
        "points": len(rows),
        "closed_form_true": sum(r.closed_form for r in rows),
        "criterion_true": sum(r.criterion for r in rows),
        "agreements": sum(r.agreement for r in rows),
        "implication_violations": sum(r.violation for r in rows),
    }
