"""Pathwise change-of-variable identity: jump compensator, Stieltjes side, residual.

For a twice continuously differentiable f and a cadlag path x, the identity
under scrutiny is

    f(x(T)) - f(x(0)) = lim sum f'(x(u)) dx  +  1/2 lim sum f''(x(u)) (dx)^2  +  J,

where J collects the second-order Taylor defects across jumps.  The residual
of the finite-n version is

    f(x(T)) - f(x(0)) - Riemann sum - 1/2 weighted sum - J(eps).

The Stieltjes side of the corollary integrates f''(x(t-)) against the
right-continuous modification of an empirical quadratic-variation profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .partitions import Partition
from .paths import CadlagPath, PiecewiseConstantPath
from .sums import qv_profile, riemann_f1_sum, weighted_f2_sum

__all__ = [
    "TestFunction",
    "SecondDerivativeProfile",
    "affine_fn",
    "square_fn",
    "cube_fn",
    "exp_fn",
    "make_fm",
    "make_smooth_cut",
    "jump_term",
    "jump_term_ladder",
    "MonotoneStepFunction",
    "rc_modification",
    "stieltjes_integral",
    "formula_residual",
    "taylor_remainder_oracle",
    "empirical_quadratic_variation",
    "corollary_gap",
]


@dataclass(frozen=True)
class TestFunction:
    """A C^2 function carried as the triple (f, f', f'')."""

    f: Callable[[float], float]
    f_prime: Callable[[float], float]
    f_second: Callable[[float], float]
    valid_range: tuple[float, float] = (-math.inf, math.inf)
    name: str = "f"


def affine_fn(a: float, b: float = 0.0) -> TestFunction:
    return TestFunction(lambda x: a * x + b, lambda x: a, lambda x: 0.0,
                        name=f"affine({a},{b})")


def square_fn() -> TestFunction:
    return TestFunction(lambda x: x * x, lambda x: 2.0 * x, lambda x: 2.0, name="square")


def cube_fn() -> TestFunction:
    return TestFunction(lambda x: x ** 3, lambda x: 3.0 * x * x, lambda x: 6.0 * x,
                        name="cube")


def exp_fn() -> TestFunction:
    return TestFunction(math.exp, math.exp, math.exp, name="exp")


@dataclass(frozen=True)
class SecondDerivativeProfile:
    """A second derivative alone; enough for the weighted squared-increment sums."""

    f_second: Callable[[float], float]
    valid_range: tuple[float, float] = (-math.inf, math.inf)
    name: str = "f''"

    def __call__(self, x: float) -> float:
        return self.f_second(x)


def make_fm(m: int) -> SecondDerivativeProfile:
    """The tent-plateau profile: 0 below 0, ramp to 1 on [0,1], plateau on
    [1, 1+1/m], ramp back to 0 by 1+2/m, then 0."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    top = 1.0 + 1.0 / m
    end = 1.0 + 2.0 / m

    def f2(w: float) -> float:
        if w <= 0.0 or w >= end:
            return 0.0
        if w <= 1.0:
            return w
        if w <= top:
            return 1.0
        return (end - w) * m

    return SecondDerivativeProfile(f2, name=f"fm({m})")


def make_smooth_cut() -> SecondDerivativeProfile:
    """1 below 1, 0 above 2, cubic smoothstep bridge in between (C^1)."""

    def f2(w: float) -> float:
        if w <= 1.0:
            return 1.0
        if w >= 2.0:
            return 0.0
        u = w - 1.0
        return 1.0 - u * u * (3.0 - 2.0 * u)

    return SecondDerivativeProfile(f2, name="smooth_cut")


# ---------------------------------------------------------------------------
# jump compensator
# ---------------------------------------------------------------------------


def jump_term(path: CadlagPath, f: TestFunction, eps: float) -> float:
    """Sum over jumps of size >= eps of the second-order Taylor defect.

    For paths with finitely many jumps and eps below the smallest jump size
    this is the full compensator J.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    terms = []
    for rec in path.jumps(eps):
        x1 = path.value(rec.time)
        x0 = path.left_limit(rec.time)
        d = rec.size
        terms.append(f.f(x1) - f.f(x0) - f.f_prime(x0) * d - 0.5 * f.f_second(x0) * d * d)
    return math.fsum(terms)


def jump_term_ladder(path: CadlagPath, f: TestFunction,
                     eps_ladder: Sequence[float]) -> list[tuple[float, float]]:
    """J(eps) along a decreasing eps ladder (a report, not a limit claim)."""
    return [(eps, jump_term(path, f, eps)) for eps in sorted(eps_ladder, reverse=True)]


# ---------------------------------------------------------------------------
# monotone step functions and the Stieltjes side
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonotoneStepFunction:
    """Right-continuous non-decreasing step function given by jumps."""

    initial: float
    jumps: tuple[tuple[float, float], ...]  # (time, increment >= 0)
    domain_end: float

    def __post_init__(self):
        times = [t for t, _ in self.jumps]
        if any(u >= v for u, v in zip(times, times[1:])):
            raise ValueError("jump times must be strictly increasing")
        if any(inc < 0.0 for _, inc in self.jumps):
            raise ValueError("increments must be nonnegative")
        if times and not (times[0] > 0.0 and times[-1] <= self.domain_end):
            raise ValueError("jump times must lie in (0, domain_end]")

    def value(self, t: float) -> float:
        if not 0.0 <= t <= self.domain_end:
            raise ValueError(f"time {t} outside [0, {self.domain_end}]")
        return self.initial + math.fsum(inc for tt, inc in self.jumps if tt <= t)

    __call__ = value

    @property
    def total_mass(self) -> float:
        return math.fsum(inc for _, inc in self.jumps)


def rc_modification(samples: Sequence[tuple[float, float]],
                    time_atol: float = 0.0) -> MonotoneStepFunction:
    """Right-continuous modification of a sampled non-decreasing function.

    Samples at the same time (or closer than time_atol) encode a left and a
    right value at that point; the modification keeps the right-hand one.  At
    every other sample time the output agrees with the input, so sampling an
    already right-continuous step function at its jump times reproduces it.
    """
    if not samples:
        raise ValueError("need at least one sample")
    pts = [(float(t), float(v)) for t, v in samples]
    if any(t1 < t0 for (t0, _), (t1, _) in zip(pts, pts[1:])):
        raise ValueError("sample times must be non-decreasing")
    if any(v1 < v0 - 1e-15 * max(1.0, abs(v0)) for (_, v0), (_, v1) in zip(pts, pts[1:])):
        raise ValueError("sample values must be non-decreasing")
    merged: list[tuple[float, float]] = []
    for t, v in pts:
        if merged and t - merged[-1][0] <= time_atol:
            merged[-1] = (merged[-1][0], v)  # right-hand value wins at a shared time
        else:
            merged.append((t, v))
    initial = merged[0][1]
    jumps = []
    prev = initial
    for t, v in merged[1:]:
        if v > prev:
            jumps.append((t, v - prev))
            prev = v
    return MonotoneStepFunction(initial, tuple(jumps), domain_end=merged[-1][0])


def stieltjes_integral(g: Callable[[float], float], F: MonotoneStepFunction) -> float:
    """Integral of g over (0, T] against the measure induced by F."""
    return math.fsum(g(t) * inc for t, inc in F.jumps)


# ---------------------------------------------------------------------------
# residual of the identity and the corollary cross-check
# ---------------------------------------------------------------------------


def formula_residual(path: CadlagPath, partition: Partition, f: TestFunction,
                     eps: float) -> float:
    """f(x(T)) - f(x(0)) - Riemann sum - half the weighted sum - J(eps)."""
    total = f.f(path.value(partition.T)) - f.f(path.value(0.0))
    total -= riemann_f1_sum(path, partition, f.f_prime)
    total -= 0.5 * weighted_f2_sum(path, partition, f.f_second)
    total -= jump_term(path, f, eps)
    return total


_ANY_JUMP = 5e-324  # smallest positive double: selects every nonzero jump


def taylor_remainder_oracle(path: PiecewiseConstantPath, f: TestFunction) -> float:
    """Direct sum of third-order Taylor defects over the steps of a pure-jump path.

    For a partition refining all step times and eps above the step size the
    residual of the identity equals exactly this quantity.
    """
    if not isinstance(path, PiecewiseConstantPath):
        raise ValueError("the remainder oracle works on pure-jump paths")
    terms = []
    for rec in path.jumps(_ANY_JUMP):
        x0 = path.left_limit(rec.time)
        d = rec.size
        terms.append(f.f(x0 + d) - f.f(x0) - f.f_prime(x0) * d - 0.5 * f.f_second(x0) * d * d)
    return math.fsum(terms)


def empirical_quadratic_variation(path: CadlagPath,
                                  partition: Partition) -> MonotoneStepFunction:
    """Quadratic-variation estimate from stopped sums at the breakpoints.

    Finite-n stopped sums need not be monotone, so the profile is monotonised
    by a running maximum before taking the right-continuous modification.
    """
    profile = qv_profile(path, partition)
    running = []
    m = 0.0
    for t, v in profile:
        m = max(m, v)
        running.append((t, m))
    return rc_modification(running)


def corollary_gap(path: CadlagPath, partition: Partition, f: TestFunction) -> dict:
    """Compare the weighted sum with the Stieltjes integral of f''(x(t-)).

    Returns the two values and their absolute gap; on inputs where the
    weighted sums converge these agree in the limit.
    """
    weighted = weighted_f2_sum(path, partition, f.f_second)
    F = empirical_quadratic_variation(path, partition)
    stieltjes = stieltjes_integral(lambda t: f.f_second(path.left_limit(t)), F)
    return {
        "weighted_sum": weighted,
        "stieltjes": stieltjes,
        "gap": abs(weighted - stieltjes),
    }
