"""Partitions of (0, T] and partition-sequence diagnostics.

A partition is stored as its ordered breakpoints 0 = t_0 < ... < t_k = T;
the intervals (t_i, t_{i+1}] are derived.  Lebesgue partitions are built by
exact per-segment enumeration of grid-level crossings; ties at segment
endpoints (a knot landing on a level) count as hits and are decided in level
index arithmetic, not floating-point equality.

The empirical checks of the two partition-sequence assumptions (vanishing
oscillation of the jump-removed path over partition intervals, and left
endpoints converging to left limits) return tables over (eps, n) resp.
(s, n) grids together with a verdict flag.  The assumptions are limits, so
the flag encodes a finite-n surrogate: the relevant column either sits below
the tolerance or decreases monotonically towards it.
"""

from __future__ import annotations

import math
import sys
from bisect import bisect_left
from dataclasses import dataclass, field
from math import ldexp
from typing import Callable, Iterable, Iterator, Sequence

from . import zigzag_path as zp
from .paths import CadlagPath, PiecewiseLinearPath, ZigzagPath

__all__ = [
    "Partition",
    "PartitionSequence",
    "make_uniform",
    "make_dyadic",
    "lebesgue_partition",
    "make_rho",
    "make_sigma",
    "make_tau",
    "uniform_sequence",
    "dyadic_sequence",
    "constant_sequence",
    "rho_sequence",
    "osc_over_partition",
    "AssumptionCheck",
    "check_a1",
    "check_a2",
]

_LEVEL_SNAP = 1e-9  # ties closer than this (in level units) are resolved as hits


@dataclass(frozen=True)
class Partition:
    """Breakpoints 0 = t_0 < t_1 < ... < t_k = T of a partition of (0, T]."""

    breakpoints: tuple[float, ...]

    def __post_init__(self):
        b = self.breakpoints
        if len(b) < 2:
            raise ValueError("a partition needs at least breakpoints 0 and T")
        if b[0] != 0.0:
            raise ValueError("first breakpoint must be 0")
        if any(u >= v for u, v in zip(b, b[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @property
    def T(self) -> float:
        return self.breakpoints[-1]

    @property
    def size(self) -> int:
        """Number of intervals."""
        return len(self.breakpoints) - 1

    def intervals(self) -> Iterator[tuple[float, float]]:
        return zip(self.breakpoints, self.breakpoints[1:])

    def mesh(self) -> float:
        return max(v - u for u, v in self.intervals())

    def bracket(self, s: float) -> tuple[float, float]:
        """The unique interval (u, v] with u < s <= v."""
        if not 0.0 < s <= self.T:
            raise ValueError(f"s must lie in (0, {self.T}], got {s}")
        i = bisect_left(self.breakpoints, s)
        return self.breakpoints[i - 1], self.breakpoints[i]


def make_uniform(T: float, k: int) -> Partition:
    if k < 1:
        raise ValueError("need at least one interval")
    if T <= 0.0:
        raise ValueError("T must be positive")
    b = [T * i / k for i in range(k)] + [T]
    return Partition(tuple(b))


def make_dyadic(T: float, n: int) -> Partition:
    """2^n equal intervals; for dyadic T the mesh is exactly T * 2^-n."""
    if n < 0:
        raise ValueError("dyadic level must be nonnegative")
    if T <= 0.0:
        raise ValueError("T must be positive")
    b = [ldexp(i * T, -n) for i in range(2 ** n)] + [T]
    return Partition(tuple(b))


# ---------------------------------------------------------------------------
# Lebesgue partitions (level-crossing stopping times)
# ---------------------------------------------------------------------------


def _snap_index(u: float) -> tuple[int, bool]:
    """floor(u) plus whether u sits within the snap tolerance of an integer."""
    r = round(u)
    if abs(u - r) < _LEVEL_SNAP:
        return r, True
    return math.floor(u), False


def _pwl_crossings(path: PiecewiseLinearPath, c: float, r: float) -> Iterator[tuple[int, float]]:
    """(level index, time) of successive grid hits of an affine-segment path."""
    knots = path.knots
    for (t0, y0), (t1, y1) in zip(knots, knots[1:]):
        if y1 == y0:
            continue
        slope = (y1 - y0) / (t1 - t0)
        u0 = (y0 - r) / c
        u1 = (y1 - r) / c
        if y1 > y0:
            i0, on0 = _snap_index(u0)
            lo = i0 + 1
            i1, on1 = _snap_index(u1)
            hi = i1 if on1 else math.floor(u1)
            rng = range(lo, hi + 1)
        else:
            i0, on0 = _snap_index(u0)
            hi = i0 - 1 if on0 else math.floor(u0)
            i1, on1 = _snap_index(u1)
            lo = i1 if on1 else math.ceil(u1)
            rng = range(hi, lo - 1, -1)
        for l in rng:
            t = t0 + (l * c + r - y0) / slope
            yield l, min(max(t, t0), t1)


def lebesgue_partition(path: CadlagPath, c: float, r: float) -> Partition:
    """Partition of (0, T] by successive hitting times of the grid c*Z + r.

    Each stopping time is the first time after the previous one at which the
    path sits on a grid level different from its level at the previous stop,
    capped at T.  Only continuous representations are supported.
    """
    if c <= 0.0:
        raise ValueError("grid step c must be positive")
    if not 0.0 <= r < c:
        raise ValueError(f"grid shift r must lie in [0, c), got {r}")
    if isinstance(path, ZigzagPath):
        if path.kind != "z":
            raise ValueError("Lebesgue partitions need a continuous path; "
                             f"{path.kind!r} jumps at t = 1")
        times = [1.0 - s.w for s in zp.grid_stop_stream(c, r)]
        return _cap_and_build(times, path.T,
                              hint="the zigzag partition is too fine to materialise as "
                                   "float times; use the zigzag lab streams instead")
    if isinstance(path, PiecewiseLinearPath):
        state, on = _snap_index((path.value(0.0) - r) / c)
        current: int | None = state if on else None
        times = []
        for level, t in _pwl_crossings(path, c, r):
            if current is None or level != current:
                times.append(t)
                current = level
        return _cap_and_build(times, path.T)
    raise ValueError("Lebesgue partitions need a continuous path "
                     "(zigzag z or piecewise linear)")


def _cap_and_build(stop_times: list[float], T: float, hint: str = "") -> Partition:
    b = [0.0] + stop_times
    if b[-1] != T:
        b.append(T)
    try:
        return Partition(tuple(b))
    except ValueError as exc:
        raise ValueError(f"degenerate stopping times: {exc}" + (f" ({hint})" if hint else ""))


def make_rho(n: int, alpha: float) -> Partition:
    """The Lebesgue partition of z for the grid (Z + alpha)/sqrt(n), materialised.

    Breakpoint times collapse in float for large n; this succeeds roughly for
    n <= 25.  Larger n are handled by the streaming routines of the zigzag lab.
    """
    times = [1.0 - s.w for s in zp.stop_stream(n, alpha)]
    return _cap_and_build(times, 1.0,
                          hint="use the zigzag lab streams for large n")


def _reflect_concat(first: Partition, second: Partition) -> Partition:
    bks = list(first.breakpoints)
    bks.extend(2.0 - b for b in reversed(second.breakpoints[:-1]))
    return Partition(tuple(bks))


def make_sigma(n: int) -> Partition:
    """Partition of (0, 2]: rho^n(0) then reflected rho^n(1/2) for odd n, swapped for even."""
    a_first, a_second = (0.0, 0.5) if n % 2 == 1 else (0.5, 0.0)
    return _reflect_concat(make_rho(n, a_first), make_rho(n, a_second))


def make_tau(n: int) -> Partition:
    """Partition of (0, 2]: rho^n(0) concatenated with its own time reflection."""
    return _reflect_concat(make_rho(n, 0.0), make_rho(n, 0.0))


# ---------------------------------------------------------------------------
# partition sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionSequence:
    """A deterministic family n -> partition of a fixed interval (0, T]."""

    family: str
    param: str
    generate: Callable[[int], Partition] = field(compare=False)

    def __call__(self, n: int) -> Partition:
        return self.generate(n)


def uniform_sequence(T: float) -> PartitionSequence:
    return PartitionSequence("uniform", f"T={T}", lambda n: make_uniform(T, n))


def dyadic_sequence(T: float) -> PartitionSequence:
    return PartitionSequence("dyadic", f"T={T}", lambda n: make_dyadic(T, n))


def constant_sequence(partition: Partition) -> PartitionSequence:
    return PartitionSequence("constant", f"k={partition.size}", lambda n: partition)


def rho_sequence(alpha: float) -> PartitionSequence:
    return PartitionSequence("rho", f"alpha={alpha}", lambda n: make_rho(n, alpha))


def osc_over_partition(path: CadlagPath, partition: Partition) -> float:
    """Largest oscillation of the path over a single partition interval."""
    return max(path.oscillation(u, v) for u, v in partition.intervals())


# ---------------------------------------------------------------------------
# empirical assumption checks
# ---------------------------------------------------------------------------


def _trend_ok(column: Sequence[float], tol: float) -> bool:
    if column[-1] <= tol:
        return True
    non_increasing = all(a >= b for a, b in zip(column, column[1:]))
    return non_increasing and column[-1] < column[0]


@dataclass
class AssumptionCheck:
    """Result table of an empirical A1 or A2 check."""

    kind: str
    keys: tuple          # eps grid (A1) or s list (A2)
    n_grid: tuple[int, ...]
    table: dict          # (key, n) -> value
    tol: float
    verdicts: dict       # key -> bool (A2); {"overall": bool} for A1

    @property
    def verdict(self) -> bool:
        return all(self.verdicts.values())

    def column(self, key) -> list[float]:
        return [self.table[(key, n)] for n in self.n_grid]

    def rows(self, family: str, param: str) -> list[tuple]:
        """CSV rows with header family,param,n,epsilon,value."""
        return [(family, param, n, key, self.table[(key, n)])
                for key in self.keys for n in self.n_grid]


def _default_tol(path: CadlagPath, tol_abs: float | None, tol_rel: float) -> float:
    scale = max(path.sup_norm(), 1.0)
    floor = tol_abs if tol_abs is not None else 10.0 * sys.float_info.epsilon * scale
    return max(floor, tol_rel * scale)


def check_a1(path: CadlagPath, seq: PartitionSequence, eps_grid: Iterable[float],
             n_grid: Iterable[int], tol_abs: float | None = None,
             tol_rel: float = 1e-6) -> AssumptionCheck:
    """Table of max-interval oscillations of the jump-removed path.

    The verdict is a finite-n surrogate for the double limit (n then eps): the
    column at the smallest eps must sit below tolerance or decrease strictly.
    """
    eps_grid = tuple(sorted(eps_grid, reverse=True))
    n_grid = tuple(sorted(n_grid))
    if not eps_grid or not n_grid:
        raise ValueError("eps grid and n grid must be non-empty")
    table = {}
    for eps in eps_grid:
        for n in n_grid:
            part = seq.generate(n)
            table[(eps, n)] = max(path.oscillation_jump_removed(eps, u, v)
                                  for u, v in part.intervals())
    tol = _default_tol(path, tol_abs, tol_rel)
    col = [table[(eps_grid[-1], n)] for n in n_grid]
    return AssumptionCheck("A1", eps_grid, n_grid, table, tol,
                           {"overall": _trend_ok(col, tol)})


def check_a2(path: CadlagPath, seq: PartitionSequence, s_list: Iterable[float],
             n_grid: Iterable[int], tol_abs: float | None = None,
             tol_rel: float = 1e-6) -> AssumptionCheck:
    """Table of |x(left endpoint of the bracketing interval) - x(s-)| per s and n."""
    s_list = tuple(s_list)
    n_grid = tuple(sorted(n_grid))
    if not s_list or not n_grid:
        raise ValueError("s list and n grid must be non-empty")
    table = {}
    for s in s_list:
        for n in n_grid:
            part = seq.generate(n)
            u, _ = part.bracket(s)
            table[(s, n)] = abs(path.value(u) - path.left_limit(s))
    tol = _default_tol(path, tol_abs, tol_rel)
    verdicts = {s: _trend_ok([table[(s, n)] for n in n_grid], tol) for s in s_list}
    return AssumptionCheck("A2", s_list, n_grid, table, tol, verdicts)
