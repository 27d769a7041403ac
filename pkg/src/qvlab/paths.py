"""Cadlag paths on [0, T]: evaluation, left limits, jumps and oscillations.

Three representations are supported, all immutable after construction:

* ``ZigzagPath`` -- the analytic zigzag family: the continuous path ``z`` on
  [0, 1], and the two-branch paths ``p`` and ``q`` on [0, 2] built from it
  (``p`` jumps by +2 at t = 1, ``q`` by +1).
* ``PiecewiseLinearPath`` -- continuous, affine between knots.
* ``PiecewiseConstantPath`` -- right-continuous step path (pure jumps).

Left limits are always computed symbolically from the representation, never
by numerical limiting, so eval(t) - left_limit(t) is exactly the jump size.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import ldexp, sqrt
from typing import Sequence

from . import zigzag_path as zp

__all__ = [
    "JumpRecord",
    "CadlagPath",
    "ZigzagPath",
    "PiecewiseLinearPath",
    "PiecewiseConstantPath",
    "constant_path",
    "make_named_path",
    "make_random_walk",
    "path_from_spec",
    "NAMED_PATHS",
]


@dataclass(frozen=True)
class JumpRecord:
    """A jump time together with its size x(t) - x(t-)."""

    time: float
    size: float


class CadlagPath:
    """Common interface of all path representations."""

    T: float

    def value(self, t: float) -> float:
        raise NotImplementedError

    def __call__(self, t: float) -> float:
        return self.value(t)

    def left_limit(self, t: float) -> float:
        raise NotImplementedError

    def jumps(self, eps: float) -> list[JumpRecord]:
        """All jumps of size at least eps in absolute value, sorted by time."""
        raise NotImplementedError

    def jump_part(self, eps: float, t: float) -> float:
        """Running sum of jumps with magnitude >= eps up to and including t."""
        self._check_time(t)
        return math.fsum(r.size for r in self.jumps(eps) if r.time <= t)

    def oscillation(self, a: float, b: float) -> float:
        """sup |x(t) - x(s)| over the interval; (a, b] and [a, b] agree for cadlag paths."""
        raise NotImplementedError

    def oscillation_mod(self, eps: float, a: float, b: float) -> float:
        """sup |x(t) - x(s)| over s, t in [a, b] with |t - s| <= eps."""
        raise NotImplementedError

    def oscillation_jump_removed(self, eps: float, a: float, b: float) -> float:
        """Oscillation of x - J_eps(x) over [a, b] (big jumps compensated away)."""
        raise NotImplementedError

    def sup_norm(self) -> float:
        raise NotImplementedError

    def total_variation(self) -> float:
        raise NotImplementedError

    def _check_time(self, t: float) -> None:
        if not 0.0 <= t <= self.T:
            raise ValueError(f"time {t} outside [0, {self.T}]")

    def _check_interval(self, a: float, b: float) -> None:
        if not (0.0 <= a <= b <= self.T):
            raise ValueError(f"invalid interval [{a}, {b}] within [0, {self.T}]")

    def _check_eps(self, eps: float) -> None:
        if eps <= 0.0:
            raise ValueError(f"eps must be positive, got {eps}")


# ---------------------------------------------------------------------------
# analytic zigzag family
# ---------------------------------------------------------------------------


def _q_left(t: float) -> float:
    """q on [0, 1): -z(t) + t - 1, strictly negative."""
    return -zp.z_value(t) + t - 1.0


def _q_right(t: float) -> float:
    """q on [1, 2]: z(2 - t) + t, at least 1."""
    return zp.z_value(2.0 - t) + t


def _q_left_extrema(a: float, b: float) -> tuple[float, float]:
    """(min, max) of the left q branch over [a, b] with b <= 1 (closure at 1)."""
    qa = _q_left(a) if a < 1.0 else 0.0
    qb = _q_left(b) if b < 1.0 else 0.0
    mn, mx = min(qa, qb), max(qa, qb)
    if a == b:
        return mn, mx
    w_a, w_b = 1.0 - a, 1.0 - b
    # local maxima sit at hump ends (value t - 1 = -4^-k); only the latest matters
    if w_b > 0.0:
        k = zp.hump_of_w(w_b) - 1
        if k >= 1 and ldexp(1.0, -2 * k) <= w_a:
            mx = max(mx, -ldexp(1.0, -2 * k))
    # local minima sit at peaks (value -(h_j + 2*4^-j)); only the earliest matters
    jp = zp.first_peak_hump(w_a) if w_a > 0 else None
    if jp is not None and ldexp(1.0, 1 - 2 * jp) >= w_b:
        mn = min(mn, -(zp.peak_height(jp) + ldexp(1.0, 1 - 2 * jp)))
    return mn, mx


def _q_right_extrema(a: float, b: float) -> tuple[float, float]:
    """(min, max) of the right q branch over [a, b] with 1 <= a <= b <= 2."""
    # substitute s = 2 - t: q = 2 + g(s) with g(s) = z(s) - s on [2-b, 2-a]
    s_lo, s_hi = 2.0 - b, 2.0 - a
    ga = zp.z_value(s_lo) - s_lo
    gb = zp.z_value(s_hi) - s_hi
    mn, mx = min(ga, gb), max(ga, gb)
    if a != b:
        w_lo, w_hi = 1.0 - s_lo, 1.0 - s_hi
        # maxima of g at peaks: h_j + 2*4^-j - 1, decreasing in j
        if w_lo > 0.0:
            jp = zp.first_peak_hump(w_lo)
            if ldexp(1.0, 1 - 2 * jp) >= w_hi:
                mx = max(mx, zp.peak_height(jp) + ldexp(1.0, 1 - 2 * jp) - 1.0)
        # minima of g at hump ends: 4^-k - 1, decreasing in k, so take the largest k
        if w_hi > 0.0:
            k = zp.hump_of_w(w_hi) - 1
            if k >= 1 and ldexp(1.0, -2 * k) <= w_lo:
                mn = min(mn, ldexp(1.0, -2 * k) - 1.0)
        else:
            mn = min(mn, -1.0)  # s_hi = 1: g(1) = -1 attained
    return 2.0 + mn, 2.0 + mx


class ZigzagPath(CadlagPath):
    """One of the analytic paths z (on [0,1]), p or q (on [0,2])."""

    KINDS = ("z", "p", "q")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown zigzag kind {kind!r}")
        self.kind = kind
        self.T = 1.0 if kind == "z" else 2.0
        self._jump_size = {"z": 0.0, "p": 2.0, "q": 1.0}[kind]

    def __repr__(self) -> str:
        return f"ZigzagPath({self.kind!r})"

    def value(self, t: float) -> float:
        self._check_time(t)
        if self.kind == "z":
            return zp.z_value(t)
        if self.kind == "p":
            return zp.z_value(t) if t < 1.0 else 2.0 + zp.z_value(2.0 - t)
        return _q_left(t) if t < 1.0 else _q_right(t)

    def left_limit(self, t: float) -> float:
        if not 0.0 < t <= self.T:
            raise ValueError(f"left limit needs t in (0, {self.T}], got {t}")
        if self.kind == "z":
            return zp.z_value(t)
        if t == 1.0:
            return 0.0  # p(1-) = z(1-) = 0 and q(1-) = -z(1-) + 1 - 1 = 0
        return self.value(t)

    def jumps(self, eps: float) -> list[JumpRecord]:
        self._check_eps(eps)
        if self.kind == "z" or self._jump_size < eps:
            return []
        return [JumpRecord(1.0, self._jump_size)]

    def _extrema(self, a: float, b: float) -> tuple[float, float]:
        if self.kind == "z":
            return zp.z_extrema(a, b)
        if self.kind == "p":
            if b < 1.0:
                return zp.z_extrema(a, b)
            if a >= 1.0:
                mn, mx = zp.z_extrema(2.0 - b, 2.0 - a)
                return mn + 2.0, mx + 2.0
            l_mn, l_mx = zp.z_extrema(a, 1.0)
            r_mn, r_mx = zp.z_extrema(2.0 - b, 1.0)
            return min(l_mn, r_mn + 2.0), max(l_mx, r_mx + 2.0)
        if b < 1.0:
            return _q_left_extrema(a, b)
        if a >= 1.0:
            return _q_right_extrema(a, b)
        l_mn, l_mx = _q_left_extrema(a, 1.0)
        r_mn, r_mx = _q_right_extrema(1.0, b)
        return min(l_mn, r_mn), max(l_mx, r_mx)

    def oscillation(self, a: float, b: float) -> float:
        self._check_interval(a, b)
        mn, mx = self._extrema(a, b)
        return mx - mn

    def oscillation_jump_removed(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        self._check_interval(a, b)
        if self.kind == "z" or self._jump_size < eps or b < 1.0 or a >= 1.0:
            return self.oscillation(a, b)
        d = self._jump_size
        if self.kind == "p":
            l_mn, l_mx = zp.z_extrema(a, 1.0)
            r_mn, r_mx = zp.z_extrema(2.0 - b, 1.0)
            r_mn, r_mx = r_mn + 2.0, r_mx + 2.0
        else:
            l_mn, l_mx = _q_left_extrema(a, 1.0)
            r_mn, r_mx = _q_right_extrema(1.0, b)
        return max(l_mx, r_mx - d) - min(l_mn, r_mn - d)

    def oscillation_mod(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        self._check_interval(a, b)
        if a == b:
            return 0.0
        if self.kind == "z":
            return zp.z_oscillation_mod(eps, a, b)
        left_hi = min(b, 1.0)
        right_lo = max(a, 1.0)
        best = 0.0
        if self.kind == "p":
            if a < 1.0:
                best = zp.hump_osc_mod(eps, 1.0 - a, 1.0 - left_hi)
            if b > 1.0:
                best = max(best, zp.hump_osc_mod(eps, b - 1.0, right_lo - 1.0))
            if a < 1.0 <= b:
                best = max(best, self._p_cross_mod(eps, a, b))
            return best
        if a < 1.0:
            best = zp.hump_osc_mod(eps, 1.0 - a, 1.0 - left_hi, up_adj=-1.0, dn_adj=+1.0)
        if b > 1.0:
            best = max(best, zp.hump_osc_mod(eps, b - 1.0, right_lo - 1.0, up_adj=+1.0, dn_adj=-1.0))
        if a < 1.0 <= b:
            best = max(best, self._q_cross_mod(eps, a, b))
        return best

    @staticmethod
    def _p_cross_mod(eps: float, a: float, b: float) -> float:
        # pairs s < 1 <= t with t - s <= eps: inf over the left window is 0
        # because z's zeros accumulate at 1, so the sup is 2 + max of the
        # right branch within reach
        m = min(b, 1.0 + eps)
        _, zmx = zp.z_extrema(max(0.0, 2.0 - m), 1.0)
        return 2.0 + zmx

    @staticmethod
    def _q_cross_mod(eps: float, a: float, b: float) -> float:
        # sup of q(t) - q(s) over s < 1 <= t, t - s <= eps; exact by candidate
        # enumeration: t runs over right-branch knots and window endpoints,
        # the left-window infimum over peak knots
        m = min(b, 1.0 + eps)

        def inf_left(x: float) -> float:
            if x >= 1.0:
                return 0.0
            jp = zp.first_peak_hump(1.0 - x)
            return min(_q_left(x), -(zp.peak_height(jp) + ldexp(1.0, 1 - 2 * jp)))

        def window_inf(t: float) -> float:
            return inf_left(max(a, t - eps))

        def q_r(t: float) -> float:
            return _q_right(min(t, 2.0))

        cands = [q_r(1.0) - window_inf(1.0), q_r(m) - window_inf(m)]
        j = 1
        while j <= 40:
            tpk = 1.0 + ldexp(1.0, 1 - 2 * j)
            if 1.0 < tpk < m:
                cands.append(q_r(tpk) - window_inf(tpk))
            j += 1
        # staircase: window start pinned at a left peak, t at its far edge
        w_cap = min(1.0 - a, eps, 1.0)
        if w_cap > 0.0:
            j = zp.first_peak_hump(w_cap)
            for jj in range(j, j + 40):
                wpk = ldexp(1.0, 1 - 2 * jj)
                t_left_peak = 1.0 - wpk
                t = min(t_left_peak + eps, m)
                if t >= 1.0:
                    cands.append(q_r(t) - inf_left(t_left_peak))
        return max(cands)

    def sup_norm(self) -> float:
        return {"z": 1.0, "p": 3.0, "q": 2.5}[self.kind]

    def total_variation(self) -> float:
        return math.inf


# ---------------------------------------------------------------------------
# piecewise linear
# ---------------------------------------------------------------------------


class PiecewiseLinearPath(CadlagPath):
    """Continuous path, affine between strictly increasing knots covering [0, T]."""

    def __init__(self, knots: Sequence[tuple[float, float]]):
        if len(knots) < 2:
            raise ValueError("need at least two knots")
        times = [float(t) for t, _ in knots]
        if any(u >= v for u, v in zip(times, times[1:])):
            raise ValueError("knot times must be strictly increasing")
        if times[0] != 0.0:
            raise ValueError("first knot must sit at time 0")
        self._times = times
        self._values = [float(v) for _, v in knots]
        self.T = times[-1]

    @property
    def knots(self) -> list[tuple[float, float]]:
        return list(zip(self._times, self._values))

    def __repr__(self) -> str:
        return f"PiecewiseLinearPath({len(self._times)} knots, T={self.T})"

    def value(self, t: float) -> float:
        self._check_time(t)
        i = bisect_right(self._times, t) - 1
        if i == len(self._times) - 1:
            return self._values[-1]
        t0, t1 = self._times[i], self._times[i + 1]
        v0, v1 = self._values[i], self._values[i + 1]
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def left_limit(self, t: float) -> float:
        if not 0.0 < t <= self.T:
            raise ValueError(f"left limit needs t in (0, {self.T}], got {t}")
        return self.value(t)

    def jumps(self, eps: float) -> list[JumpRecord]:
        self._check_eps(eps)
        return []

    def oscillation(self, a: float, b: float) -> float:
        self._check_interval(a, b)
        vals = [self.value(a), self.value(b)]
        i = bisect_right(self._times, a)
        while i < len(self._times) and self._times[i] < b:
            vals.append(self._values[i])
            i += 1
        return max(vals) - min(vals)

    def oscillation_jump_removed(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        return self.oscillation(a, b)

    def oscillation_mod(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        self._check_interval(a, b)
        if a == b:
            return 0.0
        starts = {a, max(a, b - eps)}
        for k in self._times:
            if a <= k <= b:
                starts.add(min(k, max(a, b - eps)))
            if a <= k - eps <= b:
                starts.add(min(k - eps, max(a, b - eps)))
        best = 0.0
        for s in starts:
            if s < a:
                continue
            best = max(best, self.oscillation(s, min(b, s + eps)))
        return best

    def sup_norm(self) -> float:
        return max(abs(v) for v in self._values)

    def total_variation(self) -> float:
        return math.fsum(abs(v1 - v0) for v0, v1 in zip(self._values, self._values[1:]))


def constant_path(value: float, T: float = 1.0) -> PiecewiseLinearPath:
    return PiecewiseLinearPath([(0.0, value), (T, value)])


# ---------------------------------------------------------------------------
# piecewise constant
# ---------------------------------------------------------------------------


class PiecewiseConstantPath(CadlagPath):
    """Right-continuous step path: initial value plus jumps to new values."""

    def __init__(self, initial: float, jumps: Sequence[tuple[float, float]], T: float):
        times = [float(t) for t, _ in jumps]
        if any(u >= v for u, v in zip(times, times[1:])):
            raise ValueError("jump times must be strictly increasing")
        if times and not (0.0 < times[0] and times[-1] <= T):
            raise ValueError("jump times must lie in (0, T]")
        if T <= 0.0:
            raise ValueError("domain end must be positive")
        self.T = float(T)
        self.initial = float(initial)
        # drop no-op jumps so emitted jump sizes are nonzero
        self._jump_times: list[float] = []
        self._levels: list[float] = [self.initial]
        for t, v in jumps:
            v = float(v)
            if v != self._levels[-1]:
                self._jump_times.append(float(t))
                self._levels.append(v)

    def __repr__(self) -> str:
        return f"PiecewiseConstantPath({len(self._jump_times)} jumps, T={self.T})"

    def value(self, t: float) -> float:
        self._check_time(t)
        return self._levels[bisect_right(self._jump_times, t)]

    def left_limit(self, t: float) -> float:
        if not 0.0 < t <= self.T:
            raise ValueError(f"left limit needs t in (0, {self.T}], got {t}")
        return self._levels[bisect_left(self._jump_times, t)]

    def jumps(self, eps: float) -> list[JumpRecord]:
        self._check_eps(eps)
        out = []
        for i, t in enumerate(self._jump_times):
            size = self._levels[i + 1] - self._levels[i]
            if abs(size) >= eps:
                out.append(JumpRecord(t, size))
        return out

    def _level_slice(self, a: float, b: float) -> list[float]:
        """Values attained on (a, b] plus the value carried in at a."""
        lo = bisect_right(self._jump_times, a)
        hi = bisect_right(self._jump_times, b)
        return self._levels[lo:hi + 1]

    def oscillation(self, a: float, b: float) -> float:
        self._check_interval(a, b)
        vals = self._level_slice(a, b)
        return max(vals) - min(vals)

    def oscillation_jump_removed(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        self._check_interval(a, b)
        lo = bisect_right(self._jump_times, a)
        hi = bisect_right(self._jump_times, b)
        shift = 0.0
        y0 = self._levels[lo]
        mn = mx = 0.0
        for i in range(lo, hi):
            size = self._levels[i + 1] - self._levels[i]
            if abs(size) >= eps:
                shift += size
            y = self._levels[i + 1] - shift - y0
            mn, mx = min(mn, y), max(mx, y)
        return mx - mn

    def oscillation_mod(self, eps: float, a: float, b: float) -> float:
        self._check_eps(eps)
        self._check_interval(a, b)
        if a == b:
            return 0.0
        starts = {a, max(a, b - eps)}
        for t in self._jump_times:
            if a <= t <= b:
                starts.add(min(t, max(a, b - eps)))
            if a <= t - eps <= b:
                starts.add(min(max(a, t - eps), max(a, b - eps)))
        best = 0.0
        for s in starts:
            if s < a:
                continue
            vals = self._level_slice(s, min(b, s + eps))
            best = max(best, max(vals) - min(vals))
        return best

    def sup_norm(self) -> float:
        return max(abs(v) for v in self._levels)

    def total_variation(self) -> float:
        return math.fsum(abs(v1 - v0) for v0, v1 in zip(self._levels, self._levels[1:]))

    @property
    def step_times(self) -> list[float]:
        return list(self._jump_times)


# ---------------------------------------------------------------------------
# factories and the JSON path spec
# ---------------------------------------------------------------------------

NAMED_PATHS = ("z", "p", "q", "indicator_half")


def make_named_path(name: str) -> CadlagPath:
    """The demo paths: z, p, q, and the indicator of [1/2, 1]."""
    if name in ("z", "p", "q"):
        return ZigzagPath(name)
    if name == "indicator_half":
        return PiecewiseConstantPath(0.0, [(0.5, 1.0)], T=1.0)
    raise ValueError(f"unknown path name {name!r}; expected one of {NAMED_PATHS}")


def make_random_walk(steps: int, T: float, seed: int) -> PiecewiseConstantPath:
    """Pure-jump random walk: +-sqrt(T/steps) moves at i*T/steps, i = 1..steps.

    Identical seeds give bit-identical paths (python's Mersenne Twister).
    """
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    if T <= 0.0:
        raise ValueError("domain end must be positive")
    rng = random.Random(seed)
    h = sqrt(T / steps)
    jumps = []
    level = 0.0
    for i in range(1, steps + 1):
        level += h if rng.getrandbits(1) else -h
        jumps.append((i * T / steps, level))
    return PiecewiseConstantPath(0.0, jumps, T=T)


_SPEC_KEYS = {
    "zigzag_z": {"type", "T"},
    "p": {"type", "T"},
    "q": {"type", "T"},
    "indicator_half": {"type", "T"},
    "piecewise_linear": {"type", "T", "knots"},
    "piecewise_constant": {"type", "T", "jumps", "initial"},
    "random_walk": {"type", "T", "steps", "seed"},
}


def path_from_spec(spec: dict) -> CadlagPath:
    """Build a path from its JSON description; rejects unknown keys and unsorted times."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise ValueError("path spec must be an object with a 'type' key")
    kind = spec["type"]
    if kind not in _SPEC_KEYS:
        raise ValueError(f"unknown path type {kind!r}")
    extra = set(spec) - _SPEC_KEYS[kind]
    if extra:
        raise ValueError(f"unknown keys for {kind!r}: {sorted(extra)}")

    if kind in ("zigzag_z", "p", "q", "indicator_half"):
        name = "z" if kind == "zigzag_z" else kind
        path = make_named_path(name)
        if "T" in spec and float(spec["T"]) != path.T:
            raise ValueError(f"{kind!r} lives on [0, {path.T}]")
        return path
    if kind == "piecewise_linear":
        if "knots" not in spec or "T" not in spec:
            raise ValueError("piecewise_linear needs 'T' and 'knots'")
        knots = [(float(t), float(v)) for t, v in spec["knots"]]
        pth = PiecewiseLinearPath(knots)
        if pth.T != float(spec["T"]):
            raise ValueError("last knot time must equal T")
        return pth
    if kind == "piecewise_constant":
        if "jumps" not in spec or "T" not in spec:
            raise ValueError("piecewise_constant needs 'T' and 'jumps'")
        jumps = [(float(t), float(v)) for t, v in spec["jumps"]]
        return PiecewiseConstantPath(float(spec.get("initial", 0.0)), jumps, T=float(spec["T"]))
    if "steps" not in spec or "T" not in spec or "seed" not in spec:
        raise ValueError("random_walk needs 'steps', 'T' and 'seed'")
    return make_random_walk(int(spec["steps"]), float(spec["T"]), int(spec["seed"]))
