"""Closed-form machinery for the zigzag test path and its level-crossing walk.

The path z: [0,1] -> R vanishes at the times 1 - 4^(-j) (j >= 0), reaches
height 1/sqrt(j) at 1 - 2*4^(-j) (j >= 1) and is affine in between.  Hump j
occupies [1 - 4^(-(j-1)), 1 - 4^(-j)]; its rising leg has slope
2^(2j-1)/sqrt(j) and its falling leg slope -2^(2j)/sqrt(j).

Breakpoint times collapse onto 1.0 in binary64 beyond j ~ 27, so every
computation here runs in "w = 1 - t" coordinates and per-hump level indices.
Absolute times are materialised only for comparisons with thresholds bounded
away from 1; w underflows gracefully to 0.0 for j beyond ~537, where the
corresponding time offsets are below any representable resolution.

Level-crossing walks for a value grid c*Z + r come in two flavours:

* an exact integer walk for the grids c = 1/sqrt(n), r = alpha/sqrt(n)
  (crossing counts decided by integer square roots, never by float floors),
* a generic float walk for arbitrary (c, r) with exact rational tie-breaking
  whenever a hump peak lands within 1e-9 grid units of a level.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import isqrt, ldexp, sqrt
from typing import Iterator, NamedTuple

__all__ = [
    "z_value",
    "z_value_from_w",
    "z_left_limit",
    "hump_of_w",
    "peak_height",
    "first_peak_hump",
    "z_extrema",
    "hump_osc_mod",
    "z_oscillation_mod",
    "ZigStop",
    "stop_stream",
    "stop_count",
    "grid_stop_stream",
]


def hump_of_w(w: float) -> int:
    """Hump index j >= 1 with 4^(-j) < w <= 4^(-(j-1)), for w in (0, 1]."""
    if w <= 0.0:
        raise ValueError(f"w must be positive, got {w}")
    _, e = math.frexp(w)
    j = max(1, (-e) // 2)
    while ldexp(1.0, -2 * j) >= w:
        j += 1
    while j > 1 and ldexp(1.0, -2 * (j - 1)) < w:
        j -= 1
    return j


def peak_height(j: int) -> float:
    return 1.0 / sqrt(j)


def z_value_from_w(w: float) -> float:
    """z(1 - w) for w in [0, 1]; w <= 0 maps to z(1) = 0."""
    if w <= 0.0:
        return 0.0
    if w >= 1.0:
        return 0.0
    j = hump_of_w(w)
    if w >= ldexp(1.0, 1 - 2 * j):
        # rising leg: w in [2*4^-j, 4^-(j-1)]
        return (2.0 - ldexp(w, 2 * j - 1)) / sqrt(j)
    return (ldexp(w, 2 * j) - 1.0) / sqrt(j)


def z_value(t: float) -> float:
    """z(t) for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"time {t} outside [0, 1]")
    return z_value_from_w(1.0 - t)


def z_left_limit(t: float) -> float:
    """z(t-); z is continuous on [0, 1] (z(1) := 0 by continuity)."""
    if not 0.0 < t <= 1.0:
        raise ValueError(f"left limit needs t in (0, 1], got {t}")
    return z_value(t)


def first_peak_hump(w_lo: float) -> int:
    """Smallest j whose peak lies at w <= w_lo, i.e. 2*4^(-j) <= w_lo."""
    j = hump_of_w(min(w_lo, 1.0))
    if ldexp(1.0, 1 - 2 * j) > w_lo:
        j += 1
    return j


def z_extrema(lo: float, hi: float) -> tuple[float, float]:
    """(min, max) of z over [lo, hi] within [0, 1], exact from the hump layout."""
    if lo > hi:
        raise ValueError("empty interval")
    va, vb = z_value(lo), z_value(hi)
    mn, mx = min(va, vb), max(va, vb)
    if lo == hi:
        return mn, mx
    w_lo, w_hi = 1.0 - lo, 1.0 - hi
    if w_lo <= 0.0:
        return mn, mx
    # highest interior peak = earliest peak inside (heights decrease)
    jp = first_peak_hump(w_lo)
    if ldexp(1.0, 1 - 2 * jp) >= w_hi:
        mx = max(mx, peak_height(jp))
    # a hump end inside the interval pins the minimum at 0
    jz = hump_of_w(w_lo)
    if ldexp(1.0, -2 * jz) >= w_hi:
        mn = 0.0
    return mn, mx


def hump_osc_mod(eps: float, w_lo: float, w_hi: float,
                 up_adj: float = 0.0, dn_adj: float = 0.0) -> float:
    """sup of eps-window oscillations over the hump structure in w-space.

    Covers the w-interval [w_hi, w_lo] (i.e. times [1 - w_lo, 1 - w_hi]) of a
    path whose legs over hump j have slope magnitudes 2^(2j-1)/sqrt(j) + up_adj
    (rising leg of z) and 2^(2j)/sqrt(j) + dn_adj (falling leg).  The drift
    adjustments +-1 realise the two branches of the p and q paths.  A window
    across a knot never beats the larger of its two one-leg reaches, so the
    supremum is a max of per-leg terms |slope| * min(eps, overlap).
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    if w_lo <= w_hi:
        return 0.0
    best = 0.0
    j = hump_of_w(min(w_lo, 1.0))
    while j <= 540:
        w_start = ldexp(1.0, 2 - 2 * j)  # hump start (largest w)
        w_peak = ldexp(1.0, 1 - 2 * j)
        w_end = ldexp(1.0, -2 * j)
        if w_start <= w_hi:
            break  # hump entirely beyond the interval
        h = peak_height(j)
        # contributions of this and all later humps cannot exceed the current
        # peak height plus the drift carried over at most one window length
        if h + min(eps, w_start) <= best:
            break
        s_up = ldexp(1.0, 2 * j - 1) / sqrt(j) + up_adj
        s_dn = ldexp(1.0, 2 * j) / sqrt(j) + dn_adj
        ov_up = min(w_lo, w_start) - max(w_hi, w_peak)
        if ov_up > 0.0:
            best = max(best, s_up * min(eps, ov_up))
        ov_dn = min(w_lo, w_peak) - max(w_hi, w_end)
        if ov_dn > 0.0:
            best = max(best, s_dn * min(eps, ov_dn))
        j += 1
    return best


def z_oscillation_mod(eps: float, lo: float, hi: float) -> float:
    """sup |z(t) - z(s)| over s, t in [lo, hi] with |t - s| <= eps."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return 0.0
    return hump_osc_mod(eps, 1.0 - lo, 1.0 - hi)


class ZigStop(NamedTuple):
    """One stopping time of the level-crossing walk.

    level  grid index l (value = (l + alpha) * c, resp. l*c + r)
    value  path value at the stop
    w      1 - t for the stop time (may underflow to 0.0 near t = 1)
    hump   hump index
    """

    level: int
    value: float
    w: float
    hump: int


def _emit_hump(j: int, reach: int, first_level: int, values, yield_fn) -> None:
    rj = sqrt(j)
    for l in range(first_level, reach + 1):
        v = values(l)
        yield_fn(ZigStop(l, v, (2.0 - v * rj) * ldexp(1.0, 1 - 2 * j), j))
    for l in range(reach - 1, -1, -1):
        v = values(l)
        yield_fn(ZigStop(l, v, (1.0 + v * rj) * ldexp(1.0, -2 * j), j))


def stop_stream(n: int, alpha: float) -> Iterator[ZigStop]:
    """Stops of the walk over the grid (Z + alpha)/sqrt(n), in time order.

    Crossing reach per hump is decided in integer arithmetic: the highest
    level index l with (l + alpha)/sqrt(n) <= 1/sqrt(j) equals
    (isqrt(n*b^2 // j) - a) // b for alpha = a/b.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    fr = Fraction(alpha)
    a, b = fr.numerator, fr.denominator
    nb2 = n * b * b
    c = 1.0 / sqrt(n)
    j = 1
    on_grid = alpha == 0.0
    while True:
        reach = (isqrt(nb2 // j) - a) // b
        if reach < 1 and (on_grid or j > 1):
            break
        if reach < 0:
            break
        rj = sqrt(j)
        up_scale = ldexp(1.0, 1 - 2 * j)
        dn_scale = ldexp(1.0, -2 * j)
        first = 1 if (on_grid or j > 1) else 0
        for l in range(first, reach + 1):
            v = (l + alpha) * c
            yield ZigStop(l, v, (2.0 - v * rj) * up_scale, j)
        for l in range(reach - 1, -1, -1):
            v = (l + alpha) * c
            yield ZigStop(l, v, (1.0 + v * rj) * dn_scale, j)
        j += 1


def stop_count(n: int, alpha: float) -> int:
    """Number of stops of stop_stream(n, alpha), without materialising them."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    fr = Fraction(alpha)
    a, b = fr.numerator, fr.denominator
    nb2 = n * b * b
    total = 0
    j = 1
    on_grid = alpha == 0.0
    while True:
        reach = (isqrt(nb2 // j) - a) // b
        if reach < 1 and (on_grid or j > 1):
            break
        if reach < 0:
            break
        if on_grid or j > 1:
            total += 2 * reach
        else:
            # hump 1 with an off-grid start: the base level is itself a stop
            total += 2 * reach + 1 if reach >= 1 else reach + 1
        j += 1
    return total


def _grid_reach(j: int, c: float, r: float, c_frac: Fraction, r_frac: Fraction) -> int:
    """Highest l with l*c + r <= 1/sqrt(j); near-ties resolved exactly."""
    x = (1.0 / sqrt(j) - r) / c
    guess = math.floor(x)
    near = round(x)
    if abs(x - near) < 1e-9:
        # decide (near*c + r)^2 * j <= 1 in exact rational arithmetic
        lvl = near * c_frac + r_frac
        guess = near if lvl * lvl * j <= 1 else near - 1
    return guess


def grid_stop_stream(c: float, r: float) -> Iterator[ZigStop]:
    """Stops of the walk over the grid c*Z + r for arbitrary c > 0, r in [0, c)."""
    if c <= 0.0:
        raise ValueError("grid step c must be positive")
    if not 0.0 <= r < c:
        raise ValueError(f"grid shift r must lie in [0, c), got {r}")
    c_frac, r_frac = Fraction(c), Fraction(r)
    j = 1
    on_grid = r == 0.0
    while True:
        reach = _grid_reach(j, c, r, c_frac, r_frac)
        if reach < 1 and (on_grid or j > 1):
            break
        if reach < 0:
            break
        rj = sqrt(j)
        up_scale = ldexp(1.0, 1 - 2 * j)
        dn_scale = ldexp(1.0, -2 * j)
        first = 1 if (on_grid or j > 1) else 0
        for l in range(first, reach + 1):
            v = l * c + r
            yield ZigStop(l, v, (2.0 - v * rj) * up_scale, j)
        for l in range(reach - 1, -1, -1):
            v = l * c + r
            yield ZigStop(l, v, (1.0 + v * rj) * dn_scale, j)
        j += 1
