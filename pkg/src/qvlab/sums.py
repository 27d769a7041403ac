"""Partition sums and finite-n limit diagnostics.

The four sums of interest over a partition pi of (0, T]:

* cdf sum at t:      sum over intervals with left endpoint u <= t of (x(v) - x(u))^2
* stopped sum at t:  sum over all intervals of (x(v ^ t) - x(u ^ t))^2
* weighted sum:      sum of f''(x(u)) (x(v) - x(u))^2
* Riemann sum:       sum of f'(x(u)) (x(v) - x(u))

Terms are accumulated in ascending interval order through math.fsum, so
results are reproducible across platforms regardless of partition size.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .partitions import Partition
from .paths import CadlagPath

__all__ = [
    "qv_cdf_sum",
    "qv_stopped_sum",
    "qv_profile",
    "weighted_f2_sum",
    "riemann_f1_sum",
    "LimitDiagnostic",
    "estimate_limit",
]


def _check_t(partition: Partition, t: float) -> None:
    if not 0.0 <= t <= partition.T:
        raise ValueError(f"t must lie in [0, {partition.T}], got {t}")


def qv_cdf_sum(path: CadlagPath, partition: Partition, t: float) -> float:
    """Squared-increment mass of intervals whose left endpoint is <= t."""
    _check_t(partition, t)
    return math.fsum((path.value(v) - path.value(u)) ** 2
                     for u, v in partition.intervals() if u <= t)


def qv_stopped_sum(path: CadlagPath, partition: Partition, t: float) -> float:
    """Squared increments of the path stopped at t."""
    _check_t(partition, t)
    xt = path.value(t)
    terms = []
    for u, v in partition.intervals():
        if v <= t:
            terms.append((path.value(v) - path.value(u)) ** 2)
        elif u < t:
            terms.append((xt - path.value(u)) ** 2)
        else:
            break
    return math.fsum(terms)


def qv_profile(path: CadlagPath, partition: Partition) -> list[tuple[float, float]]:
    """(breakpoint, stopped sum at that breakpoint) for every breakpoint.

    At a breakpoint the stopped sum is a prefix sum of full increments, so the
    whole profile costs one pass.
    """
    values = [path.value(b) for b in partition.breakpoints]
    out = [(partition.breakpoints[0], 0.0)]
    acc = 0.0
    comp = 0.0
    for i in range(1, len(values)):
        term = (values[i] - values[i - 1]) ** 2
        y = term - comp
        s = acc + y
        comp = (s - acc) - y
        acc = s
        out.append((partition.breakpoints[i], acc))
    return out


def weighted_f2_sum(path: CadlagPath, partition: Partition,
                    f_second: Callable[[float], float]) -> float:
    """Second-derivative-weighted squared increments, weight at left endpoints."""
    return math.fsum(f_second(path.value(u)) * (path.value(v) - path.value(u)) ** 2
                     for u, v in partition.intervals())


def riemann_f1_sum(path: CadlagPath, partition: Partition,
                   f_prime: Callable[[float], float]) -> float:
    """Left-endpoint Riemann sum of f' against the path increments."""
    return math.fsum(f_prime(path.value(u)) * (path.value(v) - path.value(u))
                     for u, v in partition.intervals())


# ---------------------------------------------------------------------------
# limit diagnostics
# ---------------------------------------------------------------------------


@dataclass
class LimitDiagnostic:
    """Convergence verdict of a sequence of (n, value) samples.

    converged means the last three values agree pairwise within tolerance;
    split_detected means the even-n and odd-n subsequences each settle but on
    visibly different values (the alternation phenomenon).
    """

    values: list[tuple[int, float]]
    estimate: float | None
    even_limit: float | None
    odd_limit: float | None
    converged: bool
    split_detected: bool
    tol_abs: float
    tol_rel: float

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def as_dict(self) -> dict:
        return {
            "values": [[n, v] for n, v in self.values],
            "estimate": self.estimate,
            "even_limit": self.even_limit,
            "odd_limit": self.odd_limit,
            "converged": self.converged,
            "split_detected": self.split_detected,
            "tol_abs": self.tol_abs,
            "tol_rel": self.tol_rel,
        }


def _settled(vals: Sequence[float], tol: float) -> bool:
    tail = vals[-3:] if len(vals) >= 3 else vals[-2:]
    if len(tail) < 2:
        return False
    return all(abs(a - b) <= tol for i, a in enumerate(tail) for b in tail[i + 1:])


def estimate_limit(values: Sequence[tuple[int, float]], tol_abs: float = 1e-9,
                   tol_rel: float = 1e-6, split_factor: float = 5.0) -> LimitDiagnostic:
    """Diagnose the limit of a finite (n, value) ladder.

    Needs at least four samples with strictly increasing n.  Split detection
    partitions by the parity of n, which is how the alternating partition
    families behave.
    """
    values = [(int(n), float(v)) for n, v in values]
    if len(values) < 4:
        raise ValueError("need at least four (n, value) samples")
    ns = [n for n, _ in values]
    if any(a >= b for a, b in zip(ns, ns[1:])):
        raise ValueError("n must be strictly increasing")

    scale = abs(values[-1][1])
    tol = max(tol_abs, tol_rel * scale)

    vals = [v for _, v in values]
    converged = _settled(vals, tol) and len(vals) >= 3

    even = [v for n, v in values if n % 2 == 0]
    odd = [v for n, v in values if n % 2 == 1]
    split = False
    even_limit = odd_limit = None
    if not converged and len(even) >= 2 and len(odd) >= 2:
        if _settled(even, tol) and _settled(odd, tol):
            gap = abs(even[-1] - odd[-1])
            if gap > split_factor * tol:
                split = True
                even_limit, odd_limit = even[-1], odd[-1]

    estimate = vals[-1] if converged else None
    return LimitDiagnostic(values, estimate, even_limit, odd_limit,
                           converged, split, tol_abs, tol_rel)
