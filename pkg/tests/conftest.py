import math
from collections import deque

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "lab",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("lab")


def brute_oscillation(path, a, b, k=4001):
    """Grid max-min; a lower bound on the true oscillation."""
    vals = [path.value(a + (b - a) * i / (k - 1)) for i in range(k)]
    return max(vals) - min(vals)


def brute_oscillation_mod(path, eps, a, b, k=20001):
    """Sliding-window max-min over a uniform grid; a lower bound on the sup."""
    h = (b - a) / (k - 1)
    w = max(1, int(eps / h))
    vals = [path.value(a + h * i) for i in range(k)]
    mx, mn = deque(), deque()
    best = 0.0
    for i, v in enumerate(vals):
        while mx and vals[mx[-1]] <= v:
            mx.pop()
        mx.append(i)
        while mn and vals[mn[-1]] >= v:
            mn.pop()
        mn.append(i)
        lo = i - w
        while mx[0] < lo:
            mx.popleft()
        while mn[0] < lo:
            mn.popleft()
        best = max(best, vals[mx[0]] - vals[mn[0]])
    return best


@pytest.fixture(scope="session")
def demo_paths():
    from qvlab import make_named_path, make_random_walk

    return {
        "z": make_named_path("z"),
        "p": make_named_path("p"),
        "q": make_named_path("q"),
        "indicator_half": make_named_path("indicator_half"),
        "walk": make_random_walk(2 ** 10, 1.0, seed=424242),
    }


def assert_close(actual, expected, tol=1e-12, label=""):
    assert abs(actual - expected) <= tol, f"{label}: {actual!r} vs {expected!r}"
