import math

import pytest
from hypothesis import given, strategies as st

from qvlab import (
    MonotoneStepFunction,
    Partition,
    PiecewiseConstantPath,
    affine_fn,
    corollary_gap,
    cube_fn,
    empirical_quadratic_variation,
    exp_fn,
    formula_residual,
    jump_term,
    jump_term_ladder,
    make_dyadic,
    make_fm,
    make_named_path,
    make_random_walk,
    make_smooth_cut,
    rc_modification,
    square_fn,
    stieltjes_integral,
    taylor_remainder_oracle,
    weighted_f2_sum,
)

PI_HALF = Partition((0.0, 0.5, 1.0))


# ---------------------------------------------------------------------------
# test functions and profiles
# ---------------------------------------------------------------------------


def test_testfunction_finite_difference_consistency():
    # |central difference - derivative| should shrink like h^2
    for tf in (square_fn(), cube_fn(), exp_fn()):
        for x in (-1.2, 0.0, 0.7, 2.0):
            errs1, errs2 = [], []
            for h in (1e-2, 5e-3, 2.5e-3):
                d1 = (tf.f(x + h) - tf.f(x - h)) / (2 * h)
                d2 = (tf.f_prime(x + h) - tf.f_prime(x - h)) / (2 * h)
                errs1.append(abs(d1 - tf.f_prime(x)))
                errs2.append(abs(d2 - tf.f_second(x)))
            for errs in (errs1, errs2):
                assert errs[2] <= errs[0] / 4 + 1e-10  # order h^2


def test_fm_profile_shape():
    f2 = make_fm(2)
    assert f2(1.25) == 1.0          # inside the plateau [1, 1 + 1/m]
    assert f2(0.0) == 0.0
    assert f2(-3.0) == 0.0
    for m in (1, 2, 4, 9):
        fm = make_fm(m)
        for w in (0.1, 0.35, 0.8, 1.0):
            assert fm(w) == pytest.approx(w if w < 1 else 1.0, abs=1e-15)
        assert fm(1 + 1.0 / m) == 1.0
        assert fm(1 + 2.0 / m) == 0.0
        assert fm(1 + 1.5 / m) == pytest.approx(0.5, abs=1e-12)
        assert fm(5.0) == 0.0
    with pytest.raises(ValueError):
        make_fm(0)


def test_fm_pointwise_limit_is_ramp_cut():
    # as m grows the profile tends to w * 1_[0,1](w) pointwise (1 at w = 1)
    for w in (0.3, 0.999, 1.0):
        assert make_fm(10 ** 6)(w) == pytest.approx(w, abs=1e-5)
    for w in (1.001, 1.5, 2.0):
        assert make_fm(10 ** 6)(w) == 0.0


def test_smooth_cut_profile():
    cut = make_smooth_cut()
    assert cut(0.5) == 1.0
    assert cut(2.5) == 0.0
    assert cut(1.0) == 1.0
    assert cut(2.0) == 0.0
    assert cut(1.5) == pytest.approx(0.5, abs=1e-15)
    # C^1 gluing: flat at both bridge ends
    h = 1e-6
    assert abs(cut(1 + h) - cut(1.0)) < 5e-12
    assert abs(cut(2 - h) - cut(2.0)) < 5e-12
    vals = [cut(1 + i / 50) for i in range(51)]
    assert all(u >= v - 1e-15 for u, v in zip(vals, vals[1:]))  # monotone bridge


# ---------------------------------------------------------------------------
# jump compensator
# ---------------------------------------------------------------------------


def test_jump_term_examples():
    ind = make_named_path("indicator_half")
    assert jump_term(ind, square_fn(), 0.5) == 0.0
    assert jump_term(make_named_path("z"), cube_fn(), 0.1) == 0.0
    # single jump 0 -> 1 under f(x) = x^3: 1 - 0 - 0 - 0
    assert jump_term(ind, cube_fn(), 0.5) == 1.0
    with pytest.raises(ValueError):
        jump_term(ind, square_fn(), 0.0)


def test_jump_term_ladder_monotone_capture():
    p = make_named_path("p")
    ladder = jump_term_ladder(p, cube_fn(), [3.0, 1.0, 0.1])
    assert ladder[0] == (3.0, 0.0)  # jump of size 2 not captured at eps = 3
    assert ladder[1][1] == ladder[2][1] != 0.0


@given(st.lists(st.tuples(st.integers(min_value=1, max_value=63),
                          st.floats(min_value=-3, max_value=3, allow_nan=False)),
                min_size=1, max_size=6, unique_by=lambda p: p[0]),
       st.floats(min_value=1e-3, max_value=2.0))
def test_quadratic_nullity(jump_spec, eps):
    jumps = [(t / 64.0, v) for t, v in sorted(jump_spec)]
    path = PiecewiseConstantPath(0.5, jumps, T=1.0)
    assert jump_term(path, square_fn(), eps) == pytest.approx(0.0, abs=1e-12)


# ---------------------------------------------------------------------------
# right-continuous modification and the Stieltjes side
# ---------------------------------------------------------------------------


def test_rc_modification_idempotent_on_step_data():
    F = rc_modification([(0.0, 0.0), (0.25, 0.0), (0.5, 1.0), (0.75, 1.0), (1.0, 3.0)])
    assert F.jumps == ((0.5, 1.0), (1.0, 2.0))
    again = rc_modification([(t, F.value(t)) for t in (0.0, 0.25, 0.5, 0.75, 1.0)])
    assert again == F


def test_rc_modification_right_value_at_shared_time():
    # a left/right pair at (essentially) the same time encodes a right
    # discontinuity; the modification keeps the right-hand value at that time
    F = rc_modification([(0.0, 0.0), (0.5, 0.0), (1.0, 0.0), (1.0 + 1e-12, 3.29),
                         (1.5, 3.29)], time_atol=1e-9)
    assert F.value(1.0) == 3.29
    assert F.value(0.99) == 0.0


def test_rc_modification_constant_and_errors():
    F = rc_modification([(0.0, 2.0), (1.0, 2.0)])
    assert F.jumps == ()
    assert F.value(0.7) == 2.0
    with pytest.raises(ValueError):
        rc_modification([(0.0, 1.0), (0.5, 0.5)])  # decreasing values
    with pytest.raises(ValueError):
        rc_modification([(0.5, 0.0), (0.2, 1.0)])  # decreasing times
    with pytest.raises(ValueError):
        rc_modification([])


def test_monotone_step_function_validation():
    with pytest.raises(ValueError):
        MonotoneStepFunction(0.0, ((0.5, -1.0),), 1.0)
    with pytest.raises(ValueError):
        MonotoneStepFunction(0.0, ((0.5, 1.0), (0.5, 1.0)), 1.0)
    F = MonotoneStepFunction(1.0, ((0.25, 0.5), (0.75, 1.5)), 1.0)
    assert F.value(0.25) == 1.5
    assert F.value(0.2) == 1.0
    assert F.total_mass == 2.0


def test_stieltjes_examples():
    F = MonotoneStepFunction(0.0, ((0.25, 1.0), (0.75, 2.0)), 1.0)
    assert stieltjes_integral(lambda t: 1.0, F) == F.value(1.0) - F.value(0.0) == 3.0
    assert stieltjes_integral(lambda t: 0.0, F) == 0.0
    # quadratic variation of the indicator: one unit jump at 1/2, f'' = 2 there
    ind = make_named_path("indicator_half")
    qv = MonotoneStepFunction(0.0, ((0.5, 1.0),), 1.0)
    sq = square_fn()
    assert stieltjes_integral(lambda t: sq.f_second(ind.left_limit(t)), qv) == 2.0


@given(st.lists(st.tuples(st.integers(min_value=1, max_value=63),
                          st.floats(min_value=0, max_value=2, allow_nan=False)),
                min_size=1, max_size=8, unique_by=lambda p: p[0]))
def test_stieltjes_linear_and_additive(incs):
    jumps = tuple((t / 64.0, v) for t, v in sorted(incs))
    F = MonotoneStepFunction(0.0, jumps, 1.0)
    g1 = lambda t: 2.0 * t
    g2 = lambda t: 1.0 - t
    lhs = stieltjes_integral(lambda t: g1(t) + 3.0 * g2(t), F)
    rhs = stieltjes_integral(g1, F) + 3.0 * stieltjes_integral(g2, F)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    k = len(jumps) // 2
    Fa = MonotoneStepFunction(0.0, jumps[:k], 1.0)
    Fb = MonotoneStepFunction(0.0, jumps[k:], 1.0)
    assert stieltjes_integral(g1, F) == pytest.approx(
        stieltjes_integral(g1, Fa) + stieltjes_integral(g1, Fb), abs=1e-12)


# ---------------------------------------------------------------------------
# the residual of the identity
# ---------------------------------------------------------------------------


def test_residual_affine_exact(demo_paths):
    f = affine_fn(2.5, -1.0)
    for name, path in demo_paths.items():
        part = make_dyadic(path.T, 6)
        assert abs(formula_residual(path, part, f, 0.25)) <= 1e-12, name


def test_residual_square_indicator_example():
    assert formula_residual(make_named_path("indicator_half"), PI_HALF,
                            square_fn(), 0.5) == 0.0


def test_residual_square_aligned_walk():
    walk = make_random_walk(2 ** 10, 1.0, seed=31)
    h = math.sqrt(1.0 / 2 ** 10)
    part = make_dyadic(1.0, 10)
    assert abs(formula_residual(walk, part, square_fn(), h / 2)) <= 1e-12


def test_residual_matches_taylor_remainder_oracle():
    # eps above the step size: the compensator is empty and the residual is
    # exactly the summed third-order defects of the steps
    for k in (8, 10):
        walk = make_random_walk(2 ** k, 1.0, seed=41 + k)
        h = math.sqrt(1.0 / 2 ** k)
        part = make_dyadic(1.0, k)
        for f in (cube_fn(), exp_fn()):
            res = formula_residual(walk, part, f, 2 * h)
            oracle = taylor_remainder_oracle(walk, f)
            assert res == pytest.approx(oracle, abs=1e-12)


def test_residual_vanishes_with_full_compensator():
    # eps below the step size: the compensator absorbs every step exactly
    walk = make_random_walk(2 ** 9, 1.0, seed=77)
    h = math.sqrt(1.0 / 2 ** 9)
    part = make_dyadic(1.0, 9)
    for f in (square_fn(), cube_fn(), exp_fn(), affine_fn(1.0)):
        assert abs(formula_residual(walk, part, f, h / 2)) <= 1e-12


def test_residual_decreases_with_steps():
    vals = []
    for k in (10, 12, 14):
        walk = make_random_walk(2 ** k, 1.0, seed=5)
        part = make_dyadic(1.0, k)
        h = math.sqrt(1.0 / 2 ** k)
        vals.append(abs(formula_residual(walk, part, cube_fn(), 2 * h)))
    assert vals[2] < vals[0]


# ---------------------------------------------------------------------------
# corollary pipeline
# ---------------------------------------------------------------------------


def test_empirical_qv_total_mass():
    walk = make_random_walk(2 ** 8, 1.0, seed=13)
    part = make_dyadic(1.0, 8)
    F = empirical_quadratic_variation(walk, part)
    target = math.fsum(r.size ** 2 for r in walk.jumps(1e-12))
    assert F.value(1.0) == pytest.approx(target, abs=1e-12)
    assert F.initial == 0.0


def test_corollary_gap_random_walk():
    walk = make_random_walk(2 ** 12, 1.0, seed=3)
    part = make_dyadic(1.0, 12)
    out = corollary_gap(walk, part, square_fn())
    assert out["gap"] <= 1e-9
    assert out["weighted_sum"] == pytest.approx(2.0, abs=1e-12)  # 2 * sum of squared steps


def test_corollary_consistency_on_weighted_limit():
    # on a walk the weighted sums have already converged once the partition
    # refines the steps, and they agree with the Stieltjes integral
    walk = make_random_walk(2 ** 10, 1.0, seed=8)
    part = make_dyadic(1.0, 10)
    w = weighted_f2_sum(walk, part, cube_fn().f_second)
    F = empirical_quadratic_variation(walk, part)
    s = stieltjes_integral(lambda t: cube_fn().f_second(walk.left_limit(t)), F)
    assert w == pytest.approx(s, abs=1e-10)
