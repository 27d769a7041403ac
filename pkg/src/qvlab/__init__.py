"""qvlab: quadratic variation along partition sequences, level-crossing
partitions, and the pathwise change-of-variable identity for cadlag paths."""

from .paths import (
    CadlagPath,
    JumpRecord,
    PiecewiseConstantPath,
    PiecewiseLinearPath,
    ZigzagPath,
    constant_path,
    make_named_path,
    make_random_walk,
    path_from_spec,
)
from .partitions import (
    AssumptionCheck,
    Partition,
    PartitionSequence,
    check_a1,
    check_a2,
    constant_sequence,
    dyadic_sequence,
    lebesgue_partition,
    make_dyadic,
    make_rho,
    make_sigma,
    make_tau,
    make_uniform,
    osc_over_partition,
    rho_sequence,
    uniform_sequence,
)
from .sums import (
    LimitDiagnostic,
    estimate_limit,
    qv_cdf_sum,
    qv_profile,
    qv_stopped_sum,
    riemann_f1_sum,
    weighted_f2_sum,
)
from .ito_formula import (
    MonotoneStepFunction,
    SecondDerivativeProfile,
    TestFunction,
    affine_fn,
    corollary_gap,
    cube_fn,
    empirical_quadratic_variation,
    exp_fn,
    formula_residual,
    jump_term,
    jump_term_ladder,
    make_fm,
    make_smooth_cut,
    rc_modification,
    square_fn,
    stieltjes_integral,
    taylor_remainder_oracle,
)
from .zigzag_lab import (
    L_HALF,
    L_ONE,
    L_ZERO,
    CountResult,
    ExperimentReport,
    LAlphaResult,
    bucket_counts,
    count_comparison,
    count_formula,
    count_formula_exact,
    empirical_l,
    l_alpha_oracle,
    l_alpha_series,
    nonrepresentation_experiment,
    p_alternation_experiment,
    q_experiment,
    sigma_stopped_sum,
    sigma_weighted_sum,
    tau_stopped_sum_q,
    tau_weighted_sum_q,
    zigzag_qv_experiment,
    zigzag_qv_stopped,
)

__version__ = "0.1.0"
