"""Batch experiment runner.

Every demonstration is a subcommand writing CSV tables, a JSON summary and a
PNG figure into --out (which must exist).  With --assert each subcommand
turns its numerical verdicts into the exit code: 0 all pass, 2 any fail;
malformed configuration exits 1.

Subcommands: l-alpha, count, zigzag-qv, p-alternation, q-jump,
nonrepresentation, formula-check, corollary-check, assumptions,
leb-partition.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import ito_formula as itf
from . import partitions as parts
from . import paths as pth
from . import report
from . import zigzag_lab as lab
from .sums import qv_profile, riemann_f1_sum, weighted_f2_sum

_DEFAULT_SEED = 20240801


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve 2 for verdicts
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x != ""]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def _out_dir(args) -> str | None:
    if args.out is None:
        return None
    if not os.path.isdir(args.out):
        raise ValueError(f"output directory {args.out!r} does not exist")
    return args.out


def _emit(args, name: str, header, rows, summary: dict, figure=None):
    out = _out_dir(args)
    if out is None:
        return
    report.write_csv(os.path.join(out, f"{name}.csv"), header, rows)
    report.write_json(os.path.join(out, f"{name}.json"), summary)
    if figure is not None and not args.no_plot:
        figure(os.path.join(out, f"{name}.png"))


def _verdict(checks: list[tuple[str, bool, str]], do_assert: bool) -> int:
    for name, ok, detail in checks:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    if do_assert and not all(ok for _, ok, _ in checks):
        return 2
    return 0


def _parse_path(text: str, seed: int) -> pth.CadlagPath:
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return pth.path_from_spec(json.load(fh))
    if text.startswith("{"):
        return pth.path_from_spec(json.loads(text))
    if text.startswith("random_walk:"):
        steps = int(text.split(":", 1)[1])
        return pth.make_random_walk(steps, 1.0, seed)
    return pth.make_named_path(text)


def _parse_partition(text: str, path: pth.CadlagPath) -> parts.Partition:
    kind, _, rest = text.partition(":")
    if kind == "fixed":
        return parts.Partition(tuple(_floats(rest)))
    if kind == "dyadic":
        return parts.make_dyadic(path.T, int(rest))
    if kind == "uniform":
        return parts.make_uniform(path.T, int(rest))
    if kind == "lebesgue":
        vals = _floats(rest)
        c = vals[0]
        r = vals[1] if len(vals) > 1 else 0.0
        return parts.lebesgue_partition(path, c, r)
    if kind == "rho":
        n, alpha = rest.split(",")
        return parts.make_rho(int(n), float(alpha))
    raise ValueError(f"unknown partition spec {text!r} "
                     "(use fixed:..., dyadic:k, uniform:k, lebesgue:c[,r], rho:n,alpha)")


def _parse_f(text: str) -> itf.TestFunction:
    if text == "square":
        return itf.square_fn()
    if text == "cube":
        return itf.cube_fn()
    if text == "exp":
        return itf.exp_fn()
    if text.startswith("affine:"):
        vals = _floats(text.split(":", 1)[1])
        return itf.affine_fn(vals[0], vals[1] if len(vals) > 1 else 0.0)
    raise ValueError(f"unknown test function {text!r} (square, cube, exp, affine:a[,b])")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_l_alpha(args) -> int:
    alphas = _floats(args.alpha) if args.alpha else [0.0, 0.5]
    results = [lab.l_alpha_series(a, args.terms) for a in alphas]
    rows = [(r.alpha, r.terms_used, r.series_value, r.oracle_value, r.tail_bound)
            for r in results]
    for r in results:
        print(f"alpha={r.alpha}: series={r.series_value!r} oracle={r.oracle_value!r} "
              f"tail_bound={r.tail_bound:.3e}")
    summary = {"results": [r.__dict__ for r in results],
               "closed_forms": {"0": lab.L_ZERO, "0.5": lab.L_HALF, "1": lab.L_ONE}}

    def figure(path):
        grid = [i / 40 for i in range(40)]
        vals = [lab.l_alpha_oracle(a, 20000) for a in grid]
        report.curve_figure(grid, vals, path, "crossing-count limit vs grid shift",
                            "alpha", "L(alpha)",
                            markers={"pi^2/3": (0.0, lab.L_ZERO),
                                     "pi^2-8": (0.5, lab.L_HALF)})

    _emit(args, "l_alpha", ("alpha", "terms", "series_value", "oracle_value", "tail_bound"),
          rows, summary, figure)

    checks = [(f"series-vs-oracle alpha={r.alpha}",
               abs(r.series_value - r.oracle_value) <= r.tail_bound,
               f"gap={abs(r.series_value - r.oracle_value):.3e} bound={r.tail_bound:.3e}")
              for r in results]
    targets = {0.0: lab.L_ZERO, 0.5: lab.L_HALF}
    for r in results:
        if r.alpha in targets:
            gap = abs(r.series_value - targets[r.alpha])
            checks.append((f"closed-form alpha={r.alpha}", gap <= 1e-8, f"gap={gap:.3e}"))
    return _verdict(checks, args.do_assert)


def cmd_count(args) -> int:
    n = args.n or 10000
    alphas = _floats(args.alpha) if args.alpha else [0.0, 0.25, 0.5]
    rows = []
    checks = []
    for a in alphas:
        formula = lab.count_formula(n, a)
        buckets = lab.bucket_counts(n, a)
        bucket_total = 2 * sum(l * cnt for l, cnt in buckets)
        comp = lab.count_comparison(n, a)
        rows.append((n, a, formula, bucket_total, comp.geometric_count, comp.boundary_offset,
                     lab.empirical_l(n, a)))
        print(f"n={n} alpha={a}: formula={formula} buckets={bucket_total} "
              f"geometric={comp.geometric_count} offset={comp.boundary_offset} "
              f"empirical={formula / n!r}")
        checks.append((f"bucket-identity alpha={a}", bucket_total == formula,
                       f"{bucket_total} == {formula}"))
        checks.append((f"boundary-offset alpha={a}", comp.boundary_offset == (1 if a == 0 else 2),
                       f"offset={comp.boundary_offset}"))
    summary = {"n": n, "rows": rows}

    def figure(path):
        series = {}
        for a in alphas:
            buckets = lab.bucket_counts(n, a)
            series[f"alpha={a}"] = [(l, cnt) for l, cnt in buckets if cnt > 0][:60]
        report.convergence_figure(series, path,
                                  f"crossing-depth bucket sizes, n={n}", xlabel="l")

    _emit(args, "count",
          ("n", "alpha", "formula", "bucket_total", "geometric", "offset", "empirical_l"),
          rows, summary, figure)
    return _verdict(checks, args.do_assert)


def cmd_zigzag_qv(args) -> int:
    alphas = _floats(args.alpha) if args.alpha else [0.0, 0.5]
    n_grid = _ints(args.n) if args.n else [10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6]
    t_grid = _floats(args.t) if args.t else [0.5, 0.9, 1.0]
    rows, checks = [], []
    summaries = {}
    series = {}
    for a in alphas:
        rep = lab.zigzag_qv_experiment(a, n_grid, t_grid)
        rows.extend(rep.rows)
        summaries[str(a)] = rep.as_dict()
        limit = lab.l_alpha_oracle(a)
        for t in t_grid:
            pts = [(r[2], r[4]) for r in rep.rows if r[3] == t]
            series[f"alpha={a}, t={t}"] = pts
            final_n, final_v = pts[-1]
            if t < 1.0:
                for nn, vv in pts:
                    if nn >= 10 ** 4:
                        checks.append((f"qv(alpha={a}, t={t}, n={nn}) <= 0.02", vv <= 0.02,
                                       f"value={vv!r}"))
            else:
                checks.append((f"qv(alpha={a}, t=1, n={final_n}) near limit",
                               abs(final_v - limit) <= 0.05,
                               f"value={final_v!r} limit={limit!r}"))
        print(f"alpha={a}: final values {summaries[str(a)]['summary']['final_values']}")

    def figure(path):
        refs = {f"L({a})": lab.l_alpha_oracle(a) for a in alphas}
        report.convergence_figure(series, path, "stopped squared-increment sums of z", refs)

    _emit(args, "zigzag_qv", ("experiment", "alpha", "n", "t", "value", "diag"),
          rows, summaries, figure)
    return _verdict(checks, args.do_assert)


def _parity_grid(nmax: int) -> list[int]:
    bases = sorted({max(4, nmax // 5), max(6, nmax // 2), max(8, nmax)})
    grid = []
    for b in bases:
        e = b - (b % 2)
        grid.extend([e, e + 1])
    return sorted(set(grid))


def cmd_p_alternation(args) -> int:
    nmax = args.nmax or 10 ** 5
    n_grid = _ints(args.n) if args.n else _parity_grid(nmax)
    rep = lab.p_alternation_experiment(n_grid)
    s = rep.summary
    print(json.dumps(s, indent=2, sort_keys=True))

    def figure(path):
        pts1 = [(r[2], r[4]) for r in rep.rows if r[0] == "p_stopped" and r[3] == 1.0]
        pts2 = [(r[2], r[4]) for r in rep.rows if r[0] == "p_stopped" and r[3] == 2.0]
        series = {
            "t=1 (odd n)": [p for p in pts1 if p[0] % 2 == 1],
            "t=1 (even n)": [p for p in pts1 if p[0] % 2 == 0],
            "t=2": pts2,
        }
        report.convergence_figure(series, path, "alternating stopped sums of p",
                                  {"L(0)+4": lab.L_ZERO + 4,
                                   "L(1/2)+4": lab.L_HALF + 4,
                                   "L(0)+L(1/2)+4": lab.L_ZERO + lab.L_HALF + 4})

    _emit(args, "p_alternation", ("experiment", "alpha", "n", "t", "value", "diag"),
          rep.rows, rep.as_dict(), figure)

    t2_vals = [r[4] for r in rep.rows if r[0] == "p_stopped" and r[3] == 2.0]
    t2_odd = [r[4] for r in rep.rows if r[0] == "p_stopped" and r[3] == 2.0 and r[2] % 2 == 1]
    t2_even = [r[4] for r in rep.rows if r[0] == "p_stopped" and r[3] == 2.0 and r[2] % 2 == 0]
    checks = [
        ("odd limit at t=1", abs(s["odd_limit_t1"] - (lab.L_ZERO + 4)) <= 0.05,
         f"{s['odd_limit_t1']!r} vs {lab.L_ZERO + 4!r}"),
        ("even limit at t=1", abs(s["even_limit_t1"] - (lab.L_HALF + 4)) <= 0.05,
         f"{s['even_limit_t1']!r} vs {lab.L_HALF + 4!r}"),
        ("split detected at t=1", s["split_detected_t1"], str(s["split_detected_t1"])),
        ("odd limit at t=2", abs(t2_odd[-1] - (lab.L_ZERO + lab.L_HALF + 4)) <= 0.05,
         f"{t2_odd[-1]!r}"),
        ("even limit at t=2", abs(t2_even[-1] - (lab.L_ZERO + lab.L_HALF + 4)) <= 0.05,
         f"{t2_even[-1]!r}"),
        ("weighted sum splits too", s["weighted_split_detected"],
         str(s["weighted_split_detected"])),
    ]
    return _verdict(checks, args.do_assert)


def cmd_q_jump(args) -> int:
    nmax = args.nmax or 10 ** 5
    n_grid = _ints(args.n) if args.n else sorted({max(4, nmax // 25), max(5, nmax // 5),
                                                  max(6, nmax // 2), max(7, nmax)})
    delta = args.delta
    rep = lab.q_experiment(n_grid, delta)
    print(json.dumps(rep.summary, indent=2, sort_keys=True))

    def figure(path):
        pts = [(r[2], r[4]) for r in rep.rows if r[0] == "q_jump_across_1"]
        report.convergence_figure({"[q]_{1+d} - [q]_1": pts}, path,
                                  "right jump of q's quadratic variation",
                                  {"L(0)": lab.L_ZERO})

    _emit(args, "q_jump", ("experiment", "alpha", "n", "t", "value", "diag"),
          rep.rows, rep.as_dict(), figure)
    gap = abs(rep.summary["jump_estimate"] - lab.L_ZERO)
    checks = [("jump across 1 near L(0)", gap <= 0.05,
               f"estimate={rep.summary['jump_estimate']!r} gap={gap:.4f}")]
    return _verdict(checks, args.do_assert)


def cmd_nonrepresentation(args) -> int:
    ms = _ints(args.m) if args.m else [1, 2, 4]
    nmax = args.nmax or 10 ** 5
    n_grid = _ints(args.n) if args.n else sorted({max(4, nmax // 25), max(5, nmax // 5),
                                                  max(6, nmax // 2), max(7, nmax)})
    rep = lab.nonrepresentation_experiment(ms, n_grid)
    print(json.dumps(rep.summary, indent=2, sort_keys=True))

    def figure(path):
        series = {f"m={m}": [(r[2], r[4]) for r in rep.rows
                             if r[0] == f"nonrepresentation_m{m}"] for m in ms}
        report.convergence_figure(series, path,
                                  "weighted sums of q against the tent profiles",
                                  {"L(0)": lab.L_ZERO})

    _emit(args, "nonrepresentation", ("experiment", "alpha", "n", "t", "value", "diag"),
          rep.rows, rep.as_dict(), figure)
    checks = []
    for m in ms:
        v = rep.summary["limits_by_m"][str(m)]
        checks.append((f"limit for m={m} at least L(0) - 0.05", v >= lab.L_ZERO - 0.05,
                       f"value={v!r}"))
    checks.append(("left limits avoid (0, 1]", rep.summary["left_limits_outside_(0,1]"],
                   f"max limiting weight {rep.summary['max_limiting_weight_on_path']!r}"))
    return _verdict(checks, args.do_assert)


def cmd_formula_check(args) -> int:
    path = _parse_path(args.path, args.seed)
    partition = _parse_partition(args.partition, path)
    f = _parse_f(args.f)
    eps = args.eps
    residual = itf.formula_residual(path, partition, f, eps)
    pieces = {
        "delta_f": f.f(path.value(partition.T)) - f.f(path.value(0.0)),
        "riemann": riemann_f1_sum(path, partition, f.f_prime),
        "weighted_half": 0.5 * weighted_f2_sum(path, partition, f.f_second),
        "jump_term": itf.jump_term(path, f, eps),
        "residual": residual,
    }
    print(json.dumps(pieces, indent=2, sort_keys=True))
    rows = [(args.path, args.partition, partition.size, f.name, eps, residual)]

    def figure(out):
        profile = qv_profile(path, partition)
        report.curve_figure([t for t, _ in profile], [v for _, v in profile], out,
                            "stopped squared-increment profile", "t", "sum")

    _emit(args, "formula_check", ("path", "family", "n", "f", "epsilon", "residual"),
          rows, pieces, figure)
    checks = [("residual within tolerance", abs(residual) <= args.tol,
               f"|{residual!r}| <= {args.tol!r}")]
    return _verdict(checks, args.do_assert)


def cmd_corollary_check(args) -> int:
    path = pth.make_random_walk(args.steps, 1.0, args.seed)
    level = args.n or max(1, round(math.log2(args.steps)))
    partition = parts.make_dyadic(1.0, level)
    f = _parse_f(args.f)
    result = itf.corollary_gap(path, partition, f)
    print(json.dumps(result, indent=2, sort_keys=True))
    profile = qv_profile(path, partition)
    rows = [("qv_profile", partition.size, t, v) for t, v in profile]

    def figure(out):
        F = itf.empirical_quadratic_variation(path, partition)
        report.step_function_figure(F.jumps, F.initial, F.domain_end, out,
                                    "empirical quadratic variation of the walk")

    _emit(args, "corollary_check", ("experiment", "n", "t", "value"), rows,
          {"steps": args.steps, "dyadic_level": level, "seed": args.seed, **result}, figure)
    checks = [("weighted sum matches Stieltjes integral", result["gap"] <= 1e-6,
               f"gap={result['gap']!r}")]
    return _verdict(checks, args.do_assert)


def cmd_assumptions(args) -> int:
    path = _parse_path(args.path, args.seed)
    if args.partition == "dyadic":
        seq = parts.dyadic_sequence(path.T)
        n_grid = _ints(args.n) if args.n else [4, 6, 8, 10]
    elif args.partition.startswith("constant:"):
        fixed = parts.Partition(tuple(_floats(args.partition.split(":", 1)[1])))
        seq = parts.constant_sequence(fixed)
        n_grid = _ints(args.n) if args.n else [1, 2, 3, 4]
    else:
        raise ValueError("assumptions supports --partition dyadic or constant:b0,b1,...")
    eps_grid = _floats(args.eps) if args.eps else [0.5, 0.1, 0.01]
    s_list = _floats(args.s) if args.s else [path.T / 2, path.T]
    a1 = parts.check_a1(path, seq, eps_grid, n_grid)
    a2 = parts.check_a2(path, seq, s_list, n_grid)
    print(f"A1 verdict: {a1.verdict}  (tol={a1.tol:.3e})")
    print(f"A2 verdicts: { {str(k): v for k, v in a2.verdicts.items()} }")
    rows = a1.rows(seq.family, seq.param) + a2.rows(seq.family, seq.param)
    summary = {
        "a1_verdict": a1.verdict,
        "a2_verdicts": {str(k): v for k, v in a2.verdicts.items()},
        "tol": a1.tol,
    }

    def figure(out):
        series = {f"A1 eps={eps}": [(n, a1.table[(eps, n)]) for n in a1.n_grid]
                  for eps in a1.keys}
        for s in a2.keys:
            series[f"A2 s={s}"] = [(n, a2.table[(s, n)]) for n in a2.n_grid]
        report.convergence_figure(series, out, "assumption diagnostics")

    _emit(args, "assumptions", ("family", "param", "n", "epsilon", "value"),
          rows, summary, figure)
    checks = [("A1 empirical verdict", a1.verdict, f"tol={a1.tol:.2e}"),
              ("A2 empirical verdict", a2.verdict, str(summary["a2_verdicts"]))]
    return _verdict(checks, args.do_assert)


def cmd_leb_partition(args) -> int:
    path = _parse_path(args.path, args.seed)
    partition = parts.lebesgue_partition(path, args.c, args.r)
    print(json.dumps(list(partition.breakpoints)))
    rows = [(i, b) for i, b in enumerate(partition.breakpoints)]

    def figure(out):
        ts = [i * path.T / 2000 for i in range(2001)]
        sample = [(t, path.value(t)) for t in ts]
        report.partition_figure(sample, partition.breakpoints, out,
                                f"level-crossing partition (c={args.c}, r={args.r})")

    out = _out_dir(args)
    if out is not None:
        report.write_json(os.path.join(out, "leb_partition.json"),
                          list(partition.breakpoints))
        report.write_csv(os.path.join(out, "leb_partition.csv"), ("index", "breakpoint"), rows)
        if not args.no_plot:
            figure(os.path.join(out, "leb_partition.png"))
    vals = [path.value(b) for b in partition.breakpoints]
    interior = [abs(v1 - v0) for v0, v1 in zip(vals[1:-1], vals[2:-1])]
    ok = all(abs(d - args.c) <= 1e-12 * max(1.0, args.c) for d in interior)
    checks = [("interior increments equal the grid step", ok,
               f"{len(interior)} interior increments")]
    return _verdict(checks, args.do_assert)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sp) -> None:
    sp.add_argument("--out", default=None, help="existing directory for CSV/JSON/PNG output")
    sp.add_argument("--no-plot", action="store_true", help="skip figure rendering")
    sp.add_argument("--assert", dest="do_assert", action="store_true",
                    help="turn numerical verdicts into the exit code")
    sp.add_argument("--seed", type=int, default=_DEFAULT_SEED)


def build_parser() -> _Parser:
    p = _Parser(prog="qvlab", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("l-alpha", help="series value of the crossing-count limit")
    sp.add_argument("--alpha", help="comma list of grid shifts (default 0,0.5)")
    sp.add_argument("--terms", type=int, default=100_000)
    _add_common(sp)
    sp.set_defaults(func=cmd_l_alpha)

    sp = sub.add_parser("count", help="floor-sum crossing count and its cross-checks")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--alpha", help="comma list (default 0,0.25,0.5)")
    _add_common(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("zigzag-qv", help="stopped sums of z over crossing partitions")
    sp.add_argument("--alpha", help="comma list (default 0,0.5)")
    sp.add_argument("--n", help="comma list of n values (default decades 1e2..1e6)")
    sp.add_argument("--t", help="comma list of times (default 0.5,0.9,1)")
    _add_common(sp)
    sp.set_defaults(func=cmd_zigzag_qv)

    sp = sub.add_parser("p-alternation", help="parity-alternating sums of p")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--n", help="explicit comma list of n values (both parities)")
    _add_common(sp)
    sp.set_defaults(func=cmd_p_alternation)

    sp = sub.add_parser("q-jump", help="right discontinuity of q's quadratic variation")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--n", help="explicit comma list of n values")
    sp.add_argument("--delta", type=float, default=0.5)
    _add_common(sp)
    sp.set_defaults(func=cmd_q_jump)

    sp = sub.add_parser("nonrepresentation", help="weighted sums of q vs the vanishing scan")
    sp.add_argument("--m", help="comma list of profile indices (default 1,2,4)")
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--n", help="explicit comma list of n values")
    _add_common(sp)
    sp.set_defaults(func=cmd_nonrepresentation)

    sp = sub.add_parser("formula-check", help="residual of the change-of-variable identity")
    sp.add_argument("--path", required=True,
                    help="z|p|q|indicator_half, random_walk:N, inline JSON, or @file.json")
    sp.add_argument("--partition", required=True,
                    help="fixed:b0,b1,... | dyadic:k | uniform:k | lebesgue:c[,r] | rho:n,alpha")
    sp.add_argument("--f", default="square", help="square|cube|exp|affine:a[,b]")
    sp.add_argument("--eps", type=float, default=0.5)
    sp.add_argument("--tol", type=float, default=1e-9)
    _add_common(sp)
    sp.set_defaults(func=cmd_formula_check)

    sp = sub.add_parser("corollary-check", help="weighted sum vs Stieltjes integral on a walk")
    sp.add_argument("--steps", type=int, default=2 ** 14)
    sp.add_argument("--n", type=int, default=None, help="dyadic level (default log2 steps)")
    sp.add_argument("--f", default="square")
    _add_common(sp)
    sp.set_defaults(func=cmd_corollary_check)

    sp = sub.add_parser("assumptions", help="empirical partition-sequence assumption tables")
    sp.add_argument("--path", required=True)
    sp.add_argument("--partition", default="dyadic", help="dyadic | constant:b0,b1,...")
    sp.add_argument("--eps", help="comma list of jump cutoffs")
    sp.add_argument("--n", help="comma list of sequence indices")
    sp.add_argument("--s", help="comma list of probe times")
    _add_common(sp)
    sp.set_defaults(func=cmd_assumptions)

    sp = sub.add_parser("leb-partition", help="level-crossing partition of a continuous path")
    sp.add_argument("--path", required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--r", type=float, default=0.0)
    _add_common(sp)
    sp.set_defaults(func=cmd_leb_partition)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _out_dir(args)  # reject a missing output directory before computing
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
