import json
import os

import pytest

from qvlab.cli import main


def run(args):
    return main(args)


def test_l_alpha_outputs(tmp_path, capsys):
    code = run(["l-alpha", "--alpha", "0,0.5", "--terms", "50000",
                "--out", str(tmp_path), "--assert"])
    assert code == 0
    for ext in ("csv", "json", "png"):
        assert (tmp_path / f"l_alpha.{ext}").exists()
    header = (tmp_path / "l_alpha.csv").read_text().splitlines()[0]
    assert header == "alpha,terms,series_value,oracle_value,tail_bound"


def test_csv_determinism(tmp_path):
    d1 = tmp_path / "a"
    d2 = tmp_path / "b"
    d1.mkdir()
    d2.mkdir()
    for d in (d1, d2):
        assert run(["count", "--n", "2000", "--alpha", "0,0.5", "--out", str(d),
                    "--no-plot"]) == 0
    assert (d1 / "count.csv").read_bytes() == (d2 / "count.csv").read_bytes()
    assert (d1 / "count.json").read_bytes() == (d2 / "count.json").read_bytes()


def test_zigzag_qv_subcommand(tmp_path):
    code = run(["zigzag-qv", "--alpha", "0", "--n", "100,1000,10000,100000",
                "--t", "0.5,1", "--out", str(tmp_path), "--assert"])
    assert code == 0
    lines = (tmp_path / "zigzag_qv.csv").read_text().splitlines()
    assert lines[0] == "experiment,alpha,n,t,value,diag"
    assert len(lines) == 9
    assert (tmp_path / "zigzag_qv.png").exists()


def test_p_alternation_subcommand(tmp_path, capsys):
    code = run(["p-alternation", "--n", "2000,2001,6000,6001,20000,20001",
                "--out", str(tmp_path)])
    assert code == 0
    out = json.loads((tmp_path / "p_alternation.json").read_text())
    assert out["summary"]["split_detected_t1"] in (True, False)
    assert (tmp_path / "p_alternation.csv").exists()


def test_q_jump_subcommand(tmp_path):
    code = run(["q-jump", "--n", "500,1000,3000,10000", "--out", str(tmp_path),
                "--no-plot"])
    assert code == 0
    assert not (tmp_path / "q_jump.png").exists()
    assert (tmp_path / "q_jump.csv").exists()


def test_nonrepresentation_subcommand(tmp_path):
    code = run(["nonrepresentation", "--m", "1,2", "--n", "500,1000,3000,10000",
                "--out", str(tmp_path), "--no-plot"])
    assert code == 0
    data = json.loads((tmp_path / "nonrepresentation.json").read_text())
    assert data["summary"]["left_limits_outside_(0,1]"] is True


def test_formula_check_examples(capsys):
    code = run(["formula-check", "--path", "indicator_half",
                "--partition", "fixed:0,0.5,1", "--f", "square", "--eps", "0.5",
                "--assert"])
    assert code == 0
    out = capsys.readouterr().out
    assert '"residual": 0.0' in out


def test_formula_check_walk_json_path(tmp_path):
    spec = {"type": "random_walk", "T": 1.0, "steps": 256, "seed": 9}
    code = run(["formula-check", "--path", json.dumps(spec),
                "--partition", "dyadic:8", "--f", "cube", "--eps", "0.01",
                "--tol", "1e-9", "--assert", "--out", str(tmp_path)])
    assert code == 0
    header = (tmp_path / "formula_check.csv").read_text().splitlines()[0]
    assert header == "path,family,n,f,epsilon,residual"


def test_formula_check_assert_failure():
    # a coarse partition of a continuous path leaves a visible residual
    code = run(["formula-check", "--path", "z", "--partition", "dyadic:3",
                "--f", "cube", "--eps", "0.5", "--assert"])
    assert code == 2


def test_corollary_check(tmp_path):
    code = run(["corollary-check", "--steps", "4096", "--f", "square",
                "--out", str(tmp_path), "--assert"])
    assert code == 0
    assert (tmp_path / "corollary_check.csv").read_text().splitlines()[0] == \
        "experiment,n,t,value"


def test_assumptions_subcommand(tmp_path):
    code = run(["assumptions", "--path", "indicator_half",
                "--partition", "constant:0,0.5,1", "--eps", "0.5", "--s", "0.5",
                "--out", str(tmp_path), "--assert"])
    assert code == 0
    header = (tmp_path / "assumptions.csv").read_text().splitlines()[0]
    assert header == "family,param,n,epsilon,value"


def test_leb_partition_subcommand(tmp_path, capsys):
    spec = '{"type":"piecewise_linear","T":1,"knots":[[0,0],[1,1]]}'
    code = run(["leb-partition", "--path", spec, "--c", "0.25",
                "--out", str(tmp_path), "--assert"])
    assert code == 0
    data = json.loads((tmp_path / "leb_partition.json").read_text())
    assert data == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_validation_errors():
    assert run(["l-alpha", "--out", "/does/not/exist"]) == 1
    assert run(["formula-check", "--path", "bogus", "--partition", "dyadic:2"]) == 1
    assert run(["formula-check", "--path", "z", "--partition", "mystery:1"]) == 1
    with pytest.raises(SystemExit) as exc:
        run(["no-such-command"])
    assert exc.value.code == 1


def test_seed_changes_walk_output(tmp_path):
    d1 = tmp_path / "s1"
    d2 = tmp_path / "s2"
    d1.mkdir()
    d2.mkdir()
    spec = "random_walk:128"
    run(["formula-check", "--path", spec, "--partition", "dyadic:7", "--f", "exp",
         "--eps", "1.0", "--seed", "1", "--out", str(d1)])
    run(["formula-check", "--path", spec, "--partition", "dyadic:7", "--f", "exp",
         "--eps", "1.0", "--seed", "2", "--out", str(d2)])
    assert (d1 / "formula_check.json").read_bytes() != (d2 / "formula_check.json").read_bytes()
