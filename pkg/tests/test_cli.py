import subprocess
import sys

import pytest

from golden_cases import GOLDEN_DIR
from mwpsas import formats, generate_instance
from mwpsas.cli import main


def report(text):
    out = {}
    for line in text.splitlines():
        key, _, value = line.partition(" ")
        out[key] = value
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, report(captured.out), captured.err


def test_solve(capsys, tmp_path):
    out_part = tmp_path / "p.part"
    code, rep, _ = run(
        capsys, "solve", "--instance", GOLDEN_DIR / "weighted3.mwp", "--strategy", "whole",
        "--exact", "--partition-out", out_part,
    )
    assert code == 0
    assert rep["f_value"] == "13"
    assert (rep["d_value"], rep["lower_bound"], rep["deviation_bound"]) == ("19", "10", "9")
    assert rep["exact_optimum"] == "12"
    assert rep["strategy"] == "whole"
    assert float(rep["elapsed"]) >= 0
    assert out_part.read_text() == (GOLDEN_DIR / "weighted3_whole.part").read_text()


def test_solve_group_m1_on_general_instance(capsys):
    code, _, err = run(capsys, "solve", "--instance", GOLDEN_DIR / "weighted3.mwp", "--strategy", "group-m1")
    assert code == 1
    assert "VariantError" in err


def test_reduce_clique_then_exact(capsys, tmp_path):
    prefix = tmp_path / "out"
    code, rep, _ = run(capsys, "reduce", "clique", "--graph", GOLDEN_DIR / "k3.gr", "--k", 2, "--out", prefix)
    assert code == 0
    assert rep["target"] == "8"
    assert (tmp_path / "out.mwp").read_text() == (GOLDEN_DIR / "clique_k3_k2.mwp").read_text()
    assert (tmp_path / "out.dec").read_text() == (GOLDEN_DIR / "clique_k3_k2.dec").read_text()
    code, rep, _ = run(capsys, "exact", "--instance", tmp_path / "out.mwp")
    assert code == 0
    assert int(rep["optimum"]) <= 8
    assert rep["decision"] == "yes"
    assert rep["timed_out"] == "false"


@pytest.mark.parametrize("kind", ["part3-m1", "part3-n1"])
def test_reduce_part3(capsys, tmp_path, kind):
    code, rep, _ = run(capsys, "reduce", kind, "--part3", GOLDEN_DIR / "b13_no.p3", "--out", tmp_path / "x")
    assert code == 0
    code, rep, _ = run(capsys, "exact", "--instance", tmp_path / "x.mwp", "--decision", tmp_path / "x.dec")
    assert rep["decision"] == "no"


def test_reduce_bad_k(capsys, tmp_path):
    code, _, err = run(capsys, "reduce", "clique", "--graph", GOLDEN_DIR / "k3.gr", "--k", 3, "--out", tmp_path / "o")
    assert code == 1
    assert "PreconditionError" in err


def test_exact_with_timeout_flag(capsys, tmp_path):
    path = tmp_path / "hard.mwp"
    path.write_text(formats.write_instance(generate_instance(19, 16, 10, 4, 20, density=0.3)))
    code, rep, _ = run(capsys, "exact", "--instance", path, "--time-budget", 0, "--target", 1)
    assert code == 0
    assert rep["timed_out"] == "true"
    assert rep["decision"] == "no"  # below the lower bound, so no search needed


def test_bound(capsys):
    code, rep, _ = run(capsys, "bound", "--instance", GOLDEN_DIR / "weighted3.mwp", "--strategy", "singletons")
    assert code == 0
    assert (rep["d_value"], rep["lower_bound"], rep["deviation_bound"]) == ("21", "10", "11")


def test_gen_matches_golden(capsys, tmp_path):
    code, _, _ = run(capsys, "gen", "--seed", 7, "--n", 6, "--m-set", 3, "--machines", 2,
                     "--variant", "m1", "--out", tmp_path / "g.mwp")
    assert code == 0
    assert (tmp_path / "g.mwp").read_text() == (GOLDEN_DIR / "gen_m1_s7.mwp").read_text()


def test_gen_to_stdout(capsys):
    code = main(["gen", "--seed", "1", "--n", "6", "--m-set", "4", "--machines", "2", "--max-weight", "5"])
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN_DIR / "gen_general_s1.mwp").read_text()


def test_verify(capsys):
    code, rep, _ = run(capsys, "verify", "--instance", GOLDEN_DIR / "weighted3.mwp",
                       "--partition", GOLDEN_DIR / "weighted3_exact.part")
    assert code == 0
    assert rep["f_value"] == "12"
    assert rep["block_count_matches"] == "true"


def test_verify_non_covering(capsys, tmp_path):
    p = tmp_path / "bad.part"
    p.write_text("PARTITION 1\nS 1 1 2\n")
    code, _, err = run(capsys, "verify", "--instance", GOLDEN_DIR / "weighted3.mwp", "--partition", p)
    assert code == 1
    assert "PartitionError" in err


def test_verify_digest_mismatch(capsys):
    code, _, err = run(capsys, "verify", "--instance", GOLDEN_DIR / "tiny.mwp",
                       "--partition", GOLDEN_DIR / "weighted3_exact.part")
    assert code == 1
    assert "DigestMismatchError" in err


def test_lpt(capsys):
    code, rep, _ = run(capsys, "lpt", "--instance", GOLDEN_DIR / "part3_n1_b10.mwp")
    assert code == 0
    assert int(rep["f_value"]) >= 10


def test_lpt_on_non_n1(capsys):
    code, _, err = run(capsys, "lpt", "--instance", GOLDEN_DIR / "weighted3.mwp")
    assert code == 1


def test_missing_file(capsys):
    code, _, err = run(capsys, "bound", "--instance", "/nonexistent/x.mwp")
    assert code == 1


def test_syntax_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.mwp"
    p.write_text("MWPSAS 1\nN x\n")
    code, _, err = run(capsys, "bound", "--instance", p)
    assert code == 1
    assert "line 2" in err


@pytest.mark.parametrize("argv", [[], ["solve"], ["solve", "--instance", "x", "--strategy", "nope"], ["frobnicate"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mwpsas", "bound"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "mwpsas", "bound", "--instance", str(GOLDEN_DIR / "tiny.mwp")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "deviation_bound 1" in proc.stdout
