import json
from pathlib import Path

import pytest

from inlogic.cli import main

DATA = Path(__file__).parent / "data"


def call(capsys, *argv):
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_negation(capsys):
    code, out, err = call(capsys, "eval", "!p", "-i", DATA / "prop_example.json")
    assert code == 0 and err == ""
    assert out.strip() == "t=[0.7,0.7] i=[0.6,0.6] f=[0.5,0.5]"


def test_eval_true(capsys):
    code, out, _ = call(capsys, "eval", "true")
    assert code == 0 and out.strip() == "t=[1,1] i=[1,1] f=[0,0]"


def test_eval_first_order(capsys):
    code, out, _ = call(capsys, "eval", "forall x. p(x)", "-i", DATA / "fo_example.json", "--format", "json")
    assert code == 0
    v = json.loads(out)
    assert v["t"] == [0.5, 0.5] and v["f"] == [0.7, 0.7]
    assert v["i"][0] == pytest.approx(0.2)


def test_eval_free_variable_assignment(capsys):
    code, out, _ = call(capsys, "eval", "p(x)", "-i", DATA / "fo_example.json", "-a", "x=2")
    assert code == 0 and out.strip() == "t=[1,1] i=[0.2,0.2] f=[0,0]"


def test_eval_csv(capsys):
    code, out, _ = call(capsys, "--format", "csv", "eval", "p & q", "-i", DATA / "prop_example.json")
    assert code == 0
    assert out.splitlines() == ["t_lo,t_hi,i_lo,i_hi,f_lo,f_hi", "0.5,0.5,0.4,0.4,0.7,0.7"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["eval", "p &"], 1),
        (["eval", "p"], 2),
        (["eval", "p(x)", "-i", DATA / "fo_example.json"], 2),
        (["eval", "forall x. q(x)", "-i", DATA / "fo_example.json"], 2),
        (["eval", "forall x. p(x, x)", "-i", DATA / "fo_example.json"], 2),
        (["eval", "p", "-i", DATA / "missing.json"], 4),
        (["check", "valid", "p(x)"], 2),
        (["check", "equiv", "p"], 64),
        (["frobnicate"], 64),
        (["check", "taut", "p", "--samples", "0"], 64),
        (["eval", "p", "--assign", "x=1"], 64),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, out, err = call(capsys, *argv)
    assert got == code
    assert out == "" and err


def test_check_excluded_middle_fails(capsys):
    code, out, _ = call(capsys, "check", "taut", "p | !p")
    assert code == 3 and "counterexample" in out.lower()


def test_check_double_negation(capsys):
    code, _, _ = call(capsys, "check", "equiv", "!!p", "p")
    assert code == 0


def test_check_is_reproducible(capsys):
    argv = ("check", "taut", "p -> (q -> p)", "--samples", "100000", "--seed", "7", "--format", "json")
    first = call(capsys, *argv)
    second = call(capsys, *argv)
    assert first[0] == 0 and first == second
    assert json.loads(first[1])["samples_tried"] > 100000


def test_flags_before_or_after_subcommand(capsys):
    a = call(capsys, "--seed", "3", "--samples", "50", "--format", "json", "check", "taut", "p -> q")
    b = call(capsys, "check", "taut", "p -> q", "--seed", "3", "--samples", "50", "--format", "json")
    assert a == b and a[0] == 3


def test_check_valid_and_sat(capsys):
    assert call(capsys, "check", "valid", "forall x. p(x) -> exists x. p(x)", "--samples", "100")[0] == 0
    assert call(capsys, "check", "valid", "exists x. p(x) -> forall x. p(x)", "--samples", "100")[0] == 3
    assert call(capsys, "check", "sat", "p(a)", "--samples", "20", "--domains", "1")[0] == 0
    assert call(capsys, "check", "sat", "false", "--samples", "20")[0] == 3


def test_moore_arithmetic_flag(capsys):
    assert call(capsys, "check", "taut", "p -> p", "--samples", "100")[0] == 0
    assert call(capsys, "check", "taut", "p -> p", "--samples", "100", "--arithmetic", "moore")[0] == 3


def test_inls_symmetric_peak(capsys):
    code, out, _ = call(capsys, "inls", "run", DATA / "symmetric_system.json", "--input", "5")
    assert code == 0 and abs(float(out) - 5.0) <= 0.05


def test_inls_no_activation(capsys):
    code, out, err = call(capsys, "inls", "run", DATA / "symmetric_system.json", "--input", "0.5")
    assert code == 5 and out == "" and "no activated output" in err


@pytest.mark.parametrize(
    "extra",
    [["--input", "11"], ["--input", "abc"], ["--input", "1", "2"], ["--weights", "1,1,0,0", "--input", "3"]],
)
def test_inls_bad_inputs(capsys, extra):
    assert call(capsys, "inls", "run", DATA / "reference_system.json", *extra)[0] == 4


def test_inls_bad_config(capsys, tmp_path):
    bad = tmp_path / "s.json"
    bad.write_text('{"inputs": []}')
    assert call(capsys, "inls", "run", bad, "--input", "1")[0] == 4


def test_inls_sweep_row_count(capsys):
    code, out, _ = call(capsys, "inls", "run", DATA / "reference_system.json", "--sweep", "0:10:101")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "x,output" and len(lines) == 102
    assert lines[-1].startswith("10,")


def test_inls_sweep_subcommand_to_file(capsys, tmp_path):
    dest = tmp_path / "sweep.csv"
    code, out, err = call(capsys, "inls", "sweep", DATA / "symmetric_system.json", "0:10:11", "-o", dest)
    lines = dest.read_text().splitlines()
    assert code == 0 and out == "" and len(lines) == 12
    assert lines[1] == "0,nan" and "nan" in err


def test_inls_trace_file(capsys, tmp_path):
    dest = tmp_path / "trace.csv"
    code, out, _ = call(capsys, "inls", "run", DATA / "reference_system.json", "--input", "3.7", "--trace", dest)
    assert code == 0
    header = dest.read_text().splitlines()[0].split(",")
    assert header[:2] == ["y", "rule0_t_lo"] and header[-1] == "membership"


def test_inls_weights_flag_matches_truth_centroid(capsys):
    from inlogic.inls import deneutrosophify_centroid, load_system, trace

    code, out, _ = call(capsys, "inls", "run", DATA / "reference_system.json", "--input", "3.7", "--weights", "1,0,0,0")
    tr = trace(load_system(DATA / "reference_system.json"), 3.7)
    expected = deneutrosophify_centroid(tr.reduced[0], tr.aggregated.grid)
    assert code == 0 and float(out) == pytest.approx(expected, abs=1e-11)


def test_inls_grid_flag_and_json(capsys):
    code, out, _ = call(capsys, "--format", "json", "inls", "run", DATA / "reference_system.json", "--input", "3.7", "--grid", "401")
    assert code == 0 and json.loads(out)["output"] == pytest.approx(4.608237, abs=1e-6)


def test_inls_set_valued_input(capsys, tmp_path):
    spec = tmp_path / "x.json"
    spec.write_text(json.dumps({"t": {"trapezoid": [4, 5, 5, 6]}}))
    code, out, _ = call(capsys, "inls", "run", DATA / "reference_system.json", "--input", f"@{spec}")
    assert code == 0 and 0 <= float(out) <= 10
