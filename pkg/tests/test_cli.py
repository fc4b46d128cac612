import json

import pytest

from ptspectra import serialize
from ptspectra.cli import main, parse_args, parse_complex
from ptspectra.errors import PtViolation, UsageError
from ptspectra.potentials import FamilyKind as K


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text, value", [
    ("2", 2), ("-3", -3), ("+1.5", 1.5), ("2i", 2j), ("-0.5i", -0.5j), ("i", 1j),
    ("-i", -1j), ("1+i", 1 + 1j), ("-0.5+2i", -0.5 + 2j), ("3-4.5i", 3 - 4.5j),
    ("1e-3+2e1i", 0.001 + 20j), (".5", 0.5)])
def test_complex_grammar(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "2j", "abc", "1+2", "i2", "1++2i", "2ii"])
def test_complex_grammar_rejects(text):
    with pytest.raises(UsageError):
        parse_complex(text)


def test_parse_examples():
    cfg = parse_args(["spectrum", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3",
                      "--eps", "0", "--nmax", "5", "--format", "json"])
    assert cfg.spec.kind is K.PI_ISINH and cfg.spec.alpha == 2j and cfg.spec.beta == -3
    assert cfg.n_max == 5 and cfg.fmt == "json"
    cfg = parse_args(["spectrum", "--family", "pii-tanh", "--s", "-0.5+2i", "--lambda", "1"])
    assert cfg.spec.s == -0.5 + 2j and cfg.spec.lam == 1.0
    with pytest.raises(PtViolation):
        parse_args(["spectrum", "--family", "pi-isinh", "--alpha", "1+i", "--beta", "0"])


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "pi-isinh", "--alpha", "2i"],            # missing beta
    ["spectrum", "--family", "morse", "--alpha", "1", "--beta", "1"],
    ["spectrum", "--family", "pii-cot", "--s", "1", "--lambda", "1", "--alpha", "1"],
    ["spectrum", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3", "--bogus"],
    ["spectrum", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3", "--nmax", "-1"],
    ["eval", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3", "--count", "2"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_64(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 64 and out == "" and err


def test_pt_violation_exit_2(capsys):
    code, _, err = run(capsys, "classify", "--family", "pi-isinh", "--alpha", "1+i",
                       "--beta", "-3")
    assert code == 2 and "real or purely imaginary" in err


def test_singular_shift_exit_2(capsys):
    code, _, _ = run(capsys, "spectrum", "--family", "pi-cosh", "--alpha", "1i", "--beta", "2",
                     "--eps", "0")
    assert code == 2
    code, _, _ = run(capsys, "spectrum", "--family", "pi-cosh", "--alpha", "1i", "--beta", "2",
                     "--eps", "0", "--allow-singular")
    assert code == 0


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 12
    assert lines[1].split()[0] == "pi-isinh" and lines[-1].split()[0] == "li-osc"
    code, out, _ = run(capsys, "list", "--format", "json")
    doc = json.loads(out)
    assert doc["spec"] is None and len(doc["result"]) == 11


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--family", "pi-isinh", "--alpha", "2i",
                       "--beta", "-3", "--eps", "0")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == 1
    assert doc["result"]["breaking_possible"] is True
    assert doc["result"]["ahmed_check"]["holds"] is True


def test_spectrum_json_complex_encoding(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "pi-isinh", "--alpha", "2i",
                       "--beta", "-3", "--nmax", "5")
    doc = json.loads(out)
    es = sorted((lv["energy"]["re"], lv["energy"]["im"]) for lv in doc["result"]["levels"])
    assert es == [(pytest.approx(0, abs=1e-15), -2.0), (pytest.approx(0, abs=1e-15), 2.0)]
    assert doc["spec"]["alpha"] == {"re": 0.0, "im": 2.0}


def test_eval_csv(capsys, tmp_path):
    target = tmp_path / "v.csv"
    code, out, _ = run(capsys, "eval", "--family", "li-osc", "--omega", "2", "--alpha", "0.5",
                       "--eps", "0.5", "--xmin", "-1", "--xmax", "1", "--count", "3",
                       "--output", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "x,re_v,im_v"
    assert lines[2] == "0.0,-0.25,0.0"
    assert len(lines) == 4


@pytest.mark.parametrize("argv", [
    ["spectrum", "--family", "li-osc", "--omega", "2", "--alpha", "1i", "--eps", "1"],
    ["classify", "--family", "pii-cot", "--s", "-0.5+2i", "--lambda", "1", "--eps", "0.4"],
    ["eval", "--family", "pi-sin", "--alpha", "0.3", "--beta", "0.8i", "--eps", "0.4",
     "--count", "11", "--format", "json"],
    ["verify", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3", "--nmax", "2"],
])
def test_round_trip_and_determinism(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    doc = json.loads(first)
    spec = serialize.spec_from_dict(doc["spec"])
    cfg = parse_args(argv)
    assert spec == cfg.spec
    cmd, res = argv[0], doc["result"]
    if cmd == "spectrum":
        again = serialize.spectrum_result(spec, res["n_max"])
    elif cmd == "classify":
        again = serialize.classify_result(spec)
    elif cmd == "eval":
        again = serialize.eval_result(spec, serialize.grid_from_dict(res["grid"]))
    else:
        again = serialize.verify_result(spec, 2, serialize.grid_from_dict(res["grid"]),
                                        res["tol"])
    assert json.loads(json.dumps(again)) == res


def test_verify_pass_and_fail(capsys):
    base = ["verify", "--family", "pii-tanh", "--s", "2", "--lambda", "1", "--nmax", "3"]
    code, out, _ = run(capsys, *base)
    doc = json.loads(out)
    assert code == 0 and doc["result"]["passed"]
    assert len(doc["result"]["levels"]) == 2
    code, out, _ = run(capsys, *base, "--tol", "1e-12")
    assert code == 3 and not json.loads(out)["result"]["passed"]


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--family", "pi-cos", "--alpha", "0.6i",
                       "--beta", "0.6i", "--eps", "0.4", "--nmax", "1", "--format", "table")
    assert code == 0 and out.splitlines()[0].split() == [
        "n", "orbit", "energy", "residual", "passed"]


def test_solve_small_grid(capsys):
    argv = ["solve", "--family", "pi-isinh", "--alpha", "2i", "--beta", "-3",
            "--levels", "4", "--count", "601"]
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    assert code == 0 and doc["result"]["passed"]
    assert len(doc["result"]["matches"]) == 2
    code, out, _ = run(capsys, *argv, "--tol", "1e-9")
    assert code == 3


def test_solve_trigonometric_fails_cleanly(capsys):
    code, _, err = run(capsys, "solve", "--family", "pii-cot", "--s", "-0.5+2i",
                       "--lambda", "1", "--eps", "0.4", "--count", "101")
    assert code == 3 and "UnsupportedFamily" not in err and "trigonometric" in err
