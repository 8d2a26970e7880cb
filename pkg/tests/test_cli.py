"""Command-line behavior: reports, formats, exit codes, caps."""

import json

import pytest

from parityset import read_pset, reconstruct, parse_poly
from parityset.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_factor_quintic(capsys):
    rep = run_json(capsys, "factor", "--poly", "1+z+z^3+z^4+z^5")
    assert set(rep) == {"tool_version", "format_version", "config", "results"}
    res = rep["results"]
    assert res["q"] == 31 and res["r"] == 5 and res["exponent"] == "1/4"
    assert res["factors"][0]["order"] == 31
    assert rep["config"]["command"] == "factor"


def test_factor_q1(capsys):
    rep = run_json(capsys, "factor", "--poly", "1+z")
    assert rep["results"]["q"] == 1


def test_factor_seventh(capsys):
    rep = run_json(capsys, "factor", "--poly", "1+z^7")
    assert rep["results"]["q"] == 7
    assert len(rep["results"]["factors"]) == 3


def test_factor_hex_input(capsys):
    rep = run_json(capsys, "factor", "--poly", "0xb")
    assert rep["results"]["poly"] == "1+z+z^3"


def test_factor_bad_poly(capsys):
    code, _out, err = run(capsys, "factor", "--poly", "1+w")
    assert code == 2 and "error" in err


def test_factor_missing_poly(capsys):
    code, _out, err = run(capsys, "factor")
    assert code == 2 and "requires --poly" in err


def test_analyze_single_q(capsys):
    rep = run_json(capsys, "analyze", "--poly", "1+z+z^3")
    assert rep["results"][0]["q"] == 7
    assert rep["results"][0]["coherent"] == [3, 5, 6]


def test_analyze_sweep(capsys):
    rep = run_json(capsys, "analyze", "--qmax", "15")
    assert [r["q"] for r in rep["results"]] == [3, 5, 7, 9, 11, 13, 15]


def test_reconstruct_json(capsys):
    rep = run_json(capsys, "reconstruct", "--poly", "1+z", "--bound", "1000")
    res = rep["results"]
    assert res["count"] == 10
    assert res["members_head"] == [1, 2, 4, 8, 16, 32, 64, 128, 256, 512]


def test_reconstruct_bin_roundtrip(capsys, tmp_path):
    out = tmp_path / "cubic.pset"
    code, _o, err = run(
        capsys, "reconstruct", "--poly", "1+z+z^3", "--bound", "2000",
        "--format", "bin", "--out", str(out),
    )
    assert code == 0, err
    a = read_pset(out)
    assert a == reconstruct(parse_poly("1+z+z^3"), 2000)
    assert len(a) == 541


def test_reconstruct_bin_needs_out(capsys):
    code, _o, err = run(capsys, "reconstruct", "--poly", "1+z", "--format", "bin")
    assert code == 2 and "--out" in err


def test_count_csv(capsys):
    code, out, err = run(capsys, "count", "--poly", "1+z", "--bound", "1024")
    assert code == 0, err
    lines = out.strip().split("\n")
    assert lines[0] == "x,A,V,V2x,lower_bound,ratio"
    import math

    for line in lines[1:]:
        x, a = line.split(",")[:2]
        assert int(a) == math.floor(math.log2(int(x))) + 1


def test_count_json(capsys):
    rep = run_json(capsys, "count", "--poly", "1+z+z^3", "--bound", "5000",
                   "--format", "json")
    assert rep["results"]["q"] == 7
    assert rep["results"]["exponent"] == "3/4"
    rows = rep["results"]["rows"]
    assert rows[0]["x"] == 100
    assert all(r["A"] <= r["V2x"] for r in rows)


def test_verify_qsweep_passes(capsys):
    rep = run_json(capsys, "verify", "--qmax", "101")
    res = rep["results"]
    assert set(res) == {"lemma1", "lemma3_trichotomy", "coherent_max"}
    assert all(v["pass"] for v in res.values())
    assert res["lemma1"]["moduli_checked"] == 50


def test_verify_poly_suites(capsys):
    rep = run_json(capsys, "verify", "--poly", "1+z+z^3", "--bound", "20000",
                   "--kmax", "4")
    res = rep["results"]
    assert set(res) == {
        "periodicity", "moebius", "bad_coprime", "divisibility",
        "v_bound", "lower_bound",
    }
    assert all(v["pass"] for v in res.values())
    assert res["periodicity"]["minimality_probe"]["1"] > 0


def test_verify_selected_suite(capsys):
    rep = run_json(capsys, "verify", "--suites", "subadditivity", "--bound", "20000")
    assert list(rep["results"]) == ["subadditivity"]
    assert rep["results"]["subadditivity"]["pass"]


def test_verify_no_suites_errors(capsys):
    code, _o, err = run(capsys, "verify")
    assert code == 2 and "no suites" in err


def test_verify_unknown_suite_errors(capsys):
    code, _o, err = run(capsys, "verify", "--suites", "nonsense")
    assert code == 2 and "unknown" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    # every suite verifies a theorem, so a real failure is unreachable
    # from the command line; plant one to pin the exit-code contract
    import parityset.cli as climod
    from parityset.reconstruct import PeriodicityViolation

    planted = [PeriodicityViolation("period", 0, 1, 3, 1, 0)]
    monkeypatch.setattr(climod, "verify_periodicity", lambda *a, **k: planted)
    code, out, _err = run(capsys, "verify", "--poly", "1+z+z^3",
                          "--bound", "5000", "--suites", "periodicity")
    assert code == 1
    assert not json.loads(out)["results"]["periodicity"]["pass"]


def test_caps_enforced(capsys):
    code, _o, err = run(capsys, "reconstruct", "--poly", "1+z",
                        "--bound", "20000001")
    assert code == 2 and "--unsafe-caps" in err
    code, out, _err = run(
        capsys, "reconstruct", "--poly", "1+z", "--bound", "20000001",
        "--unsafe-caps",
    )
    assert code == 0
    assert json.loads(out)["results"]["count"] == 25
    code, _o, err = run(capsys, "verify", "--qmax", "2001")
    assert code == 2
    code, _o, err = run(capsys, "verify", "--poly", "1+z", "--bound", "100",
                        "--kmax", "9")
    assert code == 2


def test_qmax_must_be_odd(capsys):
    code, _o, err = run(capsys, "analyze", "--qmax", "10")
    assert code == 2 and "odd" in err


def test_out_file(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out, _err = run(capsys, "factor", "--poly", "1+z+z^3", "--out", str(path))
    assert code == 0 and out == ""
    rep = json.loads(path.read_text())
    assert rep["results"]["q"] == 7


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
