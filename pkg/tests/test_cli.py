import json

import pytest

from radsup.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv, "--json")
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# check

def test_check_triangle_exits_one_with_cycle(capsys):
    code, doc = invoke_json(capsys, "check", "1 2; 2 3; 1 3")
    assert code == 1
    assert doc["status"] == "notRadicalSupport"
    assert doc["schema"] == "radsup.check/1"
    evidence = doc["payload"]["evidence"]
    assert evidence["kind"] == "cycle"
    assert sorted(evidence["labels"]) == [1, 2, 3]


def test_check_disjoint_exits_zero(capsys):
    code, doc = invoke_json(capsys, "check", "1; 2; 3")
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["payload"]["evidence"]["kind"] == "forest"


def test_check_path_exits_zero(capsys):
    code, _ = invoke(capsys, "check", "1 2; 2 3; 3 4")
    assert code == 0


def test_check_parse_error_exits_two(capsys):
    code, out = invoke(capsys, "check", "1 2; ; 3")
    assert code == 2
    assert "position 2" in out


def test_check_reads_json_format(capsys):
    code, _ = invoke(capsys, "check", '{"n": 3, "sets": [[1, 2], [2, 3]]}')
    assert code == 0


def test_check_file_input(tmp_path, capsys):
    path = tmp_path / "support.txt"
    path.write_text("1 2; 1 2\n")
    code, doc = invoke_json(capsys, "check", "--file", str(path))
    assert code == 1
    assert doc["payload"]["evidence"]["kind"] == "cycle"


# ---------------------------------------------------------------------------
# witness

def test_witness_triangle(capsys):
    code, doc = invoke_json(capsys, "witness", "1 2; 2 3; 1 3", "--verify-fields", "F2,Fp:32003")
    assert code == 0
    witness = doc["payload"]["witness"]
    assert len(witness["generators"]) == 3
    assert witness["verification"]["witness_outside_ideal"]
    assert witness["verification"]["square_inside_ideal"]
    assert len(doc["payload"]["re_verifications"]) == 2


def test_witness_pair(capsys):
    code, doc = invoke_json(capsys, "witness", "1 2; 1 2")
    assert code == 0
    assert len(doc["payload"]["witness"]["generators"]) == 2


def test_witness_on_radical_support_exits_one(capsys):
    code, doc = invoke_json(capsys, "witness", "1 2; 2 3; 3 4")
    assert code == 1
    assert doc["status"] == "error"
    assert "no witness exists" in doc["payload"]["message"]


def test_witness_field_flag(capsys):
    code, doc = invoke_json(capsys, "witness", "1 2; 1 2", "--field", "Fp:7")
    assert code == 0
    assert doc["payload"]["witness"]["ring"]["field"] == "Fp(7)"


# ---------------------------------------------------------------------------
# regseq

def test_regseq_with_explicit_m(capsys):
    code, doc = invoke_json(capsys, "regseq", "1 2; 1 3", "--m", "2,1,1")
    assert code == 0
    assert doc["payload"]["certificate"]["monomials"] == [
        "x[1,1]*x[1,2]",
        "x[2,1]*x[1,3]",
    ]


def test_regseq_counting_violation_names_label(capsys):
    code, out = invoke(capsys, "regseq", "1; 1", "--m", "1")
    assert code == 2
    assert "label 1" in out


def test_regseq_defaults(capsys):
    code, doc = invoke_json(capsys, "regseq", "1; 1")
    assert code == 0
    assert doc["payload"]["certificate"]["ring"]["m"] == [2]


# ---------------------------------------------------------------------------
# cs-cert

def test_cs_cert_pair(capsys):
    code, doc = invoke_json(capsys, "cs-cert", "1 2; 2 3")
    assert code == 0
    cert = doc["payload"]["certificate"]
    assert cert["generator_count"] == 4
    assert cert["identity_holds"] and cert["valid"]


def test_cs_cert_singleton(capsys):
    code, doc = invoke_json(capsys, "cs-cert", "1")
    assert code == 0
    assert doc["payload"]["certificate"]["generator_count"] == 1


def test_cs_cert_triangle_exits_one(capsys):
    code, doc = invoke_json(capsys, "cs-cert", "1 2; 2 3; 1 3")
    assert code == 1
    assert doc["status"] == "notRadicalSupport"
    assert doc["payload"]["evidence"]["kind"] == "cycle"


# ---------------------------------------------------------------------------
# selftest

def test_selftest_small_bounds_pass(capsys):
    code, doc = invoke_json(
        capsys, "selftest", "--max-s", "2", "--max-n", "2", "--seed", "0", "--trials", "2"
    )
    assert code == 0
    assert doc["status"] == "ok"
    assert all(suite["passed"] for suite in doc["payload"]["suites"])
    assert doc["payload"]["seed"] == 0


def test_selftest_logs_generated_seed(capsys):
    code, out = invoke(
        capsys, "selftest", "--max-s", "1", "--max-n", "1", "--trials", "1"
    )
    assert code == 0
    assert "using seed" in out


def test_selftest_rejects_bad_seed_type(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run(["selftest", "--seed", "not-a-number"])
    assert excinfo.value.code == 2


def test_json_output_is_deterministic(capsys):
    code1, out1 = invoke(capsys, "check", "1 2; 2 3; 1 3", "--json")
    code2, out2 = invoke(capsys, "check", "1 2; 2 3; 1 3", "--json")
    assert (code1, out1) == (code2, out2)


def test_witness_certificate_is_byte_deterministic(capsys):
    argv = ("witness", "1 2 4; 2 3; 1 3", "--verify-fields", "F2", "--json")
    _, out1 = invoke(capsys, *argv)
    _, out2 = invoke(capsys, *argv)
    assert out1 == out2


def test_selftest_deterministic_given_seed(capsys):
    argv = ["selftest", "--max-s", "2", "--max-n", "2", "--seed", "7", "--trials", "2", "--json"]
    code1 = run(list(argv))
    out1 = capsys.readouterr().out
    code2 = run(list(argv))
    out2 = capsys.readouterr().out
    doc1, doc2 = json.loads(out1), json.loads(out2)
    for doc in (doc1, doc2):
        for suite in doc["payload"]["suites"]:
            suite.pop("seconds")
    assert (code1, doc1) == (code2, doc2)


def test_missing_input_is_usage_error(capsys):
    code, out = invoke(capsys, "check")
    assert code == 2
    assert "provide a support" in out


def test_selftest_indeterminate_exit_code(capsys, monkeypatch):
    from radsup import cli
    from radsup.selftest import SuiteResult

    def fake_run_all(**kwargs):
        return [
            SuiteResult("solid", True, 1, 0.0),
            SuiteResult("flaky", False, 1, 0.0, ["seed x"], indeterminate=True),
        ]

    monkeypatch.setattr(cli.selftest, "run_all", fake_run_all)
    code, doc = invoke_json(capsys, "selftest", "--seed", "0")
    assert code == 3
    assert doc["status"] == "indeterminate"


def test_selftest_hard_failure_exit_code(capsys, monkeypatch):
    from radsup import cli
    from radsup.selftest import SuiteResult

    def fake_run_all(**kwargs):
        return [SuiteResult("broken", False, 1, 0.0, ["counterexample"])]

    monkeypatch.setattr(cli.selftest, "run_all", fake_run_all)
    code, doc = invoke_json(capsys, "selftest", "--seed", "0")
    assert code == 1
    assert doc["status"] == "error"
