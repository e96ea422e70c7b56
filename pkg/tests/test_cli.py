"""CLI surface: exit codes, JSON output, and argument conveniences."""

import json

import pytest

from traceforms import cli
from traceforms.suites import CaseFailure, SuiteResult

F5 = '{"base": {"kind": "GF", "p": 5}}'
F5X = '{"base": {"kind": "GF", "p": 5}, "laurent_vars": ["X"]}'
Q = '{"base": {"kind": "Q"}}'


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--json")
    return rc, json.loads(out), err


class TestGroupCommands:
    def test_analyze_corpus_name(self, capsys):
        rc, out, _ = run(capsys, "group", "analyze", "D8")
        assert rc == 0
        assert "order" in out and "strength" in out

    def test_analyze_json_payload(self, capsys):
        rc, payload, _ = run_json(capsys, "group", "analyze", "metacyclic-256")
        assert rc == 0
        assert payload["order"] == 256
        assert payload["strength"] == 4
        assert payload["max_iwasawa_level"] == 4

    def test_analyze_inline_spec(self, capsys):
        rc, payload, _ = run_json(
            capsys, "group", "analyze", '{"kind": "dihedral", "order": 16}'
        )
        assert rc == 0 and payload["order"] == 16

    def test_analyze_spec_from_file(self, capsys, tmp_path):
        spec = tmp_path / "g.json"
        spec.write_text('{"kind": "quaternion", "order": 8}')
        rc, payload, _ = run_json(capsys, "group", "analyze", str(spec))
        assert rc == 0 and payload["order"] == 8

    def test_analyze_bad_spec_is_input_error(self, capsys):
        rc, _, err = run(capsys, "group", "analyze", '{"kind": "nope"}')
        assert rc == 2 and "input error" in err
        rc, _, err = run(capsys, "group", "analyze", "{broken json")
        assert rc == 2

    def test_analyze_cap_exceeded_is_input_error(self, capsys):
        rc, _, err = run(capsys, "group", "analyze", '{"kind": "cyclic", "n": 8192}')
        assert rc == 2 and "input error" in err

    def test_classify_both_routes(self, capsys):
        rc, payload, _ = run_json(capsys, "group", "classify", "M16", "-m", "2")
        assert rc == 0
        assert payload["subgroup_condition"] is True
        assert payload["structure_condition"] is True
        rc, payload, _ = run_json(capsys, "group", "classify", "M16", "-m", "3")
        assert rc == 0  # a negative answer is still a successful computation
        assert payload["subgroup_condition"] is False

    def test_classify_rejects_bad_level(self, capsys):
        rc, _, err = run(capsys, "group", "classify", "D8", "-m", "1")
        assert rc == 2

    def test_corpus_check_small(self, capsys):
        rc, out, _ = run(
            capsys, "group", "corpus-check", "--max-order", "32", "--m", "2"
        )
        assert rc == 0
        assert "all routes agree" in out


class TestFormCommands:
    def test_classify_rational_form(self, capsys):
        form = '{"field": %s, "entries": [1, 2, 1, 1]}' % Q
        rc, payload, _ = run_json(capsys, "form", "classify", form)
        assert rc == 0
        assert payload["dim"] == 4 and payload["aniso_dim"] == 4

    def test_classify_malformed(self, capsys):
        rc, _, _ = run(capsys, "form", "classify", '{"entries": [1]}')
        assert rc == 2
        rc, _, _ = run(capsys, "form", "classify", "not json")
        assert rc == 2

    def test_trace_poly_quartic(self, capsys):
        rc, payload, _ = run_json(
            capsys, "form", "trace-poly", Q, "[2, 0, -4, 0, 1]"
        )
        assert rc == 0
        assert payload["witt"]["aniso_dim"] == 4
        assert payload["gram"]["entries"][0][0] == 4

    def test_trace_poly_inseparable(self, capsys):
        rc, _, err = run(capsys, "form", "trace-poly", Q, "[1, 2, 1]")
        assert rc == 2 and "insep" in err

    def test_trace_multiquad(self, capsys):
        rc, payload, _ = run_json(capsys, "form", "trace-multiquad", F5, "[2]")
        assert rc == 0
        assert payload["witt"]["dim"] == 2
        assert payload["diagonal"]["entries"] == [2, 4]

    def test_trace_kummer_variable_name_convenience(self, capsys):
        rc, payload, _ = run_json(capsys, "form", "trace-kummer", F5X, "4", '"X"')
        assert rc == 0
        assert payload["dim"] == 16
        assert payload["witt"]["aniso_dim"] == 4
        assert payload["matches_predicted"] is True

    def test_trace_kummer_level_mismatch(self, capsys):
        f17 = '{"base": {"kind": "GF", "p": 17}, "laurent_vars": ["X"]}'
        rc, _, _ = run(capsys, "form", "trace-kummer", f17, "4", '"X"')
        assert rc == 2

    def test_pfister_conventions(self, capsys):
        rc, payload, _ = run_json(capsys, "form", "pfister", F5, "[2, 3]")
        assert rc == 0 and len(payload["form"]["entries"]) == 4
        assert payload["witt"]["is_hyperbolic"] is True
        rc, payload, _ = run_json(
            capsys, "form", "pfister", F5, "[2]", "--convention", "plus", "--scale", "3"
        )
        assert rc == 0 and len(payload["form"]["entries"]) == 2

    def test_pfister_zero_slot(self, capsys):
        rc, _, _ = run(capsys, "form", "pfister", F5, "[0]")
        assert rc == 2


class TestPredictAndObstruction:
    def test_predict_forced(self, capsys):
        rc, payload, _ = run_json(capsys, "predict", "D8", '{"m": 2}')
        assert rc == 0
        assert payload["hyperbolic_forced"] is True
        assert payload["rule"] == "root-of-unity-exponent"

    def test_predict_shape_when_not_forced(self, capsys):
        rc, payload, _ = run_json(capsys, "predict", "M16", '{"m": 2}')
        assert rc == 0
        assert payload["hyperbolic_forced"] is False
        assert payload["shape"] == {"scale": 16, "pfister_rank": 2}

    def test_predict_declared_simple(self, capsys):
        rc, payload, _ = run_json(
            capsys, "predict", "PSL(2,7)", '{"m": 2}', "--declared-simple"
        )
        assert rc == 0 and payload["hyperbolic_forced"] is True

    def test_predict_bad_profile(self, capsys):
        rc, _, _ = run(capsys, "predict", "D8", "{}")
        assert rc == 2

    def test_obstruction_unsolvable_still_exit_zero(self, capsys):
        rc, payload, _ = run_json(capsys, "obstruction", F5X, '[2, "X"]', "D8")
        assert rc == 0
        assert payload["obstructed"] is True
        assert "unsolvable" in payload["verdict"]

    def test_obstruction_clear(self, capsys):
        rc, payload, _ = run_json(capsys, "obstruction", F5, "[2, 3]", "D8")
        assert rc == 0 and payload["obstructed"] is False

    def test_obstruction_wrong_slot_count(self, capsys):
        rc, _, _ = run(capsys, "obstruction", F5, "[2]", "D8")
        assert rc == 2


class TestCorpusAndVerify:
    def test_corpus_listing(self, capsys):
        rc, out, _ = run(capsys, "corpus")
        assert rc == 0
        assert "metacyclic-256" in out and "PSL(2,7)" in out

    def test_corpus_json(self, capsys):
        rc, payload, _ = run_json(capsys, "corpus")
        names = [e["name"] for e in payload["entries"]]
        assert rc == 0 and "M16" in names

    def test_verify_single_suite(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "parameter-search")
        assert rc == 0
        assert "VERIFY: ok" in out

    def test_verify_json_payload(self, capsys):
        rc, payload, _ = run_json(capsys, "verify", "--suite", "parameter-search")
        assert rc == 0
        (res,) = payload["results"]
        assert res["ok"] is True and res["cases"] > 0

    def test_verify_unknown_suite(self, capsys):
        rc, _, err = run(capsys, "verify", "--suite", "nope")
        assert rc == 2 and "unknown suite" in err

    def test_verify_failure_maps_to_math_exit(self, capsys, monkeypatch):
        def fake_run_suite(name, seed=0):
            return SuiteResult(
                suite=name,
                cases=1,
                failures=[CaseFailure("case-0", "left", "right")],
                seconds=0.0,
                seed=seed,
            )

        monkeypatch.setattr(cli, "run_suite", fake_run_suite)
        rc, out, _ = run(capsys, "verify", "--suite", "parameter-search")
        assert rc == 1
        assert "VERIFY: FAILED" in out and "case-0" in out


class TestUsageErrors:
    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["frobnicate"])
        assert exc.value.code == 2
