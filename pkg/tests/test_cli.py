"""CLI behavior: output shapes, exit codes, --out, and the env default."""

from __future__ import annotations

import json

import pytest

import ringlab.cli as cli
from ringlab.cli import main
from ringlab.verifier import THEOREM_IDS, TheoremReport, Witness


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_human(capsys):
    code, out, err = run(capsys, "classify", "--ring", "Z4", "--delta", "id")
    assert code == 0
    assert err == ""
    assert "ring: Z4" in out
    assert "1abs-delta-primary" in out
    lines = [l for l in out.splitlines() if l.startswith("(")]
    assert len(lines) == 2  # (0) and (2)


def test_classify_json_golden(capsys):
    code, out, err = run(capsys, "classify", "--ring", "Z4", "--delta", "id", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ring"] == "Z4"
    assert payload["delta"] == "id"
    rows = {r["label"]: r for r in payload["rows"]}
    assert set(rows) == {"(0)", "(2)"}
    assert rows["(0)"]["predicates"]["1abs-delta-primary"] is True
    assert rows["(2)"]["predicates"]["1abs-delta-primary"] is True
    assert rows["(2)"]["predicates"]["prime"] is True
    assert rows["(0)"]["predicates"]["prime"] is False
    assert rows["(0)"]["witnesses"]["prime"] == ["2", "2"]
    assert rows["(0)"]["ideal"] == ["0"]


def test_classify_z36_witness(capsys):
    code, out, _ = run(
        capsys, "classify", "--ring", "Z36", "--delta", "plus:(2)", "--json"
    )
    assert code == 0
    rows = {r["label"]: r for r in json.loads(out)["rows"]}
    assert rows["(6)"]["predicates"]["2abs-delta-primary"] is True
    assert rows["(6)"]["predicates"]["1abs-delta-primary"] is False
    assert rows["(6)"]["witnesses"]["1abs-delta-primary"] == ["2", "2", "3"]


def test_classify_parse_error(capsys):
    code, out, err = run(capsys, "classify", "--ring", "Z4x", "--delta", "id")
    assert code == 2
    assert out == ""
    assert "error:" in err
    assert "^" in err  # caret diagnostic


def test_classify_bad_delta(capsys):
    code, _, err = run(capsys, "classify", "--ring", "Z4", "--delta", "prod(id,id)")
    assert code == 2
    assert "error:" in err


def test_check_single_json(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "T-CHAIN", "--max-order", "8", "--json")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2  # report + summary
    report = json.loads(lines[0])
    assert report["theorem_id"] == "T-CHAIN"
    assert report["status"] == "verified"
    summary = json.loads(lines[1])["summary"]
    assert summary["conclusion_failures"] == 0
    assert summary["status"] == "ok"


def test_check_all_human(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "all", "--max-order", "8")
    assert code == 0
    for tid in THEOREM_IDS:
        assert tid in out
    assert "summary:" in out


def test_check_unknown_theorem(capsys):
    code, _, err = run(capsys, "check", "--theorem", "T-NOPE")
    assert code == 2
    assert "unknown theorem id" in err


def test_check_exit_one_on_failure(capsys, monkeypatch):
    bad = TheoremReport(
        theorem_id="T-CHAIN",
        instances_checked=1,
        hypothesis_satisfied=1,
        conclusion_failures=(
            Witness(ring="Z4", ideal=("0",), delta="id", elements=("2", "2", "2")),
        ),
        elapsed=0.0,
        notes=(),
    )
    monkeypatch.setattr(cli, "verify", lambda tid, cat, jobs=None: bad)
    code, out, _ = run(capsys, "check", "--theorem", "T-CHAIN", "--max-order", "8")
    assert code == 1
    assert "refuted" in out
    assert "failure:" in out


def test_check_env_var_default(capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_MAX_ORDER", "8")
    code8, out8, _ = run(capsys, "check", "--theorem", "T-CHAIN", "--json")
    monkeypatch.setenv("RINGLAB_MAX_ORDER", "12")
    code12, out12, _ = run(capsys, "check", "--theorem", "T-CHAIN", "--json")
    assert code8 == code12 == 0
    n8 = json.loads(out8.splitlines()[0])["instances_checked"]
    n12 = json.loads(out12.splitlines()[0])["instances_checked"]
    assert n8 < n12


def test_check_bad_env_var(capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_MAX_ORDER", "pear")
    code, _, err = run(capsys, "check", "--theorem", "T-CHAIN")
    assert code == 2
    assert "RINGLAB_MAX_ORDER" in err


def test_check_jobs_does_not_change_output(capsys):
    _, out1, _ = run(capsys, "check", "--theorem", "T-PROD", "--max-order", "8", "--jobs", "1", "--json")
    _, out4, _ = run(capsys, "check", "--theorem", "T-PROD", "--max-order", "8", "--jobs", "4", "--json")

    def strip(line):
        d = json.loads(line)
        d.pop("elapsed", None)
        return d

    assert [strip(l) for l in out1.strip().splitlines()] == [
        strip(l) for l in out4.strip().splitlines()
    ]


def test_search_json(capsys):
    code, out, _ = run(
        capsys,
        "search",
        "--property",
        "1abs-delta-primary & !delta-primary",
        "--max-order",
        "8",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["query"] == "1abs-delta-primary & !delta-primary"
    assert payload["count"] == len(payload["witnesses"])
    assert payload["count"] > 0
    w = payload["witnesses"][0]
    assert set(w) == {"ring", "ideal", "delta", "elements", "detail"}


def test_search_empty_is_exit_zero(capsys):
    code, out, _ = run(capsys, "search", "--property", "prime & !maximal", "--max-order", "8")
    assert code == 0
    assert "0 match(es)" in out


def test_search_parse_error(capsys):
    code, _, err = run(capsys, "search", "--property", "prime &")
    assert code == 2
    assert "error:" in err


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "check",
        "--theorem",
        "T-CHAIN",
        "--max-order",
        "8",
        "--json",
        "--out",
        str(target),
    )
    assert code == 0
    assert out == ""
    lines = target.read_text().strip().splitlines()
    assert json.loads(lines[0])["theorem_id"] == "T-CHAIN"


def test_usage_error_is_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--ring", "Z4"])  # missing --delta
    assert exc.value.code == 2
