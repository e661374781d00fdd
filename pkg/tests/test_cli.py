"""Command-line interface: exit codes, formats, golden values, truncation cap."""

import json
import math

import pytest

from qelliptic import cli, numutil
from qelliptic.registry import registry


@pytest.fixture(autouse=True)
def pristine_policy(monkeypatch):
    # --max-terms / QELLIPTIC_MAX_TERMS rebind the module-level policy
    monkeypatch.delenv("QELLIPTIC_MAX_TERMS", raising=False)
    saved = numutil.DEFAULT_POLICY
    yield
    numutil.DEFAULT_POLICY = saved


def run_cli(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def test_eval_emits_value_terms_and_tail(capsys):
    rc, out, _ = run_cli(capsys, "eval", "sn", "--q", "0.05", "--u", "0.4")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "value=0.3841811341538738"
    assert lines[1].startswith("terms_used=") and int(lines[1].split("=")[1]) > 0
    assert lines[2].startswith("est_tail=") and float(lines[2].split("=")[1]) < 1e-12


def test_eval_singular_value(capsys):
    rc, out, _ = run_cli(capsys, "eval", "alpha", "--r", "4")
    assert rc == 0
    value = float(out.splitlines()[0].split("=")[1])
    assert abs(value - (6.0 - 4.0 * math.sqrt(2.0))) < 1e-12


def test_eval_lemniscatic_period(capsys):
    # K at the r = 1 point equals Gamma(1/4)^2 / (4 sqrt(pi))
    rc, out, _ = run_cli(capsys, "eval", "K", "--r", "1")
    assert rc == 0
    assert out.splitlines()[0] == "value=1.854074677301372"


def test_eval_angle_series(capsys):
    rc, out, _ = run_cli(capsys, "eval", "theta-angle", "--q", "0.2", "--x", "0.5")
    assert rc == 0
    value = float(out.splitlines()[0].split("=")[1])
    assert abs(value - 1.186513626335924) < 1e-12


def test_eval_json_format(capsys):
    rc, out, _ = run_cli(capsys, "eval", "R", "--q", "0.05", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert set(doc) == {"fn", "value", "terms_used", "est_tail"}
    assert abs(float(doc["value"]) - 0.5231861892435733) < 1e-12


def test_eval_missing_parameter_is_precondition_error(capsys):
    rc, _, err = run_cli(capsys, "eval", "sn", "--q", "0.05")
    assert rc == 2
    assert "precondition violated" in err


def test_eval_domain_error(capsys):
    rc, _, err = run_cli(capsys, "eval", "alpha", "--r", "-1")
    assert rc == 2
    assert "precondition violated" in err


def test_eval_is_deterministic(capsys):
    first = run_cli(capsys, "eval", "cd", "--q", "0.1", "--u", "0.7")
    second = run_cli(capsys, "eval", "cd", "--q", "0.1", "--u", "0.7")
    assert first == second


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def test_table_default_sweep_ghost_sum(capsys):
    rc, out, _ = run_cli(capsys, "table", "ghost-sum")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert "value=0.04712099285567072" in lines[0]


def test_table_default_sweep_modulus(capsys):
    rc, out, _ = run_cli(capsys, "table", "k", "--format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "r,value,terms_used"
    values = [row.split(",")[1] for row in lines[1:]]
    assert values == [
        "0.7071067811865476",
        "0.4142135623730952",
        "0.2588190451025209",
        "0.1715728752538099",
    ]


def test_table_explicit_sweep(capsys):
    rc, out, _ = run_cli(capsys, "table", "sn", "--u", "0.4",
                         "--sweep", "q=0.05,0.1", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert rows[0]["q"] == "0.05"
    assert rows[0]["value"] == "0.3841811341538738"


def test_table_no_default_sweep(capsys):
    rc, _, err = run_cli(capsys, "table", "sn", "--u", "0.4")
    assert rc == 2
    assert "no default sweep" in err


def test_table_malformed_sweep(capsys):
    rc, _, err = run_cli(capsys, "table", "k", "--sweep", "bogus")
    assert rc == 2
    assert "malformed range" in err


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------


def test_list_enumerates_registry(capsys):
    rc, out, _ = run_cli(capsys, "list")
    assert rc == 0
    assert len(out.splitlines()) == len(registry())


def test_list_json_matches_registry(capsys):
    rc, out, _ = run_cli(capsys, "list", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert [row["id"] for row in rows] == [c.id for c in registry()]
    assert all(row["status"] in ("ACTIVE", "QUARANTINED") for row in rows)


def test_list_glob_filter(capsys):
    rc, out, _ = run_cli(capsys, "list", "--id", "T5", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["id"] == "T5"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_single_case_text(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--id", "EQ7")
    assert rc == 0
    assert "gate=PASS" in out


def test_verify_all_json(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--all", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["gate_passed"] is True
    expected = sum(len(c.samples) for c in registry())
    assert len(doc["records"]) == expected


def test_verify_sample_override(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--id", "A5-158", "--q", "0.3",
                         "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["records"]
    assert all(rec["params"]["q"] == 0.3 for rec in doc["records"])


def test_verify_no_match(capsys):
    rc, _, err = run_cli(capsys, "verify", "--id", "NOPE-*")
    assert rc == 2
    assert "no registry case matches" in err


def test_verify_tol_override_can_fail_gate(capsys):
    rc, _, _ = run_cli(capsys, "verify", "--id", "EQ7", "--tol", "1e-30")
    assert rc == 1


# ---------------------------------------------------------------------------
# truncation cap
# ---------------------------------------------------------------------------


def test_max_terms_flag_caps_series(capsys):
    rc, _, err = run_cli(capsys, "eval", "theta3", "--q", "0.5",
                         "--max-terms", "3")
    assert rc == 1
    assert "evaluation failed" in err and "3 terms" in err


def test_env_cap_honored(capsys, monkeypatch):
    monkeypatch.setenv("QELLIPTIC_MAX_TERMS", "3")
    rc, _, err = run_cli(capsys, "eval", "theta3", "--q", "0.5")
    assert rc == 1
    assert "evaluation failed" in err


def test_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("QELLIPTIC_MAX_TERMS", "3")
    rc, out, _ = run_cli(capsys, "eval", "theta3", "--q", "0.5",
                         "--max-terms", "100000")
    assert rc == 0
    assert out.startswith("value=")


def test_invalid_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("QELLIPTIC_MAX_TERMS", "abc")
    rc, _, err = run_cli(capsys, "eval", "theta3", "--q", "0.5")
    assert rc == 2
    assert "must be an integer" in err


def test_nonpositive_cap(capsys):
    rc, _, err = run_cli(capsys, "eval", "theta3", "--q", "0.5",
                         "--max-terms", "-2")
    assert rc == 2
    assert "must be positive" in err
