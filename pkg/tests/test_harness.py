"""Registry integrity, runner semantics, quarantine discipline, reports."""

import csv
import importlib
import io
import json
import math

import pytest

from qelliptic.harness import (
    IdentityCase,
    format_complex,
    report_to_csv,
    report_to_json,
    report_to_text,
    run_case,
    run_registry,
)
from qelliptic.numutil import PoleError
from qelliptic.registry import UNREGISTERED, registry


def run_all():
    return run_registry(registry())


# ---------------------------------------------------------------------------
# registry integrity
# ---------------------------------------------------------------------------


def test_registry_size_floor():
    assert len(registry()) >= 80


def test_registry_ids_unique():
    ids = [c.id for c in registry()]
    assert len(ids) == len(set(ids))


def test_registry_cases_well_formed():
    for c in registry():
        assert c.id and c.description
        assert c.status in ("ACTIVE", "QUARANTINED")
        assert c.samples
        assert c.tolerance > 0.0


def test_registry_anchors_resolve():
    # every anchor names an importable attribute of this package
    for c in registry():
        mod_path, _, attr = c.anchor.rpartition(".")
        obj = importlib.import_module("qelliptic")
        for part in c.anchor.split(".")[1:]:
            obj = getattr(obj, part)
        assert callable(obj) or isinstance(obj, property), c.anchor


def test_registry_is_memoized():
    assert registry() is registry()


def test_unregistered_entries_documented():
    # out-of-scope rows carry a slug and a reason, no evaluators
    assert len(UNREGISTERED) >= 1
    for slug, reason in UNREGISTERED:
        assert slug and reason


# ---------------------------------------------------------------------------
# gate and totality
# ---------------------------------------------------------------------------


def test_totality_every_case_runs_once():
    report = run_all()
    assert len(report.results) == len(registry())
    ran = [r.case.id for r in report.results]
    assert ran == [c.id for c in registry()]
    for r in report.results:
        assert len(r.records) == len(r.case.samples)


def test_gate_active_set_passes():
    report = run_all()
    assert report.gate_passed
    for r in report.results:
        if r.case.status == "ACTIVE":
            assert r.passed_all, r.case.id


def test_quarantined_cases_fail_with_measured_residuals():
    report = run_all()
    quarantined = [r for r in report.results if r.case.status == "QUARANTINED"]
    assert quarantined
    for r in quarantined:
        assert r.failed_all, r.case.id
        assert r.worst_rel_residual > r.case.tolerance


def test_counts_partition_results():
    report = run_all()
    counts = report.counts
    assert sum(counts.values()) == len(report.results)
    assert counts["QUARANTINED(auto)"] == 0


def test_determinism_of_numeric_payload():
    # identical config -> identical values and verdicts (timings excluded)
    def payload(report):
        return [
            (
                rec.case_id,
                tuple(sorted(rec.params.items())),
                rec.lhs,
                rec.rhs,
                rec.abs_residual,
                rec.rel_residual,
                rec.passed,
                rec.error,
            )
            for res in report.results
            for rec in res.records
        ]

    a = run_registry(registry(), id_filter="EQ1*")
    b = run_registry(registry(), id_filter="EQ1*")
    assert payload(a) == payload(b)


def test_parallel_run_matches_serial():
    serial = run_registry(registry(), id_filter="T*")
    threaded = run_registry(registry(), id_filter="T*", jobs=4)
    order_s = [(r.case.id, r.passed_all) for r in serial.results]
    order_t = [(r.case.id, r.passed_all) for r in threaded.results]
    assert order_s == order_t


# ---------------------------------------------------------------------------
# runner semantics on synthetic cases
# ---------------------------------------------------------------------------


def make_case(**kw):
    base = dict(
        id="SYN",
        description="synthetic",
        anchor="qelliptic.numutil.sum_series",
        lhs=lambda: 1.0,
        rhs=lambda: 1.0,
        samples=({},),
    )
    base.update(kw)
    return IdentityCase(**base)


def test_active_case_failing_everywhere_is_auto_quarantined():
    bad = make_case(lhs=lambda: 1.0, rhs=lambda: 2.0)
    result = run_case(bad)
    assert result.failed_all
    assert result.effective_status == "QUARANTINED(auto)"
    report = run_registry([bad])
    assert not report.gate_passed
    assert report.counts["QUARANTINED(auto)"] == 1
    assert [r.case.id for r in report.quarantined()] == ["SYN"]


def test_partial_failure_is_not_auto_quarantined():
    flaky = make_case(
        lhs=lambda v: 1.0 if v else 2.0,
        rhs=lambda v: 1.0,
        samples=({"v": 1}, {"v": 0}),
    )
    result = run_case(flaky)
    assert not result.passed_all and not result.failed_all
    assert result.effective_status == "ACTIVE"


def test_exponentiated_mode_forgives_period_shifts():
    # lhs - rhs = 2 pi i: equal after exponentiation
    case = make_case(
        lhs=lambda: 2j * math.pi, rhs=lambda: 0.0, compare="exponentiated"
    )
    assert run_case(case).passed_all


def test_evaluation_errors_become_fail_records():
    def explode():
        raise PoleError("synthetic pole")

    case = make_case(lhs=explode)
    rec = run_case(case).records[0]
    assert not rec.passed
    assert "PoleError" in rec.error and "synthetic pole" in rec.error
    assert math.isinf(rec.abs_residual)


def test_default_tolerances_by_mode():
    assert make_case().tolerance == 1e-9
    assert make_case(compare="exponentiated").tolerance == 1e-8
    assert make_case(compare="derivative").tolerance == 1e-6
    assert make_case(compare="limit").tolerance == 1e-3
    assert make_case(tol=1e-4).tolerance == 1e-4


def test_case_validation():
    with pytest.raises(ValueError):
        make_case(compare="fuzzy")
    with pytest.raises(ValueError):
        make_case(status="RETIRED")
    with pytest.raises(ValueError):
        make_case(samples=())
    with pytest.raises(ValueError):
        make_case(tol=0.0)


def test_tol_override_tightens_verdict():
    case = make_case(lhs=lambda: 1.0, rhs=lambda: 1.0 + 1e-7)
    assert not run_case(case).passed_all  # default 1e-9
    assert run_case(case, tol_override=1e-3).passed_all


def test_sample_override_replaces_only_matching_keys():
    report = run_registry(registry(), id_filter="EQ79", sample_override={"l": 2, "zz": 9})
    for rec in report.results[0].records:
        assert rec.params["l"] == 2
        assert "zz" not in rec.params
    assert report.results[0].passed_all


def test_id_filter_glob():
    appendix = run_registry(registry(), id_filter="A*")
    assert appendix.results
    assert all(r.case.id.startswith("A") for r in appendix.results)
    single = run_registry(registry(), id_filter="EQ7")
    assert [r.case.id for r in single.results] == ["EQ7"]
    assert not run_registry(registry(), id_filter="NO-SUCH-*").results


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_format_complex_pure_reals():
    assert format_complex(0.5 + 0.0j) == "0.5"
    assert "j" in format_complex(0.5 + 0.25j)
    assert format_complex(None) == ""


def test_json_schema():
    report = run_registry(registry(), id_filter="EQ7")
    doc = json.loads(report_to_json(report))
    assert set(doc) == {"records", "counts", "gate_passed", "wall_time_ms"}
    assert doc["gate_passed"] is True
    rec = doc["records"][0]
    for field in (
        "id",
        "params",
        "lhs",
        "rhs",
        "abs_residual",
        "rel_residual",
        "pass",
        "tolerance",
        "compare",
        "status",
    ):
        assert field in rec


def test_csv_schema():
    report = run_registry(registry(), id_filter="T5")
    rows = list(csv.DictReader(io.StringIO(report_to_csv(report))))
    assert len(rows) == len(report.results[0].records)
    for row in rows:
        assert row["id"] == "T5"
        assert row["pass"] == "True"
        assert float(row["rel_residual"]) <= float(row["tolerance"])


def test_text_report_gate_and_quarantine_lines():
    report = run_all()
    text = report_to_text(report)
    assert "gate=PASS" in text
    for r in report.quarantined():
        assert r.case.id in text
