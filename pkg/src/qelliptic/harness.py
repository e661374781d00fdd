"""Identity verification harness: case records, the residual runner, and
report serialization.

Each :class:`IdentityCase` names one numerically checkable identity.  Both
sides are evaluated through *independent* routes (different series, products,
or continued fractions — never the same code path), and the runner records
absolute and relative residuals per sample point.

Compare modes
-------------
``direct``
    residual on the raw values.
``exponentiated``
    both sides are logarithms; residual on ``exp(lhs)`` vs ``exp(rhs)``
    (branch-immune).
``derivative``
    sides involve numeric differentiation; looser default tolerance.
``limit``
    sides involve a numeric limit; loosest default tolerance.

A case whose residual exceeds tolerance at **every** sample is auto-flagged
as quarantined in the report (never silently patched); pre-quarantined cases
run and report but are excluded from the pass/fail gate.
"""

from __future__ import annotations

import cmath
import csv
import fnmatch
import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, Sequence

from .numutil import (
    NonConvergenceError,
    PoleError,
    TruncationPolicy,
    term_counter,
)

__all__ = [
    "DEFAULT_TOLERANCES",
    "IdentityCase",
    "SampleRecord",
    "CaseResult",
    "RegistryReport",
    "run_case",
    "run_registry",
    "format_complex",
    "report_to_json",
    "report_to_csv",
]

DEFAULT_TOLERANCES: Mapping[str, float] = {
    "direct": 1e-9,
    "exponentiated": 1e-8,
    "derivative": 1e-6,
    "limit": 1e-3,
}

_COMPARE_MODES = frozenset(DEFAULT_TOLERANCES)


@dataclass(frozen=True)
class IdentityCase:
    """One verifiable identity: two independent evaluators plus sample points."""

    id: str
    description: str
    anchor: str  # dotted path of the primary evaluator under test
    lhs: Callable[..., complex]
    rhs: Callable[..., complex]
    samples: tuple[Mapping[str, Any], ...]
    compare: str = "direct"
    tol: float | None = None
    status: str = "ACTIVE"
    param_domain: str = ""

    def __post_init__(self) -> None:
        if self.compare not in _COMPARE_MODES:
            raise ValueError(f"unknown compare mode {self.compare!r}")
        if self.status not in ("ACTIVE", "QUARANTINED"):
            raise ValueError(f"unknown status {self.status!r}")
        if not self.samples:
            raise ValueError(f"case {self.id}: needs at least one sample")
        if self.tol is not None and self.tol <= 0:
            raise ValueError(f"case {self.id}: tolerance must be positive")

    @property
    def tolerance(self) -> float:
        return self.tol if self.tol is not None else DEFAULT_TOLERANCES[self.compare]


@dataclass(frozen=True)
class SampleRecord:
    """Residuals of one case at one sample point."""

    case_id: str
    params: Mapping[str, Any]
    lhs: complex | None
    rhs: complex | None
    abs_residual: float
    rel_residual: float
    passed: bool
    tolerance: float
    compare: str
    status: str
    terms_used: int
    wall_time_ms: float
    error: str = ""


@dataclass(frozen=True)
class CaseResult:
    case: IdentityCase
    records: tuple[SampleRecord, ...]

    @property
    def passed_all(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failed_all(self) -> bool:
        return all(not r.passed for r in self.records)

    @property
    def effective_status(self) -> str:
        """ACTIVE cases failing at every sample are flagged, not patched."""
        if self.case.status == "QUARANTINED":
            return "QUARANTINED"
        if self.failed_all:
            return "QUARANTINED(auto)"
        return "ACTIVE"

    @property
    def worst_rel_residual(self) -> float:
        return max((r.rel_residual for r in self.records), default=math.inf)


@dataclass(frozen=True)
class RegistryReport:
    results: tuple[CaseResult, ...]
    wall_time_ms: float

    @property
    def gate_passed(self) -> bool:
        """True iff every pre-registered ACTIVE case passed at every sample."""
        return all(
            r.passed_all for r in self.results if r.case.status == "ACTIVE"
        )

    @property
    def counts(self) -> dict[str, int]:
        out = {"ACTIVE": 0, "QUARANTINED": 0, "QUARANTINED(auto)": 0}
        for r in self.results:
            out[r.effective_status] += 1
        return out

    def quarantined(self) -> list[CaseResult]:
        return [r for r in self.results if r.effective_status != "ACTIVE"]


def _evaluate(fn: Callable[..., complex], params: Mapping[str, Any]) -> complex:
    return complex(fn(**params))


def run_case(
    case: IdentityCase,
    *,
    samples: Sequence[Mapping[str, Any]] | None = None,
    tol_override: float | None = None,
) -> CaseResult:
    """Evaluate both sides at each sample; mathematical failures become
    fail records rather than exceptions."""
    tol = tol_override if tol_override is not None else case.tolerance
    records: list[SampleRecord] = []
    for params in samples if samples is not None else case.samples:
        t0 = time.perf_counter()
        lhs_v: complex | None = None
        rhs_v: complex | None = None
        err = ""
        with term_counter() as used:
            try:
                lhs_v = _evaluate(case.lhs, params)
                rhs_v = _evaluate(case.rhs, params)
            except (
                PoleError,
                NonConvergenceError,
                ValueError,
                ZeroDivisionError,
                OverflowError,
            ) as exc:
                err = f"{type(exc).__name__}: {exc}"
            terms = used()
        wall = (time.perf_counter() - t0) * 1000.0
        if err:
            records.append(
                SampleRecord(
                    case_id=case.id,
                    params=dict(params),
                    lhs=lhs_v,
                    rhs=rhs_v,
                    abs_residual=math.inf,
                    rel_residual=math.inf,
                    passed=False,
                    tolerance=tol,
                    compare=case.compare,
                    status=case.status,
                    terms_used=terms,
                    wall_time_ms=wall,
                    error=err,
                )
            )
            continue
        assert lhs_v is not None and rhs_v is not None
        if case.compare == "exponentiated":
            cmp_l, cmp_r = cmath.exp(lhs_v), cmath.exp(rhs_v)
        else:
            cmp_l, cmp_r = lhs_v, rhs_v
        abs_res = abs(cmp_l - cmp_r)
        rel_res = abs_res / max(abs(cmp_l), abs(cmp_r), 1e-300)
        passed = abs_res <= tol or rel_res <= tol
        records.append(
            SampleRecord(
                case_id=case.id,
                params=dict(params),
                lhs=lhs_v,
                rhs=rhs_v,
                abs_residual=abs_res,
                rel_residual=rel_res,
                passed=passed,
                tolerance=tol,
                compare=case.compare,
                status=case.status,
                terms_used=terms,
                wall_time_ms=wall,
            )
        )
    return CaseResult(case=case, records=tuple(records))


def run_registry(
    cases: Iterable[IdentityCase],
    *,
    id_filter: str = "*",
    jobs: int = 1,
    tol_override: float | None = None,
    sample_override: Mapping[str, Any] | None = None,
) -> RegistryReport:
    """Run every case whose id matches ``id_filter`` (shell glob).

    ``sample_override`` replaces the matching parameter(s) in each default
    sample of the selected cases (parameters the case does not take are
    ignored).  Results preserve registry order regardless of ``jobs``.
    """
    selected = [c for c in cases if fnmatch.fnmatchcase(c.id, id_filter)]

    def samples_for(case: IdentityCase) -> Sequence[Mapping[str, Any]] | None:
        if not sample_override:
            return None
        out = []
        for s in case.samples:
            merged = dict(s)
            for key, val in sample_override.items():
                if key in merged:
                    merged[key] = val
            out.append(merged)
        return out

    t0 = time.perf_counter()
    if jobs <= 1 or len(selected) <= 1:
        results = [
            run_case(c, samples=samples_for(c), tol_override=tol_override)
            for c in selected
        ]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(
                    run_case, c, samples=samples_for(c), tol_override=tol_override
                )
                for c in selected
            ]
            results = [f.result() for f in futures]
    wall = (time.perf_counter() - t0) * 1000.0
    return RegistryReport(results=tuple(results), wall_time_ms=wall)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def format_complex(z: complex | None) -> str:
    """Deterministic, locale-free rendering; pure reals print as reals."""
    if z is None:
        return ""
    if z.imag == 0.0:
        return "%.16g" % z.real
    sign = "+" if z.imag >= 0 else "-"
    return "%.16g%s%.16gj" % (z.real, sign, abs(z.imag))


def _record_row(rec: SampleRecord, effective_status: str) -> dict[str, Any]:
    return {
        "id": rec.case_id,
        "params": {k: format_complex(complex(v)) if isinstance(v, complex) else v
                   for k, v in sorted(rec.params.items())},
        "lhs": format_complex(rec.lhs),
        "rhs": format_complex(rec.rhs),
        "abs_residual": rec.abs_residual,
        "rel_residual": rec.rel_residual,
        "pass": rec.passed,
        "tolerance": rec.tolerance,
        "compare": rec.compare,
        "status": effective_status,
        "terms_used": rec.terms_used,
        "wall_time_ms": round(rec.wall_time_ms, 3),
        "error": rec.error,
    }


def report_to_json(report: RegistryReport) -> str:
    rows = []
    for result in report.results:
        for rec in result.records:
            rows.append(_record_row(rec, result.effective_status))
    payload = {
        "records": rows,
        "counts": report.counts,
        "gate_passed": report.gate_passed,
        "wall_time_ms": round(report.wall_time_ms, 3),
    }
    return json.dumps(payload, indent=2, sort_keys=False, allow_nan=True)


_CSV_COLUMNS = [
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
    "terms_used",
    "wall_time_ms",
    "error",
]


def report_to_csv(report: RegistryReport) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for result in report.results:
        for rec in result.records:
            row = _record_row(rec, result.effective_status)
            row["params"] = ";".join(f"{k}={v}" for k, v in row["params"].items())
            writer.writerow(row)
    return buf.getvalue()


def report_to_text(report: RegistryReport) -> str:
    """Human-readable per-case summary plus the quarantine listing."""
    lines: list[str] = []
    for result in report.results:
        case = result.case
        worst = result.worst_rel_residual
        mark = "PASS" if result.passed_all else "FAIL"
        lines.append(
            f"{case.id:22s} {mark:4s} {result.effective_status:17s} "
            f"worst-rel={worst:.3e} samples={len(result.records)} "
            f"tol={case.tolerance:g} [{case.compare}]"
        )
    counts = report.counts
    lines.append(
        f"-- {counts['ACTIVE']} active pass-gated, {counts['QUARANTINED']} quarantined, "
        f"{counts['QUARANTINED(auto)']} auto-quarantined; "
        f"gate={'PASS' if report.gate_passed else 'FAIL'}; "
        f"wall={report.wall_time_ms:.0f} ms"
    )
    quarantined = report.quarantined()
    if quarantined:
        lines.append("-- quarantine listing (runs, reports, excluded from gate):")
        for result in quarantined:
            lines.append(
                f"   {result.case.id:22s} worst-rel={result.worst_rel_residual:.3e} "
                f"({result.case.description})"
            )
    return "\n".join(lines)
