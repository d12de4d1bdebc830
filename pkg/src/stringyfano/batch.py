"""Running verification checks over many polytopes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import (EmptyCheckSet, NotAlmostPseudoreflexive, NotCanonicalFano,
                     NotLDP, OriginNotInterior, UnsupportedDimension)
from .fano import classify
from .identities import (cy_stringy_euler, cy_stringy_euler_normalfan,
                         identity24, libgober_wood)
from .io import PolytopeRecord
from .polytope import LatticePolytope
from .stringy import (stringy_e_canonical3d, stringy_e_general, stringy_e_ldp,
                      stringy_euler)

CHECKS = ("classify", "e3d", "e_general", "e_ldp", "id24", "lw", "cy")

# precondition failures: the check does not apply to the polytope
_SKIP = (NotCanonicalFano, UnsupportedDimension, NotAlmostPseudoreflexive,
         OriginNotInterior, NotLDP)


@dataclass(frozen=True)
class CheckResult:
    index: int
    label: str | None
    check: str
    status: str  # "pass" | "fail" | "skipped"
    details: Any


@dataclass
class BatchSummary:
    total: int
    checks: list[str]
    counts: dict[str, dict[str, int]]
    tallies: dict[str, int]
    failures: list[CheckResult]
    results: list[CheckResult] = field(repr=False)

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    def to_text(self) -> str:
        lines = [f"polytopes: {self.total}"]
        for check in self.checks:
            c = self.counts[check]
            lines.append(f"{check:10s} pass={c['pass']} fail={c['fail']} skipped={c['skipped']}")
        if self.tallies:
            lines.append("classification:")
            lines += [f"  {k}: {v}" for k, v in self.tallies.items()]
        for f in self.failures:
            lines.append(f"FAIL #{f.index} {f.label or ''} [{f.check}]: {f.details}")
        return "\n".join(lines)


def _check_e_function(E, P: LatticePolytope, reference=None) -> tuple[bool, dict]:
    problems = E.invariant_violations()
    euler = stringy_euler(E)
    if euler != P.volume:
        problems.append(f"stringy Euler number {euler} != v = {P.volume}")
    if reference is not None and reference != E:
        problems.append(f"differs from closed form {reference}")
    return not problems, {"e_function": E, "euler": euler, "problems": problems}


def run_check(check: str, P: LatticePolytope, strategy: str = "all_boundary_points") -> tuple[str, Any]:
    """Run one named check; returns ``(status, details)``."""
    try:
        if check == "classify":
            rep = classify(P)
            ok = rep.implications_hold()
            if rep.is_almost_pseudoreflexive != rep.is_almost_reflexive and P.dim <= 4:
                ok = False
            return ("pass" if ok else "fail"), rep
        if check == "e3d":
            E = stringy_e_canonical3d(P)
            ok, details = _check_e_function(E, P)
            return ("pass" if ok else "fail"), details
        if check == "e_general":
            E = stringy_e_general(P, strategy)
            ref = stringy_e_canonical3d(P) if P.dim == 3 else stringy_e_ldp(P)
            ok, details = _check_e_function(E, P, ref)
            return ("pass" if ok else "fail"), details
        if check == "e_ldp":
            E = stringy_e_ldp(P)
            ok, details = _check_e_function(E, P)
            return ("pass" if ok else "fail"), details
        if check == "id24":
            rep = identity24(P)
            return ("pass" if rep.holds else "fail"), rep
        if check == "lw":
            rep = libgober_wood(P)
            return ("pass" if rep.holds else "fail"), rep
        if check == "cy":
            shortcut = cy_stringy_euler(P)
            normalfan = cy_stringy_euler_normalfan(P)
            ok = shortcut == normalfan and (P.dim != 3 or shortcut == 24)
            return ("pass" if ok else "fail"), {"face_formula": shortcut, "normal_fan": normalfan}
    except _SKIP as exc:
        return "skipped", {"reason": f"{type(exc).__name__}: {exc}"}
    except Exception as exc:  # per-record errors must not abort a batch
        return "fail", {"error": f"{type(exc).__name__}: {exc}"}
    raise ValueError(f"unknown check {check!r}")


def _process(args) -> tuple[list[CheckResult], Any]:
    record, checks, strategy = args
    results = []
    report = None
    for check in checks:
        status, details = run_check(check, record.polytope, strategy)
        if check == "classify" and not isinstance(details, dict):
            report = details
        results.append(CheckResult(record.index, record.label, check, status, details))
    return results, report


def parse_checks(names: str | Iterable[str]) -> list[str]:
    names = names.split(",") if isinstance(names, str) else list(names)
    names = [n.strip().replace("-", "_") for n in names if n.strip()]
    if not names:
        raise EmptyCheckSet("no checks requested")
    for n in names:
        if n not in CHECKS:
            raise ValueError(f"unknown check {n!r}; choose from {', '.join(CHECKS)}")
    return list(dict.fromkeys(names))


def run_batch(records: Sequence[PolytopeRecord], checks: Iterable[str],
              parallelism: int = 1, strategy: str = "all_boundary_points") -> BatchSummary:
    """Run ``checks`` on every record; the summary does not depend on ``parallelism``."""
    checks = parse_checks(checks)
    jobs = [(r, checks, strategy) for r in records]
    if parallelism > 1 and len(jobs) > 1:
        chunk = max(1, len(jobs) // (parallelism * 8))
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            outputs = list(pool.map(_process, jobs, chunksize=chunk))
    else:
        outputs = [_process(j) for j in jobs]

    counts = {c: {"pass": 0, "fail": 0, "skipped": 0} for c in checks}
    tallies: dict[str, int] = {}
    if "classify" in checks:
        tallies = {"canonical_fano": 0, "reflexive": 0, "almost_reflexive": 0,
                   "canonical_not_almost_reflexive": 0, "ldp_polygon": 0}
    results, failures = [], []
    for res, report in outputs:
        for r in res:
            counts[r.check][r.status] += 1
            results.append(r)
            if r.status == "fail":
                failures.append(r)
        if report is not None:
            tallies["canonical_fano"] += report.is_canonical_fano
            tallies["reflexive"] += report.is_reflexive
            tallies["almost_reflexive"] += report.is_almost_reflexive
            tallies["canonical_not_almost_reflexive"] += (
                report.is_canonical_fano and not report.is_almost_reflexive)
            tallies["ldp_polygon"] += report.is_ldp_polygon
    return BatchSummary(len(records), checks, counts, tallies, failures, results)

