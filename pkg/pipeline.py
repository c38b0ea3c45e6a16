#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
pipeline.py
===========

Run the verification suites in one call and collect a report.

Steps executed
--------------
One step per selected scope, in the fixed order

    octonion -> triality -> weyl -> orbits -> classes

Every check runs inside a guard: an exception becomes a failing check whose
detail is the exception text, and the run moves on.  Progress goes to stderr
as

    [1/5] octonion
      [OK]   norm-multiplicativity
      [FAIL] torus-automorphism: 1 torus pair mismatch(es), first: ('2', '3')

followed by a per-scope pandas summary table.  Nothing is written to stdout;
the caller decides what to do with VerificationReport.to_json().

Key options
-----------
  samples   size of the seeded random suites (default 1000)
  seed      root of the SeedSequence (default 0)
  threads   worker processes for the random suites (default 1)
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

import pandas as pd

from suites import SCOPES, SUITES, RunConfig

PASS = "pass"
FAIL = "fail"
ALL = "all"


@dataclass(frozen=True)
class Check:
    scope: str
    name: str
    anchor: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict[str, str]:
        return {"scope": self.scope, "name": self.name, "anchor": self.anchor,
                "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    scopes: tuple[str, ...]
    config: RunConfig
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def exit_code(self) -> int:
        return 0 if self.failed == 0 else 1

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary_frame(self) -> pd.DataFrame:
        df = pd.DataFrame([c.to_json() for c in self.checks], columns=["scope", "name", "status"])
        table = pd.crosstab(df["scope"], df["status"]).reindex(index=list(self.scopes), columns=[PASS, FAIL],
                                                               fill_value=0)
        table.loc["total"] = table.sum()
        return table

    def to_json(self) -> dict:
        return {
            "scopes": list(self.scopes),
            "samples": self.config.samples,
            "seed": self.config.seed,
            "checks": [c.to_json() for c in self.checks],
            "summary": {"total": len(self.checks), "passed": self.passed, "failed": self.failed},
        }


def log(*parts) -> None:
    print(*parts, file=sys.stderr)


def resolve_scopes(scope: str | Sequence[str]) -> tuple[str, ...]:
    names = [scope] if isinstance(scope, str) else list(scope)
    if ALL in names:
        return SCOPES
    unknown = [n for n in names if n not in SCOPES]
    if unknown:
        raise ValueError(f"unknown scope(s) {unknown}; choose from {[ALL, *SCOPES]}")
    return tuple(s for s in SCOPES if s in names)


def run_check(spec, cfg: RunConfig) -> Check:
    try:
        ok, detail = spec.run(cfg)
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(spec.scope, spec.name, spec.anchor, PASS if ok else FAIL, detail if not ok else "")


def run_verification(scope: str | Sequence[str] = ALL, samples: int = 1000, seed: int = 0,
                     threads: int = 1) -> VerificationReport:
    if samples < 0 or threads < 1:
        raise ValueError("--samples must be >= 0 and --threads >= 1")
    scopes = resolve_scopes(scope)
    cfg = RunConfig(samples=samples, seed=seed, threads=threads)
    report = VerificationReport(scopes, cfg)
    for k, name in enumerate(scopes, start=1):
        log(f"[{k}/{len(scopes)}] {name}")
        for spec in SUITES[name]:
            t0 = time.perf_counter()
            result = run_check(spec, cfg)
            report.checks.append(result)
            if result.passed:
                log(f"  [OK]   {spec.name}  ({time.perf_counter() - t0:.2f} s)")
            else:
                log(f"  [FAIL] {spec.name}: {result.detail}")
    log("\nSUMMARY\n--------")
    log(report.summary_frame().to_string())
    log("--------")
    return report
