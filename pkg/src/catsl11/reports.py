"""Check-result records and their JSON/text serializations.

Report JSON schema (stable):
    {"suite": str, "config": {...},
     "cases": [{"id": str, "ok": bool, "expected": str, "computed": str,
                "witness": str}, ...],
     "summary": {"total": int, "passed": int, "failed": int}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict


@dataclass
class Case:
    cid: str
    ok: bool
    expected: str = ""
    computed: str = ""
    witness: str = ""


@dataclass
class SuiteReport:
    suite: str
    config: dict = field(default_factory=dict)
    cases: list = field(default_factory=list)

    def add(self, cid, ok, expected="", computed="", witness=""):
        self.cases.append(Case(cid, bool(ok), str(expected), str(computed), str(witness)))

    def extend(self, cases):
        self.cases.extend(cases)

    @property
    def ok(self):
        return all(c.ok for c in self.cases)

    def summary(self):
        passed = sum(1 for c in self.cases if c.ok)
        return {"total": len(self.cases), "passed": passed,
                "failed": len(self.cases) - passed}

    def to_json(self):
        return {
            "suite": self.suite,
            "config": self.config,
            "cases": [{"id": c.cid, "ok": c.ok, "expected": c.expected,
                       "computed": c.computed, "witness": c.witness}
                      for c in self.cases],
            "summary": self.summary(),
        }

    def to_text(self, verbose=False):
        lines = []
        s = self.summary()
        lines.append(f"[{'PASS' if self.ok else 'FAIL'}] {self.suite}: "
                     f"{s['passed']}/{s['total']} checks passed")
        for c in self.cases:
            if c.ok and not verbose:
                continue
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  {mark} {c.cid}")
            if not c.ok:
                if c.expected or c.computed:
                    lines.append(f"       expected: {c.expected}")
                    lines.append(f"       computed: {c.computed}")
                if c.witness:
                    for wl in str(c.witness).splitlines():
                        lines.append(f"       | {wl}")
        return "\n".join(lines)


def emit_report(reports, fmt="text", verbose=False):
    """Serialize a list of SuiteReports to 'text' or 'json'."""
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
    return "\n".join(r.to_text(verbose=verbose) for r in reports)


def roundtrip(reports):
    """parse(serialize(x)); used by self-tests."""
    return json.loads(json.dumps([r.to_json() for r in reports]))


__all__ = ["Case", "SuiteReport", "emit_report", "roundtrip", "asdict"]
