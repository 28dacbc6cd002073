"""Check reports and deterministic certificates.

A certificate must be byte-stable for a fixed (command, seed), so the
JSON form never includes wall-clock durations; those appear only in the
text rendering.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

TOOL_VERSION = "0.1.0"


@dataclass
class CheckReport:
    check_id: str
    claim: str
    status: str  # "pass" | "fail"
    details: dict[str, Any] = field(default_factory=dict)
    duration_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def report(check_id: str, claim: str, ok: bool, details: dict[str, Any] | None = None,
           duration_ms: float = 0.0) -> CheckReport:
    return CheckReport(check_id, claim, "pass" if ok else "fail", details or {}, duration_ms)


def report_to_dict(r: CheckReport) -> dict[str, Any]:
    return {"check_id": r.check_id, "claim": r.claim, "status": r.status,
            "details": r.details}


def certificate(command: str, seed: int, checks: list[CheckReport],
                verdict: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "tool_version": TOOL_VERSION,
        "command": command,
        "seed": seed,
        "checks": [report_to_dict(c) for c in checks],
    }
    if verdict is not None:
        doc["verdict"] = verdict
    return doc


def dumps_canonical(doc: dict[str, Any]) -> str:
    """Canonical JSON: insertion key order, two-space indent, newline-terminated."""
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def render_text(checks: list[CheckReport], verdict: str | None = None) -> str:
    lines = []
    width = max((len(c.check_id) for c in checks), default=0)
    for c in checks:
        tag = "PASS" if c.passed else "FAIL"
        line = f"[{tag}] {c.check_id.ljust(width)}  {c.claim}"
        if c.duration_ms:
            line += f" ({c.duration_ms:.1f} ms)"
        if not c.passed and c.details:
            line += f"\n       details: {json.dumps(c.details)}"
        lines.append(line)
    if verdict is not None:
        lines.append(f"verdict: {verdict}")
    n_pass = sum(c.passed for c in checks)
    lines.append(f"{n_pass}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
