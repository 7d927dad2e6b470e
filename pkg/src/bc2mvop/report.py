"""Verification results and deterministic rendering.

Three outcomes:

* PASS: the identity holds exactly (or numerically within tolerance where a
  check is explicitly numeric).
* FAIL: the implementation contradicts itself; something we derived and
  trust is violated.
* REPORTED: our independently constructed object disagrees with a stored
  reference closed form.  The discrepancy is printed with both sides, and
  does not count as a failure of the machinery.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
REPORTED = "REPORTED"

_STATUSES = (PASS, FAIL, REPORTED)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""
    data: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        """True unless the status is FAIL."""
        return self.status != FAIL

    def to_dict(self) -> dict:
        d = {"identity": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        if "residual" in self.data:
            d["residual"] = self.data["residual"]
        extra = {k: v for k, v in self.data.items() if k != "residual"}
        if extra:
            d["data"] = extra
        return d


def render_text(results: list[CheckResult]) -> str:
    lines = []
    width = max((len(r.name) for r in results), default=0)
    for r in results:
        line = f"{r.status:<8} {r.name:<{width}}"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line.rstrip())
    n_pass = sum(r.status == PASS for r in results)
    n_fail = sum(r.status == FAIL for r in results)
    n_rep = sum(r.status == REPORTED for r in results)
    lines.append(f"{n_pass} passed, {n_fail} failed, {n_rep} reported")
    return "\n".join(lines)


def render_json(results: list[CheckResult]) -> str:
    payload = {
        "results": [r.to_dict() for r in results],
        "summary": {
            "pass": sum(r.status == PASS for r in results),
            "fail": sum(r.status == FAIL for r in results),
            "reported": sum(r.status == REPORTED for r in results),
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def exit_code(results: list[CheckResult]) -> int:
    return 0 if all(r.ok for r in results) else 1
