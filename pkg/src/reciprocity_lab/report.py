"""Uniform result envelope for verification runs.

Every verifier returns a VerificationReport: what law ran, over which field,
on which rendered inputs, the per-term contributions, the combined value,
the expected value, and whether they agree.  Serialization is deterministic
(sorted keys, no timestamps) so identical runs produce identical bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    law: str
    field_descriptor: str
    inputs: dict
    terms: list
    value: str
    expected: str
    ok: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "field": self.field_descriptor,
            "inputs": dict(sorted(self.inputs.items())),
            "terms": [dict(sorted(term.items())) for term in self.terms],
            "value": self.value,
            "expected": self.expected,
            "ok": self.ok,
            "details": dict(sorted(self.details.items())),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent,
                          separators=(",", ": ") if indent else (",", ":"))

    def summary_lines(self) -> list[str]:
        lines = [f"law: {self.law}", f"field: {self.field_descriptor}"]
        for key, val in sorted(self.inputs.items()):
            lines.append(f"  {key} = {val}")
        for term in self.terms:
            shown = ", ".join(f"{k}={v}" for k, v in sorted(term.items()))
            lines.append(f"  term: {shown}")
        lines.append(f"value: {self.value}  expected: {self.expected}")
        lines.append("OK" if self.ok else "FAILED")
        return lines
