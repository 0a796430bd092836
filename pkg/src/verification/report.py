# src/verification/report.py
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional


@dataclass
class VerificationReport:
    target: str
    params: Dict[str, int]
    passed: bool
    summary: str
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None

    def to_record(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    def render(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.target} {params}".rstrip(), self.summary]
        for key, value in self.details.items():
            lines.append(f"  {key}: {value}")
        if self.counterexample is not None:
            lines.append("  counterexample: " + json.dumps(self.counterexample, sort_keys=True))
        return "\n".join(lines)
