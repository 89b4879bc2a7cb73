"""Structured pass/fail records shared by the verifier-style operations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class CheckResult:
    """One verdict for one named check on one graph.

    Failing records always carry a reproducible witness; ``graph_key`` is
    the graph6 encoding of the graph under test.
    """

    check: str
    passed: bool
    graph_key: str = ""
    witness: str | None = None
    detail: str | None = None
    seconds: float | None = None

    def with_context(self, graph_key: str, seconds: float | None = None) -> "CheckResult":
        return replace(self, graph_key=graph_key, seconds=seconds)


@dataclass
class VerificationReport:
    """A bag of check results plus run metadata (seed, caps, check list)."""

    results: list[CheckResult] = field(default_factory=list)
    meta: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def extend(self, results: list[CheckResult]) -> None:
        self.results.extend(results)

    def sorted(self) -> "VerificationReport":
        ordered = sorted(self.results, key=lambda r: (r.graph_key, r.check, r.witness or ""))
        return VerificationReport(ordered, dict(self.meta))

    def summary(self) -> dict[str, tuple[int, int]]:
        """Per check name: (pass count, fail count)."""
        counts: dict[str, list[int]] = {}
        for r in self.results:
            bucket = counts.setdefault(r.check, [0, 0])
            bucket[0 if r.passed else 1] += 1
        return {name: (p, f) for name, (p, f) in sorted(counts.items())}

    def to_json_lines(self) -> str:
        lines = [json.dumps({"schema": "qt2ec-report/1", **self.meta}, sort_keys=True)]
        for r in self.results:
            lines.append(
                json.dumps(
                    {
                        "schema": "qt2ec-report/1",
                        "graph6": r.graph_key,
                        "check": r.check,
                        "passed": r.passed,
                        "witness": r.witness,
                        "detail": r.detail,
                        "seconds": r.seconds,
                    },
                    sort_keys=True,
                )
            )
        return "\n".join(lines) + "\n"
