"""Verification reports and the JSON wire schema shared by the CLI and the
workspace service. Field names and order are normative."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from . import exprs as E
from .diagnostics import Diagnostic
from .vcgen import VC


@dataclass
class VCResult:
    vc: VC
    status: str
    elapsed_ms: int
    trace: List = field(default_factory=list)
    saturation_complete: bool = True

    def to_json(self) -> dict:
        # the first eight fields and their order are the normative schema;
        # the derivation trace rides behind them for the IDE's detail panel
        return {
            "id": self.vc.id,
            "line": self.vc.line,
            "kind": self.vc.kind,
            "status": self.status,
            "ms": self.elapsed_ms,
            "goal": E.render(self.vc.goal),
            "givens": [E.render(g.exp) for g in self.vc.givens],
            "description": self.vc.description,
            "trace": [{"rule": t.rule, "detail": t.detail, "fact": t.fact}
                      for t in self.trace],
        }


@dataclass
class VerifyReport:
    module: str
    diagnostics: List[Diagnostic]
    results: List[VCResult]
    elapsed_ms: int = 0

    @property
    def totals(self) -> Dict[str, int]:
        counts = {"proved": 0, "unprovable": 0, "timeout": 0}
        for r in self.results:
            counts[r.status] += 1
        counts["ms"] = self.elapsed_ms
        return counts

    @property
    def all_proved(self) -> bool:
        return all(r.status == "proved" for r in self.results)

    def statuses(self) -> List[List[str]]:
        return [[r.vc.id, r.status] for r in self.results]

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "diagnostics": [d.to_json() for d in self.diagnostics],
            "vcs": [r.to_json() for r in self.results],
            "totals": self.totals,
        }


def strip_timings(payload: dict) -> dict:
    """The determinism comparison excludes the ms timing fields."""
    out = dict(payload)
    out["vcs"] = [{k: v for k, v in vc.items() if k != "ms"}
                  for vc in payload.get("vcs", [])]
    out["totals"] = {k: v for k, v in payload.get("totals", {}).items()
                     if k != "ms"}
    return out
