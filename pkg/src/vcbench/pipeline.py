"""End-to-end verification: parse, check, generate VCs, prove, report."""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from .checker import Library, TypedModule, check_module
from .components import base_library
from .diagnostics import FrontEndError
from .parser import parse_module
from .prover.engine import ProofBudget, prove
from .report import VCResult, VerifyReport
from .theory import Theorem, builtin_theorems, load_theory_dir
from .vcgen import VC, generate_vcs


class Pipeline:
    """One verification setting: a library of components plus a theorem set.
    Stateless across verify() calls; safe to share read-only."""

    def __init__(self, theory_dir: Optional[str] = None,
                 budget: ProofBudget = ProofBudget(), parallel: bool = True):
        self.theorems: List[Theorem] = builtin_theorems()
        if theory_dir:
            self.theorems = self.theorems + load_theory_dir(theory_dir)
        self.budget = budget
        self.parallel = parallel

    def library_for(self, sources: Sequence[str], lenient: bool = False) -> Library:
        """Built-ins plus every concept/enhancement among the sources. In
        lenient mode sources that fail to parse or check are skipped (a
        workspace may hold broken scratch edits of unrelated modules)."""
        library = base_library()
        modules = []
        for text in sources:
            try:
                modules.append(parse_module(text))
            except FrontEndError:
                if not lenient:
                    raise
        for kind in ("concept", "enhancement"):
            for module in modules:
                if module.kind != kind:
                    continue
                try:
                    library.add(check_module(module, library))
                except FrontEndError:
                    if not lenient:
                        raise
        return library

    def check_text(self, text: str, library: Library) -> TypedModule:
        return check_module(parse_module(text), library)

    def verify_typed(self, typed: TypedModule,
                     cap_ms: Optional[int] = None) -> VerifyReport:
        start = time.perf_counter()
        vcs = generate_vcs(typed)
        deadline = None if cap_ms is None else start + cap_ms / 1000.0
        results = self.prove_all(vcs, deadline)
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerifyReport(typed.name, [], results, elapsed)

    def verify_text(self, text: str, library: Optional[Library] = None) -> VerifyReport:
        library = library if library is not None else base_library()
        return self.verify_typed(self.check_text(text, library))

    def prove_all(self, vcs: List[VC],
                  deadline: Optional[float] = None) -> List[VCResult]:
        def one(vc: VC) -> VCResult:
            if deadline is not None and time.perf_counter() > deadline:
                return VCResult(vc, "timeout", 0, [], False)
            result = prove(vc.goal, [g.exp for g in vc.givens], self.theorems,
                           self.budget)
            return VCResult(vc, result.status, result.elapsed_ms, result.trace,
                            result.saturation_complete)

        if self.parallel and len(vcs) > 1:
            with ThreadPoolExecutor(max_workers=min(8, len(vcs))) as pool:
                results = list(pool.map(one, vcs))
        else:
            results = [one(vc) for vc in vcs]
        # report order is VC id order regardless of completion order
        return sorted(results, key=lambda r: (r.vc.region, r.vc.index))


def verify_paths(paths: Sequence[str], theory_dir: Optional[str] = None,
                 budget: ProofBudget = ProofBudget(),
                 parallel: bool = True) -> List[VerifyReport]:
    """Verify the given files together: concepts and enhancements among them
    join the library; realizations and facilities produce reports."""
    texts = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as handle:
            texts.append(handle.read())
    pipeline = Pipeline(theory_dir, budget, parallel)
    library = pipeline.library_for(texts)
    reports = []
    for text in texts:
        typed = pipeline.check_text(text, library)
        if typed.kind in ("realization", "facility"):
            reports.append(pipeline.verify_typed(typed))
        else:
            reports.append(VerifyReport(typed.name, [], [], 0))
    return reports
