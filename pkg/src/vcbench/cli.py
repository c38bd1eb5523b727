"""Command-line driver: verify files, dump VCs, run the fixture corpus,
serve the workspace API."""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import List, Optional

from . import exprs as E
from .components import corpus_names, corpus_text
from .diagnostics import FrontEndError
from .pipeline import Pipeline
from .prover.engine import ProofBudget
from .report import VerifyReport

EXIT_OK = 0
EXIT_UNPROVED = 1
EXIT_ERROR = 2


def _budget(args) -> ProofBudget:
    return ProofBudget(max_rounds=args.rounds, timeout_ms=args.timeout_ms)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--timeout-ms", type=int, default=5000,
                     help="per-VC wall-clock budget")
    sub.add_argument("--rounds", type=int, default=3,
                     help="instantiation rounds per VC")
    sub.add_argument("--theory-dir", default=None,
                     help="directory of extra .thy theory files")
    sub.add_argument("--json", action="store_true", help="emit the JSON schema")
    sub.add_argument("--no-parallel", action="store_true",
                     help="prove VCs sequentially")


def _read_sources(paths: List[str]) -> List[str]:
    texts = []
    for path in paths:
        with open(path, "r", encoding="utf-8") as handle:
            texts.append(handle.read())
    return texts


def _print_report(report: VerifyReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json(), indent=2))
        return
    print(f"module {report.module}")
    if not report.results:
        print("  no verification conditions")
    for r in report.results:
        mark = {"proved": "ok ", "unprovable": "!! ", "timeout": "?? "}[r.status]
        status = r.status
        if r.status == "unprovable" and not r.saturation_complete:
            status = "unprovable (saturation incomplete)"
        print(f"  {mark}{r.vc.id:<6} line {r.vc.line:<4} {r.vc.kind:<28} "
              f"{status:<12} {r.elapsed_ms:>5} ms  {r.vc.description}")
    t = report.totals
    print(f"  totals: {t['proved']} proved, {t['unprovable']} unprovable, "
          f"{t['timeout']} timeout, {t['ms']} ms")


def cmd_verify(args) -> int:
    try:
        texts = _read_sources(args.paths)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    pipeline = Pipeline(args.theory_dir, _budget(args), not args.no_parallel)
    try:
        library = pipeline.library_for(texts)
        reports = []
        for text in texts:
            typed = pipeline.check_text(text, library)
            if typed.kind in ("realization", "facility"):
                reports.append(pipeline.verify_typed(typed))
            else:
                reports.append(VerifyReport(typed.name, [], [], 0))
    except FrontEndError as exc:
        _print_diagnostics(exc, args.json)
        return EXIT_ERROR
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for report in reports:
            _print_report(report, False)
    ok = all(r.all_proved for r in reports)
    return EXIT_OK if ok else EXIT_UNPROVED


def _print_diagnostics(exc: FrontEndError, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"diagnostics": [d.to_json() for d in exc.diagnostics]},
                         indent=2))
    else:
        for d in exc.diagnostics:
            print(f"{d.line}:{d.column}: {d.severity}: {d.message}",
                  file=sys.stderr)


def cmd_dump_vcs(args) -> int:
    from .vcgen import generate_vcs
    try:
        texts = _read_sources(args.paths)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    pipeline = Pipeline(args.theory_dir, _budget(args), False)
    try:
        library = pipeline.library_for(texts)
        typed = pipeline.check_text(texts[-1], library)
        vcs = generate_vcs(typed)
    except FrontEndError as exc:
        _print_diagnostics(exc, args.json)
        return EXIT_ERROR
    if args.vc is not None:
        vcs = [vc for vc in vcs if vc.id == args.vc]
        if not vcs:
            print(f"error: no VC named {args.vc}", file=sys.stderr)
            return EXIT_ERROR
    if args.json:
        payload = [{
            "id": vc.id, "line": vc.line, "kind": vc.kind,
            "description": vc.description, "goal": E.render(vc.goal),
            "givens": [E.render(g.exp) for g in vc.givens],
        } for vc in vcs]
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for vc in vcs:
        print(f"VC {vc.id} (line {vc.line}, {vc.kind})")
        print(f"  {vc.description}")
        print(f"  goal:   {E.render(vc.goal)}")
        relevant = [g for g in vc.givens if g.relevant]
        demoted = [g for g in vc.givens if not g.relevant]
        for g in relevant:
            print(f"  given {g.index}: {E.render(g.exp)}")
        if demoted:
            print("  ---- givens not reaching the goal ----")
            for g in demoted:
                print(f"  given {g.index}: {E.render(g.exp)}")
        print()
    return EXIT_OK


def cmd_corpus(args) -> int:
    """Verify every bundled fixture against its expected status vector."""
    pipeline = Pipeline(args.theory_dir, _budget(args), not args.no_parallel)
    expected_root = resources.files("vcbench") / "corpus" / "expected"
    names = [n for n in corpus_names()
             if (expected_root / f"{n}.json").is_file()]
    texts = [corpus_text(n) for n in names]
    library = pipeline.library_for([corpus_text(n) for n in corpus_names()])
    failures = 0
    payloads = {}
    for name, text in zip(names, texts):
        report = pipeline.verify_typed(pipeline.check_text(text, library))
        expected = json.loads((expected_root / f"{name}.json").read_text())
        got = report.statuses()
        ok = got == expected["statuses"]
        payloads[name] = report.to_json()
        if not ok:
            failures += 1
        if not args.json:
            t = report.totals
            verdict = "matches" if ok else "DIFFERS from"
            print(f"{name}: {t['proved']} proved / {t['unprovable']} unprovable "
                  f"in {t['ms']} ms - {verdict} the golden file")
    if args.json:
        print(json.dumps(payloads, indent=2))
    return EXIT_OK if failures == 0 else EXIT_UNPROVED


def cmd_serve(args) -> int:
    import uvicorn
    from .service import build_app
    app = build_app(root=args.root, ide_dir=args.ide)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="vcbench",
        description="Verify design-by-contract modules: generate line-anchored "
                    "verification conditions and discharge them with the "
                    "integrated prover.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_verify = subs.add_parser("verify", help="verify one or more module files")
    p_verify.add_argument("paths", nargs="+")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_dump = subs.add_parser("dump-vcs", help="print VCs with goals and givens")
    p_dump.add_argument("paths", nargs="+",
                        help="module files; the last one is dumped")
    p_dump.add_argument("--vc", default=None, help="restrict to one VC id")
    _add_common(p_dump)
    p_dump.set_defaults(func=cmd_dump_vcs)

    p_corpus = subs.add_parser("corpus",
                               help="verify the bundled fixture corpus")
    _add_common(p_corpus)
    p_corpus.set_defaults(func=cmd_corpus)

    p_serve = subs.add_parser("serve", help="run the workspace HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8660)
    p_serve.add_argument("--root", default=None,
                         help="directory of module files (default: the "
                              "bundled corpus)")
    p_serve.add_argument("--ide", default=None,
                         help="serve a built browser IDE from this directory")
    p_serve.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
