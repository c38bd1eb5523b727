"""HTTP facade for the browser IDE: list components, fetch and edit
sources in per-session scratch buffers, run verification."""
from __future__ import annotations

import threading
import uuid
from pathlib import Path
from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .ast_nodes import SourceModule
from .components import BUILTIN_CONCEPTS, corpus_names, corpus_text
from .diagnostics import FrontEndError
from .parser import parse_module
from .pipeline import Pipeline
from .prover.engine import ProofBudget

SESSION_COOKIE = "vcbench_session"


class Workspace:
    """Module files plus the built-in standard components (read-only),
    overlaid with session-scoped scratch buffers for unsaved edits."""

    def __init__(self, root: Optional[str] = None, include_builtins: bool = True,
                 budget: ProofBudget = ProofBudget(), parallel: bool = True,
                 request_cap_ms: int = 60_000):
        self.base: Dict[str, str] = {}
        self.readonly: set = set()
        if include_builtins:
            for name in BUILTIN_CONCEPTS:
                self.base[name] = corpus_text(name)
                self.readonly.add(name)
        if root is None:
            for name in corpus_names():
                if name not in self.base:
                    self.base[name] = corpus_text(name)
        else:
            for path in sorted(Path(root).glob("*.spl")):
                if path.stem not in self.base:
                    self.base[path.stem] = path.read_text(encoding="utf-8")
        self.scratch: Dict[str, Dict[str, str]] = {}
        self.lock = threading.Lock()
        self.pipeline = Pipeline(budget=budget, parallel=parallel)
        self.request_cap_ms = request_cap_ms

    # -- sources ------------------------------------------------------------

    def ids(self) -> List[str]:
        return sorted(self.base)

    def text(self, module_id: str, session: str) -> str:
        with self.lock:
            edited = self.scratch.get(session, {}).get(module_id)
        return edited if edited is not None else self.base[module_id]

    def put(self, module_id: str, session: str, text: str) -> None:
        with self.lock:
            self.scratch.setdefault(session, {})[module_id] = text

    # -- structure ------------------------------------------------------------

    def _headers(self, session: str) -> Dict[str, SourceModule]:
        out: Dict[str, SourceModule] = {}
        for module_id in self.ids():
            try:
                out[module_id] = parse_module(self.text(module_id, session))
            except FrontEndError:
                continue
        return out

    def component_tree(self, session: str) -> List[dict]:
        parsed = self._headers(session)

        def node(module_id: str, module: SourceModule) -> dict:
            return {"id": module_id, "name": module.name, "kind": module.kind,
                    "editable": module_id not in self.readonly, "children": []}

        concepts: Dict[str, dict] = {}
        enhancements: Dict[str, dict] = {}
        roots: List[dict] = []
        for module_id, module in parsed.items():
            if module.kind == "concept":
                concepts[module.name] = node(module_id, module)
        for module_id, module in parsed.items():
            if module.kind == "enhancement":
                item = node(module_id, module)
                enhancements[module.name] = item
                parent = concepts.get(module.for_concept)
                if parent is not None:
                    parent["children"].append(item)
                else:
                    roots.append(item)
        for module_id, module in parsed.items():
            if module.kind == "realization":
                item = node(module_id, module)
                parent = enhancements.get(module.for_enhancement)
                if parent is not None:
                    parent["children"].append(item)
                else:
                    roots.append(item)
            elif module.kind == "facility":
                roots.append(node(module_id, module))
        tree = sorted(concepts.values(), key=lambda n: n["name"]) + \
            sorted(roots, key=lambda n: n["name"])
        for item in tree:
            item["children"].sort(key=lambda n: n["name"])
            for child in item["children"]:
                child["children"].sort(key=lambda n: n["name"])
        return tree

    # -- verification -------------------------------------------------------------

    def verify(self, module_id: str, session: str) -> dict:
        texts = [self.text(other, session) for other in self.ids()]
        target = self.text(module_id, session)
        library = self.pipeline.library_for(texts, lenient=True)
        typed = self.pipeline.check_text(target, library)
        report = self.pipeline.verify_typed(typed, cap_ms=self.request_cap_ms)
        return report.to_json()


def build_app(root: Optional[str] = None, include_builtins: bool = True,
              budget: ProofBudget = ProofBudget(), parallel: bool = True,
              ide_dir: Optional[str] = None) -> FastAPI:
    workspace = Workspace(root, include_builtins, budget, parallel)
    app = FastAPI(title="vcbench workspace", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.workspace = workspace

    def session_of(request: Request, response: Response) -> str:
        session = request.cookies.get(SESSION_COOKIE)
        if not session:
            session = uuid.uuid4().hex
            response.set_cookie(SESSION_COOKIE, session, httponly=True)
        return session

    def require(module_id: str) -> None:
        if module_id not in workspace.base:
            raise HTTPException(404, f"unknown component {module_id!r}")

    @app.get("/api/v1/components")
    def components(request: Request, response: Response):
        session = session_of(request, response)
        return {"components": workspace.component_tree(session)}

    @app.get("/api/v1/source", response_class=PlainTextResponse)
    def get_source(id: str, request: Request, response: Response):
        require(id)
        session = session_of(request, response)
        return workspace.text(id, session)

    @app.put("/api/v1/source")
    async def put_source(id: str, request: Request, response: Response):
        require(id)
        if id in workspace.readonly:
            raise HTTPException(403, f"{id} is a built-in and read-only")
        session = session_of(request, response)
        text = (await request.body()).decode("utf-8")
        workspace.put(id, session, text)
        return {"id": id, "bytes": len(text)}

    @app.post("/api/v1/verify")
    def verify(id: str, request: Request, response: Response):
        require(id)
        session = session_of(request, response)
        try:
            return workspace.verify(id, session)
        except FrontEndError as exc:
            return JSONResponse(
                status_code=422,
                content={"diagnostics": [d.to_json() for d in exc.diagnostics]})

    if ide_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ide_dir, html=True), name="ide")

    return app
