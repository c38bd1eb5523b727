"""Pretty-printer for parsed modules; re-parsing its output yields a
structurally identical tree (modulo line numbers)."""
from __future__ import annotations

from typing import List

from . import ast_nodes as A

_PREC = {"implies": 1, "and": 2, "not": 3,
         "=": 4, "/=": 4, "<=": 4, "<": 4,
         "+": 5, "-": 5, "o": 6}


def _prec_of(exp: A.RawExp) -> int:
    if exp.kind in ("binop", "rel", "unop"):
        return _PREC[exp.text if exp.kind != "unop" else "not"]
    return 10


def render_raw(exp: A.RawExp, parent: int = 0) -> str:
    kind = exp.kind
    if kind == "name":
        return exp.text
    if kind == "int":
        return exp.text
    if kind in ("true", "false", "const", "result"):
        return exp.text
    if kind == "old":
        return "#" + exp.text
    if kind == "rev":
        return f"Reverse({render_raw(exp.args[0])})"
    if kind == "len":
        return f"|{render_raw(exp.args[0])}|"
    if kind == "sing":
        return f"<{render_raw(exp.args[0])}>"
    if kind == "call":
        inner = ", ".join(render_raw(a) for a in exp.args)
        return f"{exp.text}({inner})"
    if kind == "unop":
        return "not " + _paren(exp.args[0], _PREC["not"])
    if kind in ("binop", "rel"):
        op = exp.text
        p = _PREC[op]
        a, b = exp.args
        if op == "implies":
            return f"{_paren(a, p)} implies {render_raw(b, p - 1)}"
        left_limit = p - 1 if op in ("and", "o", "+", "-") else p
        return f"{_paren(a, left_limit)} {op} {_paren(b, p)}"
    raise AssertionError(f"unprintable raw expression {kind}")


def _paren(exp: A.RawExp, limit: int) -> str:
    text = render_raw(exp, limit)
    if _prec_of(exp) <= limit:
        return f"({text})"
    return text


def _formals(formals: List[A.Formal]) -> str:
    return "; ".join(f"{f.mode} {f.name}: {f.type_name}" for f in formals)


def _stmts(body: List[A.Stmt], indent: str) -> List[str]:
    out: List[str] = []
    for stmt in body:
        if isinstance(stmt, A.Swap):
            out.append(f"{indent}{stmt.left} :=: {stmt.right};")
        elif isinstance(stmt, A.Assign):
            out.append(f"{indent}{stmt.target} := {render_raw(stmt.value)};")
        elif isinstance(stmt, A.CallStmt):
            args = ", ".join(render_raw(a) for a in stmt.args)
            out.append(f"{indent}{stmt.name}({args});")
        elif isinstance(stmt, A.IfStmt):
            out.append(f"{indent}If {render_raw(stmt.cond)} then")
            out.extend(_stmts(stmt.then_body, indent + "    "))
            if stmt.else_body:
                out.append(f"{indent}Else")
                out.extend(_stmts(stmt.else_body, indent + "    "))
            out.append(f"{indent}end;")
        elif isinstance(stmt, A.WhileStmt):
            out.append(f"{indent}While {render_raw(stmt.cond)}")
            if stmt.maintaining is not None:
                out.append(f"{indent}    maintaining {render_raw(stmt.maintaining)};")
            if stmt.decreasing is not None:
                out.append(f"{indent}    decreasing {render_raw(stmt.decreasing)};")
            if stmt.changing is not None:
                out.append(f"{indent}    changing {', '.join(stmt.changing)};")
            out.append(f"{indent}do")
            out.extend(_stmts(stmt.body, indent + "    "))
            out.append(f"{indent}end;")
        else:
            raise AssertionError(f"unprintable statement {stmt!r}")
    return out


def _operation(op: A.OperationDecl, indent: str) -> List[str]:
    head = f"{indent}Operation {op.name} ({_formals(op.formals)})"
    if op.result_type:
        head += f": {op.result_type}"
    out = [head + ";"]
    if op.requires is not None:
        out.append(f"{indent}    requires {render_raw(op.requires)};")
    if op.ensures is not None:
        out.append(f"{indent}    ensures {render_raw(op.ensures)};")
    return out


def _procedure(proc: A.ProcedureDecl, indent: str) -> List[str]:
    head = f"{indent}Procedure {proc.name} ({_formals(proc.formals)})"
    if proc.result_type:
        head += f": {proc.result_type}"
    out = [head + ";"]
    if proc.decreasing is not None:
        out.append(f"{indent}    decreasing {render_raw(proc.decreasing)};")
    for decl in proc.locals:
        out.append(f"{indent}    Var {decl.name}: {decl.type_name};")
    out.extend(_stmts(proc.body, indent + "    "))
    out.append(f"{indent}end {proc.name};")
    return out


def render_module(mod: A.SourceModule) -> str:
    lines: List[str] = []
    if mod.kind == "concept":
        params = [f"type {p}" for p in mod.type_params]
        params += [f"{n}: {t}" for n, t in mod.const_params]
        head = f"Concept {mod.name}"
        if params:
            head += " (" + "; ".join(params) + ")"
        lines.append(head + ";")
    elif mod.kind == "enhancement":
        lines.append(f"Enhancement {mod.name} for {mod.for_concept};")
    elif mod.kind == "realization":
        lines.append(f"Realization {mod.name} for {mod.for_enhancement} of {mod.for_concept};")
    else:
        lines.append(f"Facility {mod.name};")
    if mod.uses:
        lines.append(f"    uses {', '.join(mod.uses)};")
    if mod.constraint is not None:
        lines.append(f"    constraint {render_raw(mod.constraint)};")
    for t in mod.types:
        model = t.model if t.model == "Int" else f"Str({t.model_entry})"
        decl = f"    Type {t.name} is modeled by {model}"
        if t.constraint is not None:
            decl += f" constraint {render_raw(t.constraint)}"
        lines.append(decl + ";")
    if mod.kind == "facility":
        for op, proc in zip(mod.operations, mod.procedures):
            lines.extend(_operation(op, "    "))
            lines.extend(_procedure(proc, "    "))
    else:
        for op in mod.operations:
            lines.extend(_operation(op, "    "))
        for proc in mod.procedures:
            lines.extend(_procedure(proc, "    "))
    lines.append(f"end {mod.name};")
    return "\n".join(lines) + "\n"
