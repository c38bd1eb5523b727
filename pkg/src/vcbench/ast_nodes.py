"""Syntax trees produced by the parser, before sort checking."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

MODES = ("updates", "replaces", "restores", "preserves", "evaluates",
         "alters", "clears")


# Raw expressions (shared by executable code and assertion clauses; the
# parser already separates what may appear where).

@dataclass(frozen=True)
class RawExp:
    kind: str                    # name|old|int|true|false|const|call|binop|unop|rel|rev|len|sing|result
    text: str = ""
    args: Tuple["RawExp", ...] = ()
    line: int = 0
    column: int = 0


@dataclass
class VarDecl:
    name: str
    type_name: str
    line: int


@dataclass
class Formal:
    mode: str
    name: str
    type_name: str
    line: int


@dataclass
class Stmt:
    line: int


@dataclass
class Swap(Stmt):
    left: str
    right: str


@dataclass
class Assign(Stmt):
    target: str
    value: RawExp


@dataclass
class CallStmt(Stmt):
    name: str
    args: List[RawExp]


@dataclass
class IfStmt(Stmt):
    cond: RawExp
    then_body: List[Stmt]
    else_body: List[Stmt]


@dataclass
class WhileStmt(Stmt):
    cond: RawExp
    maintaining: Optional[RawExp]
    decreasing: Optional[RawExp]
    changing: Optional[List[str]]
    body: List[Stmt]
    maintaining_line: int = 0
    decreasing_line: int = 0


@dataclass
class OperationDecl:
    name: str
    formals: List[Formal]
    result_type: Optional[str]
    requires: Optional[RawExp]
    ensures: Optional[RawExp]
    line: int
    requires_line: int = 0
    ensures_line: int = 0


@dataclass
class ProcedureDecl:
    name: str
    formals: List[Formal]
    result_type: Optional[str]
    decreasing: Optional[RawExp]
    locals: List[VarDecl]
    body: List[Stmt]
    line: int
    decreasing_line: int = 0


@dataclass
class TypeDecl:
    name: str
    model: str                      # "Int" or "Str"
    model_entry: Optional[str]      # entry type parameter for Str models
    constraint: Optional[RawExp]
    line: int


@dataclass
class SourceModule:
    kind: str                       # concept | enhancement | realization | facility
    name: str
    type_params: List[str] = field(default_factory=list)
    const_params: List[Tuple[str, str]] = field(default_factory=list)
    for_enhancement: Optional[str] = None   # realizations
    for_concept: Optional[str] = None       # enhancements + realizations
    uses: List[str] = field(default_factory=list)
    constraint: Optional[RawExp] = None     # concepts
    types: List[TypeDecl] = field(default_factory=list)
    operations: List[OperationDecl] = field(default_factory=list)
    procedures: List[ProcedureDecl] = field(default_factory=list)
    source_text: str = ""
    line: int = 1

    @property
    def line_count(self) -> int:
        return self.source_text.count("\n") + 1
