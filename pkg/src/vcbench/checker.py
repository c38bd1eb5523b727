"""Sort checking and contract resolution.

Calls resolve against concept contracts only, never implementations;
program types map to their mathematical models (Integer to Int, queues and
stacks to strings of entries).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import ast_nodes as A
from . import exprs as E
from .diagnostics import Diagnostic, FrontEndError, error

MUTATING_MODES = ("updates", "replaces", "alters", "clears")


@dataclass(frozen=True)
class TypedFormal:
    mode: str
    name: str
    type_name: str
    sort: str


@dataclass
class TypedContract:
    name: str
    concept: str                  # owning concept/enhancement/facility name
    formals: List[TypedFormal]
    requires: E.Exp               # TRUE when absent
    ensures: E.Exp
    decreasing: Optional[E.Exp] = None
    result_sort: Optional[str] = None
    result_type: Optional[str] = None
    line: int = 0
    requires_line: int = 0
    ensures_line: int = 0

    @property
    def is_function(self) -> bool:
        return self.result_sort is not None

    def result_exp(self) -> E.Exp:
        """The right-hand side of the equational `result = ...` ensures."""
        assert self.is_function
        return self.ensures.args[1]


@dataclass
class ProgramType:
    name: str
    sort: str                     # Int or Str
    entry: Optional[str]
    constraint: Optional[E.Exp]   # over var(name) as the value placeholder
    initial: Optional[E.Exp]      # Int -> 0, Str -> empty_string, entries -> None


@dataclass
class ConceptInfo:
    name: str
    type_params: List[str] = field(default_factory=list)
    const_params: List[Tuple[str, str]] = field(default_factory=list)  # (name, sort)
    constraint: Optional[E.Exp] = None
    types: Dict[str, ProgramType] = field(default_factory=dict)
    contracts: Dict[str, List[TypedContract]] = field(default_factory=dict)

    def add_contract(self, c: TypedContract) -> None:
        self.contracts.setdefault(c.name, []).append(c)


@dataclass
class EnhancementInfo:
    name: str
    concept_name: str
    contract: TypedContract


class Library:
    """Checked concepts and enhancements available to later modules."""

    def __init__(self) -> None:
        self.concepts: Dict[str, ConceptInfo] = {}
        self.enhancements: Dict[str, EnhancementInfo] = {}

    def add(self, typed: "TypedModule") -> None:
        if typed.kind == "concept":
            self.concepts[typed.concept.name] = typed.concept
        elif typed.kind == "enhancement":
            enh = EnhancementInfo(typed.module.name, typed.concept.name,
                                  typed.contract)
            self.enhancements[enh.name] = enh


# Typed statements ------------------------------------------------------

@dataclass
class TExp:
    """A typed executable expression: a name, a literal, or a contract-
    bearing application (Sum/Difference for + and -, function calls)."""
    kind: str                     # name | int | apply
    sort: str
    line: int
    name: str = ""
    value: int = 0
    contract: Optional[TypedContract] = None
    args: List["TExp"] = field(default_factory=list)


@dataclass
class TStmt:
    line: int


@dataclass
class TSwap(TStmt):
    left: str
    right: str


@dataclass
class TAssign(TStmt):
    target: str
    value: TExp


@dataclass
class TCall(TStmt):
    contract: TypedContract
    args: List[TExp]              # name-kind for non-evaluates formals
    is_recursive: bool = False


@dataclass
class TIf(TStmt):
    cond_exp: "TRel"
    then_body: List[TStmt] = field(default_factory=list)
    else_body: List[TStmt] = field(default_factory=list)


@dataclass
class TRel:
    op: str
    left: TExp
    right: TExp
    line: int


@dataclass
class TWhile(TStmt):
    cond_exp: TRel
    maintaining: E.Exp
    decreasing: E.Exp
    changing: List[str]
    changing_explicit: bool
    body: List[TStmt]
    maintaining_line: int = 0
    decreasing_line: int = 0


@dataclass
class TypedProcedure:
    contract: TypedContract
    decreasing: Optional[E.Exp]
    locals: List[Tuple[str, ProgramType, int]]
    body: List[TStmt]
    line: int
    decreasing_line: int = 0


@dataclass
class TypedModule:
    module: A.SourceModule
    kind: str
    concept: Optional[ConceptInfo]
    contract: Optional[TypedContract]          # enhancements
    procedures: List[TypedProcedure]
    used_concepts: List[ConceptInfo]
    resolved_external: List[str] = field(default_factory=list)
    resolves_self: bool = False

    @property
    def name(self) -> str:
        return self.module.name


# The checker -----------------------------------------------------------

class _Check:
    def __init__(self, module: A.SourceModule, library: Library):
        self.module = module
        self.library = library
        self.diags: List[Diagnostic] = []

    def fail(self, message: str, line: int, column: int = 1):
        raise FrontEndError(self.diags + [error(message, line, column)])

    # expression building over a name environment ------------------------

    def build_assertion(self, raw: A.RawExp, env: Dict[str, E.Exp],
                        old_env: Optional[Dict[str, E.Exp]],
                        result_sort: Optional[str] = None) -> E.Exp:
        def rec(x: A.RawExp) -> E.Exp:
            k = x.kind
            if k == "int":
                return E.lit(int(x.text))
            if k == "true":
                return E.TRUE
            if k == "false":
                return E.FALSE
            if k == "const":
                return {"min_int": E.MIN_INT, "max_int": E.MAX_INT,
                        "empty_string": E.EMPTY}[x.text]
            if k == "result":
                if result_sort is None:
                    self.fail("'result' is legal only in a function's ensures",
                              x.line, x.column)
                return E.var("result", result_sort)
            if k == "name":
                hit = env.get(x.text)
                if hit is None:
                    self.fail(f"unresolved name {x.text!r}", x.line, x.column)
                return hit
            if k == "old":
                if old_env is None:
                    self.fail("'#' refers to incoming values and is legal only in "
                              "ensures and loop clauses", x.line, x.column)
                hit = old_env.get(x.text)
                if hit is None:
                    self.fail(f"'#' applies to formal parameters only, not {x.text!r}",
                              x.line, x.column)
                return hit
            try:
                if k == "rev":
                    return E.rev(rec(x.args[0]))
                if k == "len":
                    return E.length(rec(x.args[0]))
                if k == "sing":
                    return E.sing(rec(x.args[0]))
                if k == "unop":
                    return E.neg(rec(x.args[0]))
                if k in ("binop", "rel"):
                    a, b = rec(x.args[0]), rec(x.args[1])
                    table = {"and": E.conj, "implies": E.implies, "=": E.eq,
                             "/=": E.ne, "<=": E.le, "<": E.lt, "+": E.add,
                             "-": E.sub, "o": E.cat}
                    return table[x.text](a, b)
            except E.SortError as exc:
                self.fail(str(exc), x.line, x.column)
            self.fail(f"cannot use a {k} expression here", x.line, x.column)
        return rec(raw)

    # contracts -----------------------------------------------------------

    def type_env(self, concept: Optional[ConceptInfo]) -> Dict[str, ProgramType]:
        env = dict(INTEGER.types)
        if concept is not None:
            env.update(concept.types)
            for p in concept.type_params:
                env[p] = ProgramType(p, E.ent(p), None, None, None)
        return env

    def const_env(self, concept: Optional[ConceptInfo]) -> Dict[str, E.Exp]:
        env: Dict[str, E.Exp] = {}
        if concept is not None:
            for cname, csort in concept.const_params:
                env[cname] = E.sym(cname, 0, csort)
        return env

    def build_contract(self, decl: A.OperationDecl, owner: str,
                       types: Dict[str, ProgramType],
                       consts: Dict[str, E.Exp]) -> TypedContract:
        formals: List[TypedFormal] = []
        seen = set()
        for f in decl.formals:
            if f.name in seen:
                self.fail(f"duplicate formal {f.name!r}", f.line)
            seen.add(f.name)
            ptype = types.get(f.type_name)
            if ptype is None:
                self.fail(f"unknown type {f.type_name!r}", f.line)
            formals.append(TypedFormal(f.mode, f.name, f.type_name, ptype.sort))
        result_sort = result_type = None
        if decl.result_type is not None:
            ptype = types.get(decl.result_type)
            if ptype is None:
                self.fail(f"unknown result type {decl.result_type!r}", decl.line)
            result_sort, result_type = ptype.sort, ptype.name
            bad = [f for f in formals if f.mode not in
                   ("restores", "preserves", "evaluates")]
            if bad:
                self.fail(f"function operations may not have {bad[0].mode}-mode "
                          f"formals", decl.line)
        env = dict(consts)
        env.update({f.name: E.var(f.name, f.sort) for f in formals})
        old_env = {f.name: E.old(f.name, f.sort) for f in formals}
        requires = E.TRUE
        if decl.requires is not None:
            requires = self.build_assertion(decl.requires, env, None)
            self._want_bool(requires, "requires", decl.requires_line)
        ensures = E.TRUE
        if decl.ensures is not None:
            ensures = self.build_assertion(decl.ensures, env, old_env, result_sort)
            self._want_bool(ensures, "ensures", decl.ensures_line)
        if result_sort is not None:
            shape_ok = (ensures.kind == "app" and ensures.op == "=" and
                        ensures.args[0] == E.var("result", result_sort) and
                        not any(n.kind == "old" or (n.kind == "var" and n.payload[0] == "result")
                                for n in E.walk(ensures.args[1])))
            if not shape_ok:
                self.fail(f"a function's ensures must have the shape "
                          f"'result = <expression>'", decl.ensures_line or decl.line)
        return TypedContract(decl.name, owner, formals, requires, ensures,
                             None, result_sort, result_type, decl.line,
                             decl.requires_line, decl.ensures_line)

    def _want_bool(self, exp: E.Exp, what: str, line: int):
        if exp.sort != E.BOOL:
            self.fail(f"{what} clause must be boolean-sorted", line)

    # module kinds ----------------------------------------------------------

    def check(self) -> TypedModule:
        mod = self.module
        if mod.kind == "concept":
            return self.check_concept()
        if mod.kind == "enhancement":
            return self.check_enhancement()
        if mod.kind == "realization":
            return self.check_realization()
        return self.check_facility()

    def check_concept(self) -> TypedModule:
        mod = self.module
        info = ConceptInfo(mod.name, list(mod.type_params))
        for pname, ptype in mod.const_params:
            if ptype != "Integer":
                self.fail(f"constant parameters are Integer, not {ptype!r}", mod.line)
            info.const_params.append((pname, E.INT))
        consts = self.const_env(info)
        if mod.constraint is not None:
            exp = self.build_assertion(mod.constraint, dict(consts), None)
            self._want_bool(exp, "constraint", mod.line)
            info.constraint = exp
        for t in mod.types:
            if t.model == "Int":
                sort: str = E.INT
                initial: Optional[E.Exp] = E.lit(0)
            else:
                if t.model_entry not in mod.type_params:
                    self.fail(f"unknown entry type {t.model_entry!r}", t.line)
                sort, initial = E.STR, E.EMPTY
            constraint = None
            if t.constraint is not None:
                env = dict(consts)
                env[t.name] = E.var(t.name, sort)
                constraint = self.build_assertion(t.constraint, env, None)
                self._want_bool(constraint, "type constraint", t.line)
            info.types[t.name] = ProgramType(t.name, sort, t.model_entry,
                                             constraint, initial)
        types = self.type_env(info)
        for op in mod.operations:
            info.add_contract(self.build_contract(op, mod.name, types, consts))
        return TypedModule(mod, "concept", info, None, [], [info])

    def _target_concept(self, name: str, line: int) -> ConceptInfo:
        concept = self.library.concepts.get(name)
        if concept is None:
            self.fail(f"unknown concept {name!r}", line)
        return concept

    def check_enhancement(self) -> TypedModule:
        mod = self.module
        concept = self._target_concept(mod.for_concept, mod.line)
        types = self.type_env(concept)
        consts = self.const_env(concept)
        contract = self.build_contract(mod.operations[0], mod.name, types, consts)
        return TypedModule(mod, "enhancement", concept, contract, [],
                           [concept, INTEGER])

    def check_realization(self) -> TypedModule:
        mod = self.module
        enh = self.library.enhancements.get(mod.for_enhancement)
        if enh is None:
            self.fail(f"unknown enhancement {mod.for_enhancement!r}", mod.line)
        concept = self._target_concept(mod.for_concept, mod.line)
        if enh.concept_name != concept.name:
            self.fail(f"enhancement {enh.name!r} extends {enh.concept_name!r}, "
                      f"not {concept.name!r}", mod.line)
        proc_decl = mod.procedures[0]
        if proc_decl.name != enh.contract.name:
            self.fail(f"realization must implement {enh.contract.name!r}",
                      proc_decl.line)
        scope = _Scope(self, concept, [concept, INTEGER],
                       self_contract=enh.contract)
        proc = scope.check_procedure(proc_decl, enh.contract)
        typed = TypedModule(mod, "realization", concept, enh.contract, [proc],
                            [concept, INTEGER], scope.resolved_external,
                            scope.resolves_self)
        return typed

    def check_facility(self) -> TypedModule:
        mod = self.module
        used = [INTEGER]
        for name in mod.uses:
            concept = self.library.concepts.get(name)
            if concept is not None:
                if concept.type_params:
                    self.fail(f"facilities cannot use the generic concept "
                              f"{name!r} without instantiation", mod.line)
                if concept.name not in (c.name for c in used):
                    used.append(concept)
        procedures: List[TypedProcedure] = []
        resolved: List[str] = []
        types = dict(INTEGER.types)
        for c in used:
            types.update(c.types)
        for op_decl, proc_decl in zip(mod.operations, mod.procedures):
            contract = self.build_contract(op_decl, mod.name, types, {})
            scope = _Scope(self, None, used, self_contract=contract)
            procedures.append(scope.check_procedure(proc_decl, contract))
            resolved.extend(scope.resolved_external)
        return TypedModule(mod, "facility", None, None, procedures, used,
                           resolved)


class _Scope:
    """Checks one procedure body against the contracts in scope."""

    def __init__(self, check: _Check, concept: Optional[ConceptInfo],
                 used: List[ConceptInfo], self_contract: TypedContract):
        self.check = check
        self.concept = concept
        self.used = used
        self.self_contract = self_contract
        self.vars: Dict[str, ProgramType] = {}
        self.resolved_external: List[str] = []
        self.resolves_self = False
        self.has_recursion = False

    def fail(self, message: str, line: int, column: int = 1):
        self.check.fail(message, line, column)

    # ---- resolution

    def candidates(self, name: str) -> List[TypedContract]:
        out: List[TypedContract] = []
        if self.self_contract is not None and name == self.self_contract.name:
            out.append(self.self_contract)
        for concept in self.used:
            out.extend(concept.contracts.get(name, []))
        return out

    def resolve(self, name: str, arg_sorts: List[str], line: int) -> TypedContract:
        cands = self.candidates(name)
        if not cands:
            self.fail(f"unresolved operation {name!r}", line)
        matches = [c for c in cands
                   if len(c.formals) == len(arg_sorts)
                   and all(f.sort == s for f, s in zip(c.formals, arg_sorts))]
        if not matches:
            self.fail(f"no contract for {name!r} accepts arguments of sorts "
                      f"({', '.join(arg_sorts)})", line)
        if len(matches) > 1:
            self.fail(f"call to {name!r} is ambiguous", line)
        hit = matches[0]
        if hit is self.self_contract:
            self.resolves_self = True
        elif hit.name not in self.resolved_external:
            self.resolved_external.append(hit.name)
        return hit

    def integer_op(self, name: str) -> TypedContract:
        return INTEGER.contracts[name][0]

    # ---- procedure

    def check_procedure(self, decl: A.ProcedureDecl,
                        contract: TypedContract) -> TypedProcedure:
        if [(f.mode, f.name, f.type_name) for f in decl.formals] != \
           [(f.mode, f.name, f.type_name) for f in contract.formals]:
            self.fail(f"procedure formals do not match the declared contract "
                      f"of {contract.name!r}", decl.line)
        types = self.check.type_env(self.concept)
        for concept in self.used:
            if not concept.type_params:
                types.update(concept.types)
        for f in decl.formals:
            ptype = types.get(f.type_name)
            if ptype is None:
                self.fail(f"unknown type {f.type_name!r}", f.line)
            self.vars[f.name] = ptype
        locals_: List[Tuple[str, ProgramType, int]] = []
        for v in decl.locals:
            if v.name in self.vars:
                self.fail(f"{v.name!r} is already declared", v.line)
            ptype = types.get(v.type_name)
            if ptype is None:
                self.fail(f"unknown type {v.type_name!r}", v.line)
            self.vars[v.name] = ptype
            locals_.append((v.name, ptype, v.line))
        decreasing = None
        if decl.decreasing is not None:
            decreasing = self.assertion(decl.decreasing, allow_old=False)
            if decreasing.sort != E.INT:
                self.fail("decreasing clause must be integer-sorted",
                          decl.decreasing_line)
        body = self.stmts(decl.body)
        if self.has_recursion and decreasing is None:
            self.fail(f"recursive procedure {decl.name!r} needs a decreasing "
                      f"clause to state its termination obligation", decl.line)
        return TypedProcedure(contract, decreasing, locals_, body, decl.line,
                              decl.decreasing_line)

    # ---- assertions inside the body (loop clauses)

    def assertion(self, raw: A.RawExp, allow_old: bool = True) -> E.Exp:
        env = dict(self.check.const_env(self.concept))
        for name, ptype in self.vars.items():
            env[name] = E.var(name, ptype.sort)
        old_env = None
        if allow_old:
            old_env = {f.name: E.old(f.name, f.sort)
                       for f in self.self_contract.formals}
        return self.check.build_assertion(raw, env, old_env)

    # ---- statements

    def stmts(self, body: List[A.Stmt]) -> List[TStmt]:
        return [self.stmt(s) for s in body]

    def stmt(self, s: A.Stmt) -> TStmt:
        if isinstance(s, A.Swap):
            lt = self.var_type(s.left, s.line)
            rt = self.var_type(s.right, s.line)
            if lt.sort != rt.sort or lt.name != rt.name:
                self.fail(f"':=:' swaps two variables of the same type", s.line)
            return TSwap(s.line, s.left, s.right)
        if isinstance(s, A.Assign):
            target = self.var_type(s.target, s.line)
            value = self.exp(s.value)
            if target.sort == E.INT:
                if value.sort != E.INT:
                    self.fail("cannot assign a non-integer to an Integer", s.line)
            else:
                if value.kind != "apply":
                    self.fail("':=' moves data only from function results; use "
                              "':=:' for variables of this type", s.line)
                if value.sort != target.sort:
                    self.fail("assignment sorts differ", s.line)
            return TAssign(s.line, s.target, value)
        if isinstance(s, A.CallStmt):
            return self.call(s)
        if isinstance(s, A.IfStmt):
            cond = self.condition(s.cond)
            return TIf(s.line, cond, self.stmts(s.then_body),
                       self.stmts(s.else_body))
        if isinstance(s, A.WhileStmt):
            return self.while_stmt(s)
        raise AssertionError(f"unknown statement {s!r}")

    def while_stmt(self, s: A.WhileStmt) -> TWhile:
        cond = self.condition(s.cond)
        maintaining = E.TRUE
        if s.maintaining is not None:
            maintaining = self.assertion(s.maintaining)
            if maintaining.sort != E.BOOL:
                self.fail("maintaining clause must be boolean-sorted",
                          s.maintaining_line)
        if s.decreasing is None:
            self.fail("While loop needs a decreasing clause to state its "
                      "termination obligation", s.line)
        decreasing = self.assertion(s.decreasing)
        if decreasing.sort != E.INT:
            self.fail("decreasing clause must be integer-sorted",
                      s.decreasing_line)
        explicit = s.changing is not None
        if explicit:
            for name in s.changing:
                self.var_type(name, s.line)
            changing = list(s.changing)
        else:
            changing = []
        body = self.stmts(s.body)
        if not explicit:
            changing = assigned_variables(body)
        return TWhile(s.line, cond, maintaining, decreasing, changing,
                      explicit, body, s.maintaining_line, s.decreasing_line)

    def call(self, s: A.CallStmt) -> TCall:
        args = [self.exp(a) for a in s.args]
        contract = self.resolve(s.name, [a.sort for a in args], s.line)
        if contract.is_function:
            self.fail(f"{s.name!r} is a function; use it in an expression",
                      s.line)
        self.mode_check(contract, args, s.line)
        recursive = contract is self.self_contract
        if recursive:
            self.has_recursion = True
        return TCall(s.line, contract, args, recursive)

    def mode_check(self, contract: TypedContract, args: List[TExp], line: int):
        mutated: List[str] = []
        for formal, arg in zip(contract.formals, args):
            if formal.mode == "evaluates":
                continue
            if arg.kind != "name":
                self.fail(f"the {formal.mode}-mode formal {formal.name!r} of "
                          f"{contract.name!r} requires a variable argument", line)
            if formal.mode in MUTATING_MODES:
                mutated.append(arg.name)
        names = [a.name for a in args if a.kind == "name"]
        for name in mutated:
            if names.count(name) > 1:
                self.fail(f"variable {name!r} is passed twice to {contract.name!r} "
                          f"while being modified", line)

    def condition(self, raw: A.RawExp) -> TRel:
        assert raw.kind == "rel"
        left = self.exp(raw.args[0])
        right = self.exp(raw.args[1])
        if left.sort != E.INT or right.sort != E.INT:
            self.fail("conditions compare Integer expressions", raw.line)
        return TRel(raw.text, left, right, raw.line)

    def var_type(self, name: str, line: int) -> ProgramType:
        ptype = self.vars.get(name)
        if ptype is None:
            self.fail(f"unresolved variable {name!r}", line)
        return ptype

    def exp(self, raw: A.RawExp) -> TExp:
        k = raw.kind
        if k == "int":
            return TExp("int", E.INT, raw.line, value=int(raw.text))
        if k == "name":
            ptype = self.var_type(raw.text, raw.line)
            return TExp("name", ptype.sort, raw.line, name=raw.text)
        if k == "binop":
            left = self.exp(raw.args[0])
            right = self.exp(raw.args[1])
            if left.sort != E.INT or right.sort != E.INT:
                self.fail(f"'{raw.text}' applies to Integer expressions", raw.line)
            contract = self.integer_op("Sum" if raw.text == "+" else "Difference")
            return TExp("apply", E.INT, raw.line, contract=contract,
                        args=[left, right])
        if k == "call":
            args = [self.exp(a) for a in raw.args]
            contract = self.resolve(raw.text, [a.sort for a in args], raw.line)
            if not contract.is_function:
                self.fail(f"{raw.text!r} does not return a value", raw.line)
            self.mode_check(contract, args, raw.line)
            return TExp("apply", contract.result_sort, raw.line,
                        contract=contract, args=args)
        self.fail(f"cannot use this expression in executable code", raw.line)


def assigned_variables(body: List[TStmt]) -> List[str]:
    """Default changing list: every variable assigned anywhere in the body."""
    out: List[str] = []

    def note(name: str):
        if name not in out:
            out.append(name)

    def visit(stmts: List[TStmt]):
        for s in stmts:
            if isinstance(s, TSwap):
                note(s.left); note(s.right)
            elif isinstance(s, TAssign):
                note(s.target)
            elif isinstance(s, TCall):
                for formal, arg in zip(s.contract.formals, s.args):
                    if formal.mode in MUTATING_MODES and arg.kind == "name":
                        note(arg.name)
            elif isinstance(s, TIf):
                visit(s.then_body); visit(s.else_body)
            elif isinstance(s, TWhile):
                visit(s.body)
    visit(body)
    return out


def check_module(module: A.SourceModule, library: Library) -> TypedModule:
    return _Check(module, library).check()


# The pervasive Integer concept; its source also ships in the corpus for
# display, but the checker needs it before any file is loaded.
def _integer_concept() -> ConceptInfo:
    info = ConceptInfo("Integer_Template")
    rng = E.conj(E.le(E.MIN_INT, E.var("Integer", E.INT)),
                 E.le(E.var("Integer", E.INT), E.MAX_INT))
    info.types["Integer"] = ProgramType("Integer", E.INT, None, rng, E.lit(0))
    i = E.var("I", E.INT)
    j = E.var("J", E.INT)
    two = [TypedFormal("evaluates", "I", "Integer", E.INT),
           TypedFormal("evaluates", "J", "Integer", E.INT)]
    result = E.var("result", E.INT)
    info.add_contract(TypedContract(
        "Sum", "Integer_Template", two,
        E.conj(E.le(E.MIN_INT, E.add(i, j)), E.le(E.add(i, j), E.MAX_INT)),
        E.eq(result, E.add(i, j)), None, E.INT, "Integer"))
    info.add_contract(TypedContract(
        "Difference", "Integer_Template", two,
        E.conj(E.le(E.MIN_INT, E.sub(i, j)), E.le(E.sub(i, j), E.MAX_INT)),
        E.eq(result, E.sub(i, j)), None, E.INT, "Integer"))
    info.add_contract(TypedContract(
        "Replica", "Integer_Template",
        [TypedFormal("evaluates", "I", "Integer", E.INT)],
        E.TRUE, E.eq(result, i), None, E.INT, "Integer"))
    return info


INTEGER = _integer_concept()
