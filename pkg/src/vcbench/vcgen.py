"""Forward-path VC generation under design-by-contract rules.

Paths split at If statements and run independently to procedure end; loops
are the only join points. VC ids are g_c where g is a region delimited by
loop boundaries (a loop's body and its exit each open a region) and c
numbers the conjuncts confirmed in that region, in emission order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import exprs as E
from .checker import (MUTATING_MODES, ProgramType, TAssign, TCall, TExp, TIf,
                      TRel, TStmt, TSwap, TWhile, TypedContract, TypedModule,
                      TypedProcedure)

KIND_PRECONDITION = "operation-precondition"
KIND_BASE = "loop-invariant-base"
KIND_PRESERVE = "loop-invariant-preservation"
KIND_PROGRESS = "termination-progress"
KIND_BOUND = "termination-bound"
KIND_ENSURES = "procedure-ensures"
KIND_RESTORES = "restores-obligation"


@dataclass(frozen=True)
class Given:
    index: int
    exp: E.Exp
    relevant: bool = True


@dataclass(frozen=True)
class VC:
    region: int
    index: int
    line: int
    kind: str
    goal: E.Exp
    givens: Tuple[Given, ...]
    description: str

    @property
    def id(self) -> str:
        return f"{self.region}_{self.index}"


class _Numbering:
    def __init__(self) -> None:
        self.next_region = 0
        self.counters: Dict[int, int] = {}

    def alloc_region(self) -> int:
        region = self.next_region
        self.next_region += 1
        self.counters[region] = 0
        return region

    def next_index(self, region: int) -> int:
        self.counters[region] += 1
        return self.counters[region]


class PathContext:
    def __init__(self, state: E.ValueState, region: int,
                 numbering: _Numbering, out: List[VC],
                 type_of: Dict[str, ProgramType]):
        self.state = state
        self.region = region
        self.numbering = numbering
        self.out = out
        self.type_of = type_of
        self.givens: List[E.Exp] = []

    def copy(self) -> "PathContext":
        twin = PathContext(self.state.copy(), self.region, self.numbering,
                           self.out, self.type_of)
        twin.givens = list(self.givens)
        return twin

    def assume(self, exp: E.Exp) -> None:
        for part in E.split_conjuncts(exp):
            if part == E.TRUE:
                continue
            assert not E.mentions_old(part) and not E.mentions_qvar(part)
            self.givens.append(part)

    def advance(self, name: str) -> E.Exp:
        """Fresh primed value plus its type-constraint givens."""
        value = self.state.advance(name)
        self.type_facts(name, value)
        return value

    def type_facts(self, name: str, value: E.Exp) -> None:
        ptype = self.type_of.get(name)
        if ptype is not None and ptype.constraint is not None:
            self.assume(E.substitute(ptype.constraint,
                                     {E.var(ptype.name, ptype.sort): value}))

    def confirm(self, goal: E.Exp, kind: str, line: int, description: str,
                region: Optional[int] = None) -> None:
        assert not E.mentions_old(goal) and not E.mentions_qvar(goal)
        region = self.region if region is None else region
        index = self.numbering.next_index(region)
        givens = _number_givens(self.givens, goal)
        self.out.append(VC(region, index, line, kind, goal, givens, description))


def _number_givens(givens: List[E.Exp], goal: E.Exp) -> Tuple[Given, ...]:
    """Givens keep introduction order; ones mentioning no symbol reachable
    from the goal (transitively through other givens) are marked for
    display demotion."""
    reached = {s.payload for s in E.free_syms(goal)}
    sym_sets = [{s.payload for s in E.free_syms(g)} for g in givens]
    relevant = [False] * len(givens)
    changed = True
    while changed:
        changed = False
        for i, syms in enumerate(sym_sets):
            if not relevant[i] and (not syms or syms & reached):
                relevant[i] = True
                reached |= syms
                changed = True
    return tuple(Given(i + 1, g, relevant[i]) for i, g in enumerate(givens))


_EndHook = Callable[[PathContext], None]
_Pending = List[List[TStmt]]


def _branch(pending: _Pending, extra: List[TStmt]) -> _Pending:
    copied = [list(seq) for seq in pending]
    copied.append(list(extra))
    return copied


class _Generator:
    def __init__(self, typed: TypedModule):
        self.typed = typed
        self.numbering = _Numbering()
        self.out: List[VC] = []
        self.type_of: Dict[str, ProgramType] = {}
        self.types: Dict[str, ProgramType] = {}
        for concept in typed.used_concepts:
            self.types.update(concept.types)
            for p in concept.type_params:
                self.types[p] = ProgramType(p, E.ent(p), None, None, None)

    # -- contract instantiation helpers ------------------------------------

    def _subst_vars(self, contract: TypedContract, current: Dict[str, E.Exp],
                    entry: Optional[Dict[str, E.Exp]] = None) -> Dict[E.Exp, E.Exp]:
        binds: Dict[E.Exp, E.Exp] = {}
        for f in contract.formals:
            binds[E.var(f.name, f.sort)] = current[f.name]
            binds[E.old(f.name, f.sort)] = (entry or current)[f.name]
        return binds

    def _clause_binds(self, proc: TypedProcedure,
                      state: E.ValueState) -> Dict[E.Exp, E.Exp]:
        """Bindings for loop clauses: variables at current values, # markers
        at procedure-entry values."""
        binds: Dict[E.Exp, E.Exp] = {}
        for name in state.names():
            binds[E.var(name, state.sort_of(name))] = state.current(name)
        for f in proc.contract.formals:
            binds[E.old(f.name, f.sort)] = E.sym(f.name, 0, f.sort)
        return binds

    # -- top level -----------------------------------------------------------

    def generate(self) -> List[VC]:
        for proc in self.typed.procedures:
            self.procedure(proc)
        return sorted(self.out, key=lambda vc: (vc.region, vc.index))

    def procedure(self, proc: TypedProcedure) -> None:
        sorts = {f.name: f.sort for f in proc.contract.formals}
        self.type_of = {f.name: self.types[f.type_name]
                        for f in proc.contract.formals}
        for name, ptype, _line in proc.locals:
            sorts[name] = ptype.sort
            self.type_of[name] = ptype
        state = E.ValueState(sorts)
        ctx = PathContext(state, self.numbering.alloc_region(), self.numbering,
                          self.out, self.type_of)
        contract = proc.contract
        entry_vals = {f.name: state.entry(f.name) for f in contract.formals}
        # entry givens: requires conjuncts, then concept constraints, then
        # type facts, then local initial values
        ctx.assume(E.substitute(contract.requires,
                                self._subst_vars(contract, entry_vals)))
        for concept in self.typed.used_concepts:
            if concept.constraint is not None:
                ctx.assume(concept.constraint)
        for f in contract.formals:
            ctx.type_facts(f.name, entry_vals[f.name])
        for name, ptype, _line in proc.locals:
            if ptype.initial is not None:
                ctx.assume(E.eq(state.current(name), ptype.initial))
            ctx.type_facts(name, state.current(name))
        self.run(ctx, proc, [list(proc.body)],
                 lambda end_ctx: self.finalize(end_ctx, proc))

    # -- path execution ---------------------------------------------------------

    def run(self, ctx: PathContext, proc: TypedProcedure, pending: _Pending,
            on_end: _EndHook) -> None:
        while pending:
            seq = pending[-1]
            if not seq:
                pending.pop()
                continue
            stmt = seq.pop(0)
            if isinstance(stmt, TSwap):
                self.swap(ctx, stmt)
            elif isinstance(stmt, TAssign):
                self.assign(ctx, stmt)
            elif isinstance(stmt, TCall):
                self.call(ctx, proc, stmt)
            elif isinstance(stmt, TIf):
                cond = self.rel_exp(ctx, stmt.cond_exp)
                then_ctx = ctx.copy()
                then_ctx.assume(cond)
                self.run(then_ctx, proc, _branch(pending, stmt.then_body), on_end)
                else_ctx = ctx.copy()
                else_ctx.assume(E.negate(cond))
                self.run(else_ctx, proc, _branch(pending, stmt.else_body), on_end)
                return
            elif isinstance(stmt, TWhile):
                self.loop(ctx, proc, stmt, pending, on_end)
                return
            else:
                raise AssertionError(f"unknown statement {stmt!r}")
        on_end(ctx)

    def swap(self, ctx: PathContext, stmt: TSwap) -> None:
        left_old = ctx.state.current(stmt.left)
        right_old = ctx.state.current(stmt.right)
        left_new = ctx.advance(stmt.left)
        right_new = ctx.advance(stmt.right)
        ctx.assume(E.eq(left_new, right_old))
        ctx.assume(E.eq(right_new, left_old))

    def assign(self, ctx: PathContext, stmt: TAssign) -> None:
        value = self.mathematize(ctx, stmt.value)
        target = ctx.advance(stmt.target)
        ctx.assume(E.eq(target, value))

    def mathematize(self, ctx: PathContext, texp: TExp,
                    emit: bool = True) -> E.Exp:
        """Math meaning of an executable expression; requires clauses of the
        operations it invokes become VCs along the way."""
        if texp.kind == "int":
            return E.lit(texp.value)
        if texp.kind == "name":
            return ctx.state.current(texp.name)
        contract = texp.contract
        args = [self.mathematize(ctx, a, emit) for a in texp.args]
        values = {f.name: v for f, v in zip(contract.formals, args)}
        binds = self._subst_vars(contract, values)
        if emit:
            self.confirm_requires(ctx, contract, binds, texp.line)
        return E.substitute(contract.result_exp(), binds)

    def confirm_requires(self, ctx: PathContext, contract: TypedContract,
                         binds: Dict[E.Exp, E.Exp], line: int) -> None:
        conjuncts = [c for c in
                     E.split_conjuncts(E.substitute(contract.requires, binds))
                     if c != E.TRUE]
        for i, conjunct in enumerate(conjuncts, start=1):
            suffix = f" (conjunct {i})" if len(conjuncts) > 1 else ""
            ctx.confirm(conjunct, KIND_PRECONDITION, line,
                        f"requires clause of {contract.name}{suffix}")

    def rel_exp(self, ctx: PathContext, rel: TRel, emit: bool = True) -> E.Exp:
        left = self.mathematize(ctx, rel.left, emit)
        right = self.mathematize(ctx, rel.right, emit)
        return E.rebuild(rel.op, (left, right))

    def call(self, ctx: PathContext, proc: TypedProcedure, stmt: TCall) -> None:
        contract = stmt.contract
        pre_vals: Dict[str, E.Exp] = {}
        for formal, arg in zip(contract.formals, stmt.args):
            if formal.mode == "evaluates":
                pre_vals[formal.name] = self.mathematize(ctx, arg)
            else:
                pre_vals[formal.name] = ctx.state.current(arg.name)
        binds_pre = self._subst_vars(contract, pre_vals)
        self.confirm_requires(ctx, contract, binds_pre, stmt.line)
        if stmt.is_recursive:
            metric = proc.decreasing
            entry_binds = self._subst_vars(
                proc.contract, {f.name: E.sym(f.name, 0, f.sort)
                                for f in proc.contract.formals})
            goal = E.lt(E.substitute(metric, binds_pre),
                        E.substitute(metric, entry_binds))
            ctx.confirm(goal, KIND_PROGRESS, stmt.line,
                        f"recursive call to {contract.name} decreases its metric")
        post_vals = dict(pre_vals)
        for formal, arg in zip(contract.formals, stmt.args):
            if formal.mode in MUTATING_MODES:
                post_vals[formal.name] = ctx.advance(arg.name)
        binds_post = self._subst_vars(contract, post_vals, entry=pre_vals)
        ctx.assume(E.substitute(contract.ensures, binds_post))
        for formal, arg in zip(contract.formals, stmt.args):
            if formal.mode == "clears":
                initial = self.type_of[arg.name].initial
                if initial is not None:
                    ctx.assume(E.eq(post_vals[formal.name], initial))

    def loop(self, ctx: PathContext, proc: TypedProcedure, stmt: TWhile,
             pending: _Pending, on_end: _EndHook) -> None:
        inv_line = stmt.maintaining_line or stmt.line
        metric_line = stmt.decreasing_line or stmt.line

        def inv_at(state: E.ValueState) -> E.Exp:
            return E.substitute(stmt.maintaining, self._clause_binds(proc, state))

        def metric_at(state: E.ValueState) -> E.Exp:
            return E.substitute(stmt.decreasing, self._clause_binds(proc, state))

        base = E.split_conjuncts(inv_at(ctx.state))
        for i, conjunct in enumerate(base, start=1):
            suffix = f" (conjunct {i})" if len(base) > 1 else ""
            ctx.confirm(conjunct, KIND_BASE, inv_line,
                        f"loop invariant holds at entry{suffix}")

        # arbitrary iteration: fresh changing values, invariant + condition
        body_ctx = ctx.copy()
        body_ctx.region = self.numbering.alloc_region()
        for name in stmt.changing:
            body_ctx.advance(name)
        body_ctx.assume(inv_at(body_ctx.state))
        cond = self.rel_exp(body_ctx, stmt.cond_exp)  # condition requires VCs
        body_ctx.assume(cond)
        metric_start = metric_at(body_ctx.state)
        preserved: List[PathContext] = []

        def close_body(end_ctx: PathContext) -> None:
            end_ctx.confirm(E.lt(metric_at(end_ctx.state), metric_start),
                            KIND_PROGRESS, metric_line,
                            "loop progress metric decreases")
            end_ctx.confirm(E.le(E.lit(0), metric_at(end_ctx.state)),
                            KIND_BOUND, metric_line,
                            "loop progress metric stays nonnegative")
            preserved.append(end_ctx)

        self.run(body_ctx, proc, [list(stmt.body)], close_body)

        # the exit region opens with the preservation conjuncts, then the
        # path after the loop continues in it
        exit_region = self.numbering.alloc_region()
        for end_ctx in preserved:
            conjuncts = E.split_conjuncts(inv_at(end_ctx.state))
            for i, conjunct in enumerate(conjuncts, start=1):
                suffix = f" (conjunct {i})" if len(conjuncts) > 1 else ""
                end_ctx.confirm(conjunct, KIND_PRESERVE, inv_line,
                                f"loop invariant preserved{suffix}",
                                region=exit_region)

        exit_ctx = ctx.copy()
        exit_ctx.region = exit_region
        for name in stmt.changing:
            exit_ctx.advance(name)
        exit_ctx.assume(inv_at(exit_ctx.state))
        exit_cond = self.rel_exp(exit_ctx, stmt.cond_exp, emit=False)
        exit_ctx.assume(E.negate(exit_cond))
        self.run(exit_ctx, proc, pending, on_end)

    def finalize(self, ctx: PathContext, proc: TypedProcedure) -> None:
        contract = proc.contract
        current = {f.name: ctx.state.current(f.name) for f in contract.formals}
        entry = {f.name: ctx.state.entry(f.name) for f in contract.formals}
        binds = self._subst_vars(contract, current, entry=entry)
        line = self._ensures_line(proc)
        conjuncts = E.split_conjuncts(E.substitute(contract.ensures, binds))
        for i, conjunct in enumerate(conjuncts, start=1):
            suffix = f" (conjunct {i})" if len(conjuncts) > 1 else ""
            ctx.confirm(conjunct, KIND_ENSURES, line,
                        f"ensures clause of {contract.name}{suffix}")
        for f in contract.formals:
            if f.mode != "restores":
                continue
            if self._ensures_covers_restore(contract, f.name):
                continue
            ctx.confirm(E.eq(current[f.name], entry[f.name]), KIND_RESTORES,
                        proc.line,
                        f"restores-mode parameter {f.name} returns unchanged")

    def _ensures_line(self, proc: TypedProcedure) -> int:
        # a realization's ensures clause lives in the enhancement file; the
        # anchor must exist in the verified source
        line = proc.contract.ensures_line or proc.contract.line
        if self.typed.kind == "facility" and line:
            return line
        return proc.line

    def _ensures_covers_restore(self, contract: TypedContract, name: str) -> bool:
        sort = next(f.sort for f in contract.formals if f.name == name)
        v, o = E.var(name, sort), E.old(name, sort)
        for part in E.split_conjuncts(contract.ensures):
            if part.kind == "app" and part.op == "=" and (
                    (part.args[0] == v and part.args[1] == o) or
                    (part.args[0] == o and part.args[1] == v)):
                return True
        return False


def generate_vcs(typed: TypedModule) -> List[VC]:
    """Deterministic, line-anchored VCs for every procedure in the module."""
    return _Generator(typed).generate()
