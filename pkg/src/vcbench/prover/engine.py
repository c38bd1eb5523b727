"""Proof sessions: assert givens, saturate by guarded theorem
instantiation, then check the goal directly - never by refutation.

The goal is read-only input to checking: its terms join the store only
after saturation, so which facts get asserted never depends on it.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .. import exprs as E
from ..theory import Theorem
from .linear import LinearLayer
from .matching import instantiate, trigger_matches
from .terms import TermBudget, TermStore

PROVED = "proved"
UNPROVABLE = "unprovable"
TIMEOUT = "timeout"


@dataclass(frozen=True)
class ProofBudget:
    max_rounds: int = 3
    timeout_ms: int = 5000
    max_terms: int = 2500


@dataclass
class TraceStep:
    rule: str               # theorem name, "given", or "goal"
    detail: str
    fact: str


@dataclass
class ProofResult:
    status: str
    elapsed_ms: int
    trace: List[TraceStep] = field(default_factory=list)
    saturation_complete: bool = True


class BudgetExceeded(Exception):
    pass


class ProofSession:
    def __init__(self, theorems: List[Theorem], budget: ProofBudget = ProofBudget()):
        self.store = TermStore(max_terms=budget.max_terms)
        self.theorems = theorems
        self.budget = budget
        self.literals: List[Tuple[str, int, int]] = []
        self._literal_keys: set = set()
        self.pending_implications: List[Tuple[E.Exp, E.Exp]] = []
        self.asserted_log: List[str] = []
        self.trace: List[TraceStep] = []
        self.contradiction = False
        self._instantiated: set = set()
        self._linear: Optional[LinearLayer] = None
        self._linear_version = -1
        self._deadline: Optional[float] = None
        self.saturation_complete = True
        for thm in theorems:
            if thm.is_ground:
                self._assert_exp(thm.conclusion, thm.name)

    # -- asserting ----------------------------------------------------------

    def assert_fact(self, exp: E.Exp) -> None:
        """Assert one given; conjunctions split, negations normalize,
        implications wait until their antecedent is entailed."""
        self._assert_exp(exp, "given")

    def _assert_exp(self, exp: E.Exp, origin: str) -> None:
        for part in E.split_conjuncts(exp):
            if part.kind == "app" and part.op == "not":
                part = E.negate(part.args[0])
            if part == E.TRUE:
                continue
            if part.kind == "app" and part.op == "implies":
                self.pending_implications.append((part.args[0], part.args[1]))
                self.asserted_log.append(("implication", part))
                continue
            if part.kind != "app" or part.op not in ("=", "/=", "<=", "<"):
                # inert boolean (e.g. a bare `false` given): recorded, never used
                self.asserted_log.append(("inert", part))
                continue
            a = self.store.intern_exp(part.args[0])
            b = self.store.intern_exp(part.args[1])
            self._assert_literal(part.op, a, b, origin)

    def _assert_literal(self, op: str, a: int, b: int, origin: str) -> None:
        self.asserted_log.append((origin, op, a, b))
        if op == "=":
            self.store.merge(a, b)
            return
        key = (op, self.store.find(a), self.store.find(b))
        if key in self._literal_keys:
            return
        self._literal_keys.add(key)
        self.literals.append((op, a, b))
        self.store.intern(op, (), (a, b), E.BOOL)   # matchable atom
        if op == "/=" and self.store.congruent(a, b):
            self.contradiction = True   # recorded, not exploited

    # -- queries ------------------------------------------------------------

    def linear(self) -> LinearLayer:
        if self._linear is None or self._linear_version != self.store.version:
            self._linear = LinearLayer(self.store, self.literals)
            self._linear_version = self.store.version
        return self._linear

    def _literal_holds(self, op: str, a: int, b: int) -> bool:
        fa, fb = self.store.find(a), self.store.find(b)
        for lop, la, lb in self.literals:
            if lop != op:
                continue
            ra, rb = self.store.find(la), self.store.find(lb)
            if (ra, rb) == (fa, fb):
                return True
            if op in ("=", "/=") and (rb, ra) == (fa, fb):
                return True
        return False

    def entailed(self, exp: E.Exp) -> bool:
        """Is this formula already a consequence of the session state?"""
        for part in E.split_conjuncts(exp):
            if part == E.TRUE:
                continue
            if part.kind != "app" or part.op not in ("=", "/=", "<=", "<"):
                return False
            a = self.store.intern_exp(part.args[0])
            b = self.store.intern_exp(part.args[1])
            if part.op == "=" and self.store.congruent(a, b):
                continue
            if self._literal_holds(part.op, a, b):
                continue
            if self.linear().entails(part.op, a, b):
                continue
            return False
        return True

    # -- saturation -----------------------------------------------------------

    def _check_deadline(self) -> None:
        if self._deadline is not None and time.perf_counter() > self._deadline:
            raise BudgetExceeded

    def saturate(self) -> None:
        try:
            for _ in range(self.budget.max_rounds):
                self._check_deadline()
                before = self.store.version
                n_literals = len(self.literals)
                self.store.structural_close()
                self._fire_implications()
                for thm in self.theorems:
                    if thm.is_ground:
                        continue
                    self._instantiate_theorem(thm)
                self.store.structural_close()
                if self.store.version == before and len(self.literals) == n_literals:
                    return
            # one more look for a late fixpoint
            before = self.store.version
            n_literals = len(self.literals)
            self.store.structural_close()
            if self.store.version != before or len(self.literals) != n_literals:
                self.saturation_complete = False
        except TermBudget:
            self.saturation_complete = False
        if self.store.budget_hit:
            self.saturation_complete = False

    def _fire_implications(self) -> None:
        remaining = []
        for antecedent, consequent in self.pending_implications:
            if self.entailed(antecedent):
                self._assert_exp(consequent, "implication")
            else:
                remaining.append((antecedent, consequent))
        self.pending_implications = remaining

    def _instantiate_theorem(self, thm: Theorem) -> None:
        order = [q.payload[0] for q in thm.universals]
        for env in trigger_matches(self.store, thm):
            self._check_deadline()
            key = (thm.name, tuple(self.store.find(env[n]) for n in order))
            if key in self._instantiated:
                continue
            if thm.hypothesis is not None:
                hyp = instantiate_formula(self.store, thm.hypothesis, env, self)
                if hyp is None:
                    continue
            self._instantiated.add(key)
            detail = ", ".join(f"{n} := {self.store.render(env[n])}" for n in order)
            for op, a, b in instantiate_literals(self.store, thm.conclusion, env):
                self.trace.append(TraceStep(thm.name, detail,
                                            f"{self.store.render(a)} {op} "
                                            f"{self.store.render(b)}"))
                self._assert_literal(op, a, b, thm.name)

    # -- goal checking ----------------------------------------------------------

    def check_goal(self, goal: E.Exp) -> bool:
        """Check the goal against the saturated state. Interns the goal's
        terms (a lookup, not an assertion) and decides directly."""
        if goal == E.TRUE:
            return True
        if goal.kind != "app" or goal.op not in ("=", "/=", "<=", "<"):
            return False
        try:
            a = self.store.intern_exp(goal.args[0])
            b = self.store.intern_exp(goal.args[1])
            self.store.structural_close()
        except TermBudget:
            self.saturation_complete = False
            return False
        if goal.op == "=" and self.store.congruent(a, b):
            self.trace.append(TraceStep("goal", "congruence", E.render(goal)))
            return True
        if self._literal_holds(goal.op, a, b):
            self.trace.append(TraceStep("goal", "asserted literal", E.render(goal)))
            return True
        if self.linear().entails(goal.op, a, b):
            self.trace.append(TraceStep("goal", "linear arithmetic", E.render(goal)))
            return True
        return False


def instantiate_formula(store: TermStore, exp: E.Exp, env: Dict[str, int],
                        session: ProofSession):
    """Hypothesis check: every conjunct must already be entailed. Cheap
    congruence and literal lookups run first; the linear layer is consulted
    only for integer conjuncts the cheap checks left open."""
    deferred = []
    for part in E.split_conjuncts(exp):
        if part == E.TRUE:
            continue
        if part.kind != "app" or part.op not in ("=", "/=", "<=", "<"):
            return None
        a = instantiate(store, part.args[0], env)
        b = instantiate(store, part.args[1], env)
        if part.op == "=" and store.congruent(a, b):
            continue
        if session._literal_holds(part.op, a, b):
            continue
        if store.terms[a].sort != E.INT:
            return None
        deferred.append((part.op, a, b))
    for op, a, b in deferred:
        if not session.linear().entails(op, a, b):
            return None
    return True


def instantiate_literals(store: TermStore, exp: E.Exp,
                         env: Dict[str, int]) -> List[Tuple[str, int, int]]:
    out = []
    for part in E.split_conjuncts(exp):
        assert part.kind == "app" and part.op in ("=", "/=", "<=", "<")
        a = instantiate(store, part.args[0], env)
        b = instantiate(store, part.args[1], env)
        out.append((part.op, a, b))
    return out


def prove(goal: E.Exp, givens: List[E.Exp], theorems: List[Theorem],
          budget: ProofBudget = ProofBudget()) -> ProofResult:
    """Assert the givens, saturate, check the goal."""
    start = time.perf_counter()
    session = ProofSession(theorems, budget)
    if budget.timeout_ms:
        session._deadline = start + budget.timeout_ms / 1000.0
    try:
        for given in givens:
            session.assert_fact(given)
        session.saturate()
        ok = session.check_goal(goal)
    except BudgetExceeded:
        elapsed = int((time.perf_counter() - start) * 1000)
        return ProofResult(TIMEOUT, elapsed, session.trace, False)
    except TermBudget:
        elapsed = int((time.perf_counter() - start) * 1000)
        return ProofResult(UNPROVABLE, elapsed, [], False)
    elapsed = int((time.perf_counter() - start) * 1000)
    status = PROVED if ok else UNPROVABLE
    trace = session.trace if ok else []
    return ProofResult(status, elapsed, trace, session.saturation_complete)
