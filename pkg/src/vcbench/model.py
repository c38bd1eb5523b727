"""Finite-model evaluation of expressions, for validity checks and fuzzing.

Model: entries drawn from a small alphabet, string variables range over all
strings up to a length cap, integer variables over a window with min_int and
max_int pinned to the window edges. Operators themselves are evaluated
exactly (concatenation may leave the variable domain; that is intended).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from . import exprs as E


@dataclass(frozen=True)
class Model:
    alphabet: int = 3
    max_len: int = 4
    lo: int = -8
    hi: int = 8

    @property
    def min_int(self) -> int:
        return self.lo

    @property
    def max_int(self) -> int:
        return self.hi - 1

    def strings(self) -> List[Tuple[int, ...]]:
        out: List[Tuple[int, ...]] = []
        for n in range(self.max_len + 1):
            out.extend(itertools.product(range(self.alphabet), repeat=n))
        return out

    def ints(self) -> List[int]:
        return list(range(self.lo, self.hi + 1))

    def entries(self) -> List[int]:
        return list(range(self.alphabet))

    def domain(self, sort: str) -> List:
        if sort == E.INT:
            return self.ints()
        if sort == E.STR:
            return self.strings()
        if E.is_entry_sort(sort):
            return self.entries()
        raise ValueError(f"no finite domain for sort {sort}")


def eval_exp(exp: E.Exp, env: Dict[E.Exp, object], model: Model):
    """Evaluate under an assignment keyed by sym/var/old/qvar nodes."""
    k = exp.kind
    if k == "lit":
        return exp.payload[0]
    if k == "const":
        if exp.op == "min_int":
            return model.min_int
        if exp.op == "max_int":
            return model.max_int
        return ()
    if k in ("sym", "var", "old", "qvar"):
        return env[exp]
    op = exp.op
    a = [eval_exp(x, env, model) for x in exp.args]
    if op == "and":
        return all(a)
    if op == "implies":
        return (not a[0]) or a[1]
    if op == "not":
        return not a[0]
    if op == "=":
        return a[0] == a[1]
    if op == "/=":
        return a[0] != a[1]
    if op == "<=":
        return a[0] <= a[1]
    if op == "<":
        return a[0] < a[1]
    if op == "+":
        return a[0] + a[1]
    if op == "-":
        return a[0] - a[1]
    if op == "o":
        out: Tuple[int, ...] = ()
        for piece in a:
            out = out + piece
        return out
    if op == "rev":
        return tuple(reversed(a[0]))
    if op == "len":
        return len(a[0])
    if op == "sing":
        return (a[0],)
    raise ValueError(f"cannot evaluate {op}")


def assignments(nodes: List[E.Exp], model: Model) -> Iterable[Dict[E.Exp, object]]:
    """All assignments of the given leaf nodes over the model's domains."""
    domains = [model.domain(n.sort) for n in nodes]
    for combo in itertools.product(*domains):
        yield dict(zip(nodes, combo))


def find_countermodel(givens: List[E.Exp], goal: E.Exp, model: Model):
    """Exhaustive search for an assignment satisfying the givens but not
    the goal. Returns the assignment, or None."""
    leaves: List[E.Exp] = []
    seen = set()
    for exp in list(givens) + [goal]:
        for node in E.walk(exp):
            if node.kind in ("sym", "var", "old", "qvar") and node not in seen:
                seen.add(node)
                leaves.append(node)
    for env in assignments(leaves, model):
        if all(eval_exp(g, env, model) for g in givens):
            if not eval_exp(goal, env, model):
                return env
    return None
