"""Trigger matching against the term store, modulo congruence.

A theorem's trigger list is a joint multi-pattern: every pattern must match
simultaneously under one binding. Binary concatenation patterns match n-ary
ground concatenations at every split point; segment subterms materialize
lazily so instantiated conclusions stay well-formed.
"""
from __future__ import annotations

from typing import Dict, Iterator, List, Tuple

from .. import exprs as E
from ..theory import ENTRY_ANY, Theorem
from .terms import TermStore

Binding = Dict[str, int]    # universal name -> term id


def _sort_ok(qsort: str, tsort: str) -> bool:
    if qsort == tsort:
        return True
    if qsort == ENTRY_ANY and E.is_entry_sort(tsort):
        return True
    return False


def _match_term(store: TermStore, pat: E.Exp, tid: int,
                env: Binding) -> Iterator[Binding]:
    if pat.kind == "qvar":
        name = pat.payload[0]
        bound = env.get(name)
        if bound is not None:
            if store.congruent(bound, tid):
                yield env
            return
        if _sort_ok(pat.sort, store.terms[tid].sort):
            new = dict(env)
            new[name] = tid
            yield new
        return
    if pat.kind == "lit":
        term = store.terms[tid]
        if term.op == "lit" and term.payload == pat.payload:
            yield env
        return
    if pat.kind == "const":
        op = {"min_int": "min_int", "max_int": "max_int",
              "empty_string": "empty"}[pat.op]
        if store.terms[tid].op == op:
            yield env
        return
    term = store.terms[tid]
    if term.op != pat.op:
        return
    if pat.op == "o" and len(term.args) > len(pat.args):
        # binary pattern over an n-ary ground concatenation: head and tail
        # splits suffice because the structural closure interrelates the
        # remaining groupings
        assert len(pat.args) == 2
        n = len(term.args)
        for k in (1, n - 1):
            left = _segment(store, term.args[:k])
            right = _segment(store, term.args[k:])
            for env1 in _match_class(store, pat.args[0], left, env):
                yield from _match_class(store, pat.args[1], right, env1)
        return
    if len(term.args) != len(pat.args):
        return
    envs = [env]
    for sub_pat, child in zip(pat.args, term.args):
        envs = [e2 for e1 in envs
                for e2 in _match_class(store, sub_pat, child, e1)]
        if not envs:
            return
    yield from envs


def _segment(store: TermStore, args: Tuple[int, ...]) -> int:
    if len(args) == 1:
        return args[0]
    return store.intern("o", (), tuple(args), E.STR)


def _match_class(store: TermStore, pat: E.Exp, tid: int,
                 env: Binding) -> List[Binding]:
    if pat.kind == "qvar":
        return list(_match_term(store, pat, tid, env))
    out: List[Binding] = []
    for member in store.distinct_members(store.find(tid)):
        out.extend(_match_term(store, pat, member, env))
    return out


def trigger_matches(store: TermStore, theorem: Theorem) -> List[Binding]:
    """All joint matches of the theorem's triggers, deterministically ordered
    and deduplicated up to congruence of the bound terms."""
    envs: List[Binding] = [{}]
    for pat in theorem.triggers:
        candidates = store.distinct_by_signature(
            store.op_index.get(pat.op, []))
        new_envs: List[Binding] = []
        stage_seen = set()
        for env in envs:
            for tid in candidates:
                for found in _match_term(store, pat, tid, env):
                    key = tuple(sorted((name, store.find(t))
                                       for name, t in found.items()))
                    if key not in stage_seen:
                        stage_seen.add(key)
                        new_envs.append(found)
                        if len(new_envs) >= 3000:
                            break
                if len(new_envs) >= 3000:
                    break
            if len(new_envs) >= 3000:
                break
        envs = new_envs
        if not envs:
            return []
    out: List[Binding] = []
    order = [q.payload[0] for q in theorem.universals]
    for env in envs:
        if len(env) == len(order):
            out.append(env)
    return out


def instantiate(store: TermStore, exp: E.Exp, env: Binding) -> int:
    """Build the ground term for a theorem expression under a binding."""
    if exp.kind == "qvar":
        return env[exp.payload[0]]
    if exp.kind == "app":
        args = tuple(instantiate(store, a, env) for a in exp.args)
        if exp.op == "o":
            # flatten through immediate concat children to keep stored
            # concats canonical where syntactically visible
            flat: List[int] = []
            for a in args:
                term = store.terms[a]
                if term.op == "o":
                    flat.extend(term.args)
                else:
                    flat.append(a)
            if len(flat) == 1:
                return flat[0]
            args = tuple(flat)
        return store.intern(exp.op, (), args, exp.sort)
    return store.intern_exp(exp)
