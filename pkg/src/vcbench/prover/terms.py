"""Ground term store: hash-consing, union-find with congruence propagation,
and the structural closure that realizes the canonical concatenation form
(flattening, empty dropping, segment abstraction) modulo congruence."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .. import exprs as E

_SORT_OF_OP = {"o": E.STR, "rev": E.STR, "sing": E.STR, "len": E.INT,
               "+": E.INT, "-": E.INT, "empty": E.STR,
               "min_int": E.INT, "max_int": E.INT,
               "=": E.BOOL, "/=": E.BOOL, "<=": E.BOOL, "<": E.BOOL}

MAX_CONCAT_ARITY = 8


class TermBudget(Exception):
    """The per-session term cap was reached; saturation is incomplete."""


@dataclass(frozen=True)
class Term:
    id: int
    op: str
    payload: Tuple
    args: Tuple[int, ...]
    sort: str


class TermStore:
    def __init__(self, max_terms: int = 2500):
        self.terms: List[Term] = []
        self.hashcons: Dict[Tuple, int] = {}
        self.parent: List[int] = []
        self.size: List[int] = []
        self.members: Dict[int, List[int]] = {}
        self.users: Dict[int, List[int]] = {}   # class rep -> parent term ids
        self.sig: Dict[Tuple, int] = {}
        self.op_index: Dict[str, List[int]] = {}
        self.arith_index: List[int] = []   # int literals and +/- applications
        self.version = 0
        self.max_terms = max_terms
        self.budget_hit = False
        self._structural_seen: set = set()
        self._structural_done: Dict[int, Tuple] = {}
        self._distinct_memo: Dict[int, Tuple] = {}

    # -- union-find ------------------------------------------------------

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def congruent(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    # -- interning ---------------------------------------------------------

    def intern(self, op: str, payload: Tuple = (), args: Tuple[int, ...] = (),
               sort: Optional[str] = None) -> int:
        key = (op, payload, args)
        hit = self.hashcons.get(key)
        if hit is not None:
            return hit
        if len(self.terms) >= self.max_terms:
            self.budget_hit = True
            raise TermBudget
        if sort is None:
            sort = _SORT_OF_OP[op]
        tid = len(self.terms)
        term = Term(tid, op, payload, args, sort)
        self.terms.append(term)
        self.hashcons[key] = tid
        self.parent.append(tid)
        self.size.append(1)
        self.members[tid] = [tid]
        self.users[tid] = []
        self.op_index.setdefault(op, []).append(tid)
        if op in ("+", "-") or (op == "lit" and sort == E.INT):
            self.arith_index.append(tid)
        self.version += 1
        for child in args:
            self.users[self.find(child)].append(tid)
        if args:
            sig_key = self.signature(term)
            other = self.sig.get(sig_key)
            if other is None:
                self.sig[sig_key] = tid
            else:
                self.merge(tid, other)
        return tid

    def intern_exp(self, exp: E.Exp) -> int:
        k = exp.kind
        if k == "sym":
            return self.intern("sym", exp.payload, (), exp.sort)
        if k == "lit":
            return self.intern("lit", exp.payload, (), exp.sort)
        if k == "const":
            op = {"min_int": "min_int", "max_int": "max_int",
                  "empty_string": "empty"}[exp.op]
            return self.intern(op)
        if k == "app":
            args = tuple(self.intern_exp(a) for a in exp.args)
            return self.intern(exp.op, (), args, exp.sort)
        raise ValueError(f"cannot intern {k} node {E.render(exp)!r}")

    def to_exp(self, tid: int) -> E.Exp:
        t = self.terms[tid]
        if t.op == "sym":
            return E.sym(t.payload[0], t.payload[1], t.sort)
        if t.op == "lit":
            return E.lit(t.payload[0])
        if t.op == "empty":
            return E.EMPTY
        if t.op == "min_int":
            return E.MIN_INT
        if t.op == "max_int":
            return E.MAX_INT
        args = tuple(self.to_exp(a) for a in t.args)
        return E.Exp("app", t.op, (), args, t.sort)

    def render(self, tid: int) -> str:
        return E.render(self.to_exp(tid))

    # -- congruence --------------------------------------------------------

    def signature(self, term: Term) -> Tuple:
        return (term.op, term.payload, tuple(map(self.find, term.args)))

    def merge(self, a: int, b: int) -> bool:
        """Union the classes of a and b and restore congruence closure."""
        queue = [(a, b)]
        merged = False
        while queue:
            x, y = queue.pop(0)
            rx, ry = self.find(x), self.find(y)
            if rx == ry:
                continue
            merged = True
            self.version += 1
            if (self.size[rx], -rx) < (self.size[ry], -ry):
                rx, ry = ry, rx
            # ry is absorbed into rx
            self.parent[ry] = rx
            self.size[rx] += self.size[ry]
            self.members[rx].extend(self.members.pop(ry))
            moved_users = self.users.pop(ry)
            for p in moved_users:
                key = self.signature(self.terms[p])
                other = self.sig.get(key)
                if other is None:
                    self.sig[key] = p
                elif self.find(other) != self.find(p):
                    queue.append((other, p))
            self.users[rx].extend(moved_users)
        return merged

    def class_members(self, tid: int) -> List[int]:
        return self.members[self.find(tid)]

    def distinct_by_signature(self, tids: List[int]) -> List[int]:
        """Drop terms whose op and child classes duplicate an earlier one;
        congruence makes them interchangeable for matching."""
        seen = set()
        out: List[int] = []
        for tid in tids:
            key = self.signature(self.terms[tid])
            if key not in seen:
                seen.add(key)
                out.append(tid)
        return out

    def distinct_members(self, rep: int) -> List[int]:
        """Signature-distinct members of a class, cached per store epoch."""
        cached = self._distinct_memo.get(rep)
        if cached is not None and cached[0] == self.version:
            return cached[1]
        out = self.distinct_by_signature(self.members[rep])
        self._distinct_memo[rep] = (self.version, out)
        return out

    # -- structural closure for concatenation -------------------------------

    def structural_close(self) -> None:
        """Relate flattened/nested/empty-bearing concatenations up to
        congruence. Bounded by the term budget."""
        empty_id = self.intern("empty")
        changed = True
        seen = self._structural_seen
        done_states = self._structural_done
        passes = 0
        while changed and not self.budget_hit and passes < 40:
            passes += 1
            changed = False
            for tid in list(self.op_index.get("o", [])):
                term = self.terms[tid]
                rep = self.find(tid)
                finds = tuple(self.find(c) for c in term.args)
                state = (rep, finds)
                if done_states.get(tid) == state:
                    continue
                done_states[tid] = state
                variants: List[Tuple[int, ...]] = []
                for i, child in enumerate(term.args):
                    for m in self.distinct_members(finds[i]):
                        mterm = self.terms[m]
                        if mterm.op == "o" and m != tid:
                            spliced = term.args[:i] + mterm.args + term.args[i + 1:]
                            if len(spliced) <= MAX_CONCAT_ARITY:
                                variants.append(spliced)
                        elif mterm.op == "empty":
                            variants.append(term.args[:i] + term.args[i + 1:])
                n = len(term.args)
                if n >= 3:
                    for i in range(n):
                        for j in range(i + 2, n + 1):
                            if j - i == n:
                                continue
                            seg = self.sig.get(("o", (), finds[i:j]))
                            if seg is not None:
                                variants.append(term.args[:i] + (seg,)
                                                + term.args[j:])
                for args in variants:
                    mark = (self.find(tid), tuple(self.find(a) for a in args))
                    if mark in seen:
                        continue
                    seen.add(mark)
                    if len(args) == 0:
                        vid = empty_id
                    elif len(args) == 1:
                        vid = args[0]
                    else:
                        vid = self.intern("o", (), tuple(args), E.STR)
                    if self.merge(vid, tid):
                        changed = True
