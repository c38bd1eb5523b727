"""Bound propagation and small-scale inequality combination over the
congruence classes of integer-sorted terms.

Every class normalizes to a linear polynomial over representative atoms:
classes holding an integer literal become constants, classes holding a
sum/difference node decompose through it, everything else is an atom.
A goal proves by writing goal >= 0 as a sum of at most three known
nonnegative facts (coefficients 1) plus a residual whose interval bound
is nonnegative. Incomplete by design; unknown surfaces as unprovable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .. import exprs as E
from .terms import TermStore

Poly = Tuple[Tuple[Tuple[int, int], ...], int]   # (sorted (atom, coeff)), const


def _mk(coeffs: Dict[int, int], const: int) -> Poly:
    return tuple(sorted((a, c) for a, c in coeffs.items() if c != 0)), const


def _add(p: Poly, q: Poly, factor: int = 1) -> Poly:
    coeffs = dict(p[0])
    for a, c in q[0]:
        coeffs[a] = coeffs.get(a, 0) + factor * c
    return _mk(coeffs, p[1] + factor * q[1])


def _neg(p: Poly) -> Poly:
    return tuple((a, -c) for a, c in p[0]), -p[1]


def _shift(p: Poly, delta: int) -> Poly:
    return p[0], p[1] + delta


ZERO: Poly = ((), 0)


class LinearLayer:
    """A stateless view of one store epoch; rebuild after any merge."""

    def __init__(self, store: TermStore, literals: List[Tuple[str, int, int]]):
        self.store = store
        self._poly_memo: Dict[int, Poly] = {}
        self.facts: List[Poly] = []          # each known >= 0
        self.lo: Dict[int, Fraction] = {}
        self.hi: Dict[int, Fraction] = {}
        self.by_atom: Dict[int, List[int]] = {}
        self._entail_memo: Dict[Tuple, bool] = {}
        self._collect(literals)

    # -- normalization ----------------------------------------------------

    def poly_of(self, tid: int, _visiting: Optional[set] = None) -> Poly:
        rep = self.store.find(tid)
        hit = self._poly_memo.get(rep)
        if hit is not None:
            return hit
        visiting = _visiting if _visiting is not None else set()
        if rep in visiting:
            return _mk({rep: 1}, 0)
        visiting.add(rep)
        poly = _mk({rep: 1}, 0)
        arith = None
        for m in self.store.members[rep]:
            term = self.store.terms[m]
            if term.op == "lit" and term.sort == E.INT:
                arith = None
                poly = _mk({}, term.payload[0])
                break
            if term.op in ("+", "-") and arith is None:
                arith = term
        if arith is not None:
            a = self.poly_of(arith.args[0], visiting)
            b = self.poly_of(arith.args[1], visiting)
            poly = _add(a, b, 1 if arith.op == "+" else -1)
        visiting.discard(rep)
        self._poly_memo[rep] = poly
        return poly

    def _direct(self, term, visiting) -> Poly:
        a = self.poly_of(term.args[0], visiting)
        b = self.poly_of(term.args[1], visiting)
        return _add(a, b, 1 if term.op == "+" else -1)

    # -- fact collection ----------------------------------------------------

    def _fact(self, poly: Poly) -> None:
        if poly in self._fact_seen:
            return
        self._fact_seen.add(poly)
        self.facts.append(poly)

    def _collect(self, literals: List[Tuple[str, int, int]]) -> None:
        store = self.store
        self._fact_seen: set = set()
        # equations from classes holding several arithmetic decompositions
        for tid in store.arith_index:
            rep = store.find(tid)
            term = store.terms[tid]
            if term.op == "lit":
                direct: Poly = ((), term.payload[0])
            else:
                direct = self._direct(term, {rep})
            diff = _add(self.poly_of(rep), direct, -1)
            if diff != ZERO:
                self._fact(diff)
                self._fact(_neg(diff))
        for op, a, b in literals:
            if store.terms[a].sort != E.INT:
                continue
            pa, pb = self.poly_of(a), self.poly_of(b)
            diff = _add(pb, pa, -1)
            if op == "<=":
                self._fact(diff)
            elif op == "<":
                self._fact(_shift(diff, -1))     # integers: b - a - 1 >= 0
            elif op == "=" and diff != ZERO:
                self._fact(diff)
                self._fact(_neg(diff))
        for idx, fact in enumerate(self.facts):
            coeffs, const = fact
            if len(coeffs) == 1:
                (atom, c), = coeffs
                bound = Fraction(-const, c)
                if c > 0:   # atom >= bound
                    if atom not in self.lo or bound > self.lo[atom]:
                        self.lo[atom] = bound
                else:       # atom <= bound
                    if atom not in self.hi or bound < self.hi[atom]:
                        self.hi[atom] = bound
            for atom, _c in coeffs:
                self.by_atom.setdefault(atom, []).append(idx)

    # -- entailment -----------------------------------------------------------

    def _inf(self, poly: Poly) -> Optional[Fraction]:
        total = Fraction(poly[1])
        for atom, c in poly[0]:
            bound = self.lo.get(atom) if c > 0 else self.hi.get(atom)
            if bound is None:
                return None
            total += c * bound
        return total

    def _nonneg(self, goal: Poly, depth: int = 3) -> bool:
        return self._search(goal, depth, ())

    def _search(self, residual: Poly, depth: int, used: Tuple[int, ...]) -> bool:
        inf = self._inf(residual)
        if inf is not None and inf >= 0:
            return True
        if depth == 0:
            return False
        # prefer facts that address an atom lacking the needed bound
        missing = [a for a, c in residual[0]
                   if (c > 0 and a not in self.lo) or (c < 0 and a not in self.hi)]
        candidates: List[int] = []
        if missing:
            atom = missing[0]
            need_sign = next(c for a, c in residual[0] if a == atom)
            for idx in self.by_atom.get(atom, []):
                coeff = dict(self.facts[idx][0]).get(atom, 0)
                if coeff * need_sign > 0:
                    candidates.append(idx)
        else:
            atoms = {a for a, _ in residual[0]}
            for atom in sorted(atoms):
                candidates.extend(self.by_atom.get(atom, []))
            candidates = sorted(set(candidates))
        for idx in candidates:
            if idx in used:
                continue
            if self._search(_add(residual, self.facts[idx], -1), depth - 1,
                            used + (idx,)):
                return True
        return False

    def entails(self, op: str, a: int, b: int) -> bool:
        if self.store.terms[a].sort != E.INT or self.store.terms[b].sort != E.INT:
            return False
        key = (op, self.store.find(a), self.store.find(b))
        hit = self._entail_memo.get(key)
        if hit is not None:
            return hit
        pa, pb = self.poly_of(a), self.poly_of(b)
        diff = _add(pb, pa, -1)             # b - a
        if op == "<=":
            ok = self._nonneg(diff)
        elif op == "<":
            ok = self._nonneg(_shift(diff, -1))
        elif op == "=":
            ok = diff == ZERO or (self._nonneg(diff) and self._nonneg(_neg(diff)))
        elif op == "/=":
            ok = (self._nonneg(_shift(diff, -1)) or
                  self._nonneg(_shift(_neg(diff), -1)))
        else:
            ok = False
        self._entail_memo[key] = ok
        return ok
