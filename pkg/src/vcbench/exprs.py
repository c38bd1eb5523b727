"""Mathematical expression trees: booleans, integers, and generic strings.

Expressions are immutable and canonical by construction: concatenation is
n-ary and flattened, empty_string operands are dropped. All contracts,
givens, and goals are values of this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

# Sorts ----------------------------------------------------------------

BOOL = "Bool"
INT = "Int"
STR = "Str"


def ent(name: str) -> str:
    """Opaque entry sort, e.g. the Entry type parameter of a concept."""
    return f"Ent({name})"


def is_entry_sort(sort: str) -> bool:
    return sort.startswith("Ent(")


# Expression nodes -----------------------------------------------------
#
# Kinds:
#   lit   - integer or boolean literal (payload holds the value)
#   const - min_int | max_int | empty_string
#   sym   - a program value along an execution path; payload = (name, level),
#           rendered with one prime per level
#   var   - a contract formal's current value (pre-instantiation only)
#   old   - #x, the incoming value of formal x (pre-instantiation only)
#   qvar  - a theorem's universally quantified variable
#   app   - operator application; op in OPS below

OPS = {
    "and": BOOL, "implies": BOOL, "not": BOOL,
    "=": BOOL, "/=": BOOL, "<=": BOOL, "<": BOOL,
    "+": INT, "-": INT, "len": INT,
    "o": STR, "rev": STR, "sing": STR,
}

CONSTS = {"min_int": INT, "max_int": INT, "empty_string": STR}


@dataclass(frozen=True)
class Exp:
    kind: str
    op: str
    payload: Tuple = ()
    args: Tuple["Exp", ...] = ()
    sort: str = BOOL

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Exp({render(self)!r})"


class SortError(Exception):
    """An ill-sorted construction; indicates a front-end bug."""


def _want(e: Exp, sort: str, ctx: str) -> None:
    if e.sort != sort and not (sort == "Ent" and is_entry_sort(e.sort)):
        raise SortError(f"{ctx}: expected {sort}, got {e.sort} in {render(e)}")


# Leaf constructors ----------------------------------------------------

TRUE = Exp("lit", "lit", (True,), (), BOOL)
FALSE = Exp("lit", "lit", (False,), (), BOOL)
MIN_INT = Exp("const", "min_int", (), (), INT)
MAX_INT = Exp("const", "max_int", (), (), INT)
EMPTY = Exp("const", "empty_string", (), (), STR)


def lit(value) -> Exp:
    if isinstance(value, bool):
        return TRUE if value else FALSE
    return Exp("lit", "lit", (int(value),), (), INT)


def sym(name: str, level: int, sort: str) -> Exp:
    return Exp("sym", "sym", (name, level), (), sort)


def var(name: str, sort: str) -> Exp:
    return Exp("var", "var", (name,), (), sort)


def old(name: str, sort: str) -> Exp:
    return Exp("old", "old", (name,), (), sort)


def qvar(name: str, sort: str) -> Exp:
    return Exp("qvar", "qvar", (name,), (), sort)


# Compound constructors ------------------------------------------------

def conj(*parts: Exp) -> Exp:
    flat: List[Exp] = []
    for p in parts:
        _want(p, BOOL, "and")
        if p.kind == "app" and p.op == "and":
            flat.extend(p.args)
        elif p == TRUE:
            continue
        else:
            flat.append(p)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return Exp("app", "and", (), tuple(flat), BOOL)


def implies(a: Exp, b: Exp) -> Exp:
    _want(a, BOOL, "implies"); _want(b, BOOL, "implies")
    return Exp("app", "implies", (), (a, b), BOOL)


def neg(a: Exp) -> Exp:
    _want(a, BOOL, "not")
    return Exp("app", "not", (), (a,), BOOL)


def _rel(op: str, a: Exp, b: Exp) -> Exp:
    if op in ("<=", "<"):
        _want(a, INT, op); _want(b, INT, op)
    elif a.sort != b.sort:
        raise SortError(f"{op}: sort mismatch {a.sort} vs {b.sort}")
    return Exp("app", op, (), (a, b), BOOL)


def eq(a: Exp, b: Exp) -> Exp:
    return _rel("=", a, b)


def ne(a: Exp, b: Exp) -> Exp:
    return _rel("/=", a, b)


def le(a: Exp, b: Exp) -> Exp:
    return _rel("<=", a, b)


def lt(a: Exp, b: Exp) -> Exp:
    return _rel("<", a, b)


def add(a: Exp, b: Exp) -> Exp:
    _want(a, INT, "+"); _want(b, INT, "+")
    return Exp("app", "+", (), (a, b), INT)


def sub(a: Exp, b: Exp) -> Exp:
    _want(a, INT, "-"); _want(b, INT, "-")
    return Exp("app", "-", (), (a, b), INT)


def cat(*parts: Exp) -> Exp:
    """Concatenation in canonical form: flattened, empty operands dropped."""
    flat: List[Exp] = []
    for p in parts:
        _want(p, STR, "o")
        if p.kind == "app" and p.op == "o":
            flat.extend(p.args)
        elif p == EMPTY:
            continue
        else:
            flat.append(p)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat[0]
    return Exp("app", "o", (), tuple(flat), STR)


def rev(a: Exp) -> Exp:
    _want(a, STR, "Reverse")
    return Exp("app", "rev", (), (a,), STR)


def length(a: Exp) -> Exp:
    _want(a, STR, "| |")
    return Exp("app", "len", (), (a,), INT)


def sing(a: Exp) -> Exp:
    if not is_entry_sort(a.sort):
        raise SortError(f"< >: expected an entry, got {a.sort}")
    return Exp("app", "sing", (), (a,), STR)


def rebuild(op: str, args: Tuple[Exp, ...]) -> Exp:
    """Re-apply an operator through the canonicalizing constructors."""
    table = {
        "and": conj, "o": cat,
        "implies": implies, "not": neg, "=": eq, "/=": ne, "<=": le, "<": lt,
        "+": add, "-": sub, "rev": rev, "len": length, "sing": sing,
    }
    return table[op](*args)


# Operations -----------------------------------------------------------

def substitute(exp: Exp, bindings: Dict[Exp, Exp]) -> Exp:
    """Simultaneous substitution; canonical form is restored afterward."""
    hit = bindings.get(exp)
    if hit is not None:
        if hit.sort != exp.sort and not (is_entry_sort(hit.sort) and is_entry_sort(exp.sort)):
            raise SortError(f"substitute: {render(exp)} -> {render(hit)} changes sort")
        return hit
    if exp.kind != "app":
        return exp
    new_args = tuple(substitute(a, bindings) for a in exp.args)
    if new_args == exp.args:
        return exp
    return rebuild(exp.op, new_args)


def split_conjuncts(exp: Exp) -> List[Exp]:
    """Top-level `and` chain split left to right; else a singleton list."""
    if exp.kind == "app" and exp.op == "and":
        out: List[Exp] = []
        for a in exp.args:
            out.extend(split_conjuncts(a))
        return out
    return [exp]


def negate(exp: Exp) -> Exp:
    """Negation pushed through relations; used for else-branches and loop exit."""
    if exp == TRUE:
        return FALSE
    if exp == FALSE:
        return TRUE
    if exp.kind == "app":
        if exp.op == "not":
            return exp.args[0]
        flips = {"=": "/=", "/=": "=", "<=": "<", "<": "<="}
        if exp.op in flips:
            a, b = exp.args
            if exp.op in ("=", "/="):
                return _rel(flips[exp.op], a, b)
            # not (a <= b) is b < a; not (a < b) is b <= a
            return _rel(flips[exp.op], b, a)
    return neg(exp)


def walk(exp: Exp) -> Iterable[Exp]:
    yield exp
    for a in exp.args:
        yield from walk(a)


def free_syms(exp: Exp) -> set:
    return {e for e in walk(exp) if e.kind == "sym"}


def mentions_old(exp: Exp) -> bool:
    return any(e.kind == "old" for e in walk(exp))


def mentions_qvar(exp: Exp) -> bool:
    return any(e.kind == "qvar" for e in walk(exp))


# Primed-value state ----------------------------------------------------

class ValueState:
    """Current prime level per program variable along one execution path.

    Levels only increase; level 0 of a formal is the denotation of `#x`.
    Paths copy the state; the level allocator is shared so sibling paths
    never reuse a symbol.
    """

    def __init__(self, sorts: Dict[str, str]):
        self._sorts = dict(sorts)
        self._level = {name: 0 for name in sorts}
        self._next = {name: 1 for name in sorts}

    def copy(self) -> "ValueState":
        twin = ValueState.__new__(ValueState)
        twin._sorts = self._sorts            # shared, immutable
        twin._level = dict(self._level)
        twin._next = self._next              # shared allocator
        return twin

    def sort_of(self, name: str) -> str:
        return self._sorts[name]

    def current(self, name: str) -> Exp:
        return sym(name, self._level[name], self._sorts[name])

    def entry(self, name: str) -> Exp:
        return sym(name, 0, self._sorts[name])

    def advance(self, name: str) -> Exp:
        """Move to a fresh primed value and return it."""
        nxt = self._next[name]
        self._next[name] = nxt + 1
        self._level[name] = nxt
        return self.current(name)

    def names(self) -> List[str]:
        return list(self._sorts)


# Rendering ------------------------------------------------------------
#
# Infix, parenthesized only when precedence requires; `o` for concatenation,
# Reverse(x), |x|, <x>, /=, <=.

_PREC = {
    "implies": 1, "and": 2, "not": 3,
    "=": 4, "/=": 4, "<=": 4, "<": 4,
    "+": 5, "-": 5, "o": 6,
}
_ATOM = 10


def _prec(exp: Exp) -> int:
    if exp.kind == "app" and exp.op in _PREC:
        return _PREC[exp.op]
    return _ATOM


def render(exp: Exp) -> str:
    return _render(exp, 0)


def _wrap(exp: Exp, parent_prec: int) -> str:
    text = _render(exp, parent_prec)
    if _prec(exp) <= parent_prec and _prec(exp) != _ATOM:
        return f"({text})"
    return text


def _render(exp: Exp, parent: int) -> str:
    k = exp.kind
    if k == "lit":
        v = exp.payload[0]
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)
    if k == "const":
        return exp.op
    if k == "sym":
        name, level = exp.payload
        return name + "'" * level
    if k == "var":
        return exp.payload[0]
    if k == "old":
        return "#" + exp.payload[0]
    if k == "qvar":
        return exp.payload[0]
    op = exp.op
    if op == "not":
        return "not " + _wrap(exp.args[0], _PREC["not"])
    if op == "rev":
        return f"Reverse({render(exp.args[0])})"
    if op == "len":
        return f"|{render(exp.args[0])}|"
    if op == "sing":
        return f"<{render(exp.args[0])}>"
    p = _PREC[op]
    if op in ("and", "implies", "o", "+", "-"):
        joint = f" {op} "
        pieces = []
        for i, a in enumerate(exp.args):
            # left-assoc chains print without parens on the left operand
            limit = p - 1 if i == 0 and op in ("+", "-") else p
            if op in ("and", "o"):
                limit = p - 1  # n-ary, both sides at same level
            if op == "implies":
                limit = p if i == 0 else p - 1  # right assoc
            pieces.append(_wrap(a, limit))
        return joint.join(pieces)
    # relations
    a, b = exp.args
    return f"{_wrap(a, p)} {op} {_wrap(b, p)}"
