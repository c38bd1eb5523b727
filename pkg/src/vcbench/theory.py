"""Reusable theorem library: the string and integer theories, plus a
loader for user theory files.

Stanza format:
  Theorem <name>: [For all <vars: Sort>,] [if <hyp> then] <conclusion>
      [triggers <pattern>, <pattern>];

The trigger patterns jointly bind every universal variable; ground matches
of the whole trigger set drive instantiation.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional

from . import ast_nodes as A
from . import exprs as E
from .diagnostics import FrontEndError, error
from .lexer import tokenize
from .parser import _Parser

ENTRY_ANY = E.ent("*")

_SORT_NAMES = {"String": E.STR, "Entry": ENTRY_ANY, "Int": E.INT}


@dataclass(frozen=True)
class Theorem:
    name: str
    universals: tuple            # qvar nodes
    hypothesis: Optional[E.Exp]
    conclusion: E.Exp
    triggers: tuple              # pattern expressions over the universals

    @property
    def is_ground(self) -> bool:
        return not self.universals


class TheoryError(FrontEndError):
    pass


def _build(raw: A.RawExp, env: Dict[str, E.Exp]) -> E.Exp:
    k = raw.kind
    if k == "int":
        return E.lit(int(raw.text))
    if k == "true":
        return E.TRUE
    if k == "false":
        return E.FALSE
    if k == "const":
        return {"min_int": E.MIN_INT, "max_int": E.MAX_INT,
                "empty_string": E.EMPTY}[raw.text]
    if k == "name":
        hit = env.get(raw.text)
        if hit is None:
            raise TheoryError([error(f"unknown variable {raw.text!r} in theorem",
                                     raw.line, raw.column)])
        return hit
    if k == "rev":
        return E.rev(_build(raw.args[0], env))
    if k == "len":
        return E.length(_build(raw.args[0], env))
    if k == "sing":
        return E.sing(_build(raw.args[0], env))
    if k == "unop":
        return E.neg(_build(raw.args[0], env))
    if k in ("binop", "rel"):
        a, b = _build(raw.args[0], env), _build(raw.args[1], env)
        table = {"and": E.conj, "implies": E.implies, "=": E.eq, "/=": E.ne,
                 "<=": E.le, "<": E.lt, "+": E.add, "-": E.sub, "o": E.cat}
        return table[raw.text](a, b)
    raise TheoryError([error(f"cannot use a {k} expression in a theorem",
                             raw.line, raw.column)])


class _TheoryParser(_Parser):
    def theorems(self) -> List[Theorem]:
        out = []
        while not self.peek().kind == "eof":
            out.append(self.theorem())
        return out

    def theorem(self) -> Theorem:
        self.expect_kw("Theorem")
        name = self.ident("theorem name").text
        self.expect_sym(":")
        env: Dict[str, E.Exp] = {}
        universals: List[E.Exp] = []
        if self.peek().is_kw("For"):
            self.next()
            self.expect_kw("all")
            while True:
                names = [self.ident("variable").text]
                while self.peek().is_sym(","):
                    # lookahead: another name in this group, or a new group,
                    # or the body - a group always reaches a ':'
                    save = self.pos
                    self.next()
                    if self.peek().kind == "id" and (
                            self.peek(1).is_sym(",") or self.peek(1).is_sym(":")):
                        names.append(self.ident("variable").text)
                    else:
                        self.pos = save
                        break
                self.expect_sym(":")
                sort_tok = self.ident("sort")
                sort = _SORT_NAMES.get(sort_tok.text)
                if sort is None:
                    self.fail("sorts are String, Entry, or Int", sort_tok)
                for n in names:
                    if n in env:
                        self.fail(f"duplicate variable {n!r}")
                    q = E.qvar(n, sort)
                    env[n] = q
                    universals.append(q)
                self.expect_sym(",")
                if not (self.peek().kind == "id" and
                        (self.peek(1).is_sym(":") or self.peek(1).is_sym(","))):
                    break
        hypothesis = None
        if self.peek().is_kw("if"):
            self.next()
            hypothesis = _build(self.assertion(), env)
            self.expect_kw("then")
        conclusion = _build(self.assertion(), env)
        triggers: List[E.Exp] = []
        if self.peek().is_kw("triggers"):
            self.next()
            triggers.append(_build(self.assertion(), env))
            while self.peek().is_sym(","):
                self.next()
                triggers.append(_build(self.assertion(), env))
        self.expect_sym(";")
        thm = Theorem(name, tuple(universals), hypothesis, conclusion,
                      tuple(triggers))
        _validate(thm)
        return thm


def _validate(thm: Theorem) -> None:
    if thm.universals and not thm.triggers:
        raise TheoryError([error(f"theorem {thm.name!r} quantifies but has no "
                                 f"triggers", 1)])
    bound = set()
    for pat in thm.triggers:
        for node in E.walk(pat):
            if node.kind == "qvar":
                bound.add(node.payload[0])
        if pat.kind == "qvar":
            raise TheoryError([error(f"theorem {thm.name!r}: a bare variable is "
                                     f"not a trigger", 1)])
    missing = [q.payload[0] for q in thm.universals if q.payload[0] not in bound]
    if missing:
        raise TheoryError([error(f"theorem {thm.name!r}: triggers do not bind "
                                 f"{', '.join(missing)}", 1)])
    if thm.hypothesis is None:
        if thm.conclusion.kind != "app" or thm.conclusion.op not in (
                "=", "/=", "<=", "<"):
            raise TheoryError([error(f"theorem {thm.name!r}: hypothesis-free "
                                     f"conclusions are equalities or relational "
                                     f"literals", 1)])


def parse_theory_text(text: str) -> List[Theorem]:
    parser = _TheoryParser(tokenize(text), text)
    return parser.theorems()


def _load_builtin(filename: str) -> List[Theorem]:
    text = (resources.files("vcbench") / "theories" / filename).read_text()
    return parse_theory_text(text)


def builtin_string_theory() -> List[Theorem]:
    return _load_builtin("strings.thy")


def builtin_integer_facts() -> List[Theorem]:
    return _load_builtin("integers.thy")


def builtin_theorems() -> List[Theorem]:
    return builtin_string_theory() + builtin_integer_facts()


def load_theory_dir(path: str) -> List[Theorem]:
    out: List[Theorem] = []
    for file in sorted(Path(path).glob("*.thy")):
        out.extend(parse_theory_text(file.read_text()))
    return out
