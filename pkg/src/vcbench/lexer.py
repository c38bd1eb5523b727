"""Tokenizer for the specification/programming language.

Identifiers may carry prime characters (the VC display convention); the
parser rejects them in user code, the tokenizer merely carries them.
Comments: `-- ...` to end of line, `(* ... *)` block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .diagnostics import Diagnostic, FrontEndError, error

KEYWORDS = {
    # module structure
    "Concept", "Enhancement", "Realization", "Facility", "Type", "Operation",
    "Procedure", "end", "uses", "constraint", "for", "of", "is", "modeled",
    "by", "type",
    # clauses
    "requires", "ensures", "maintaining", "decreasing", "changing",
    # statements
    "Var", "If", "then", "Else", "While", "do",
    # parameter modes
    "updates", "replaces", "restores", "preserves", "evaluates", "alters",
    "clears",
    # assertion language
    "and", "implies", "not", "true", "false", "empty_string", "min_int",
    "max_int", "Reverse", "o", "result",
    # theory files
    "Theorem", "For", "all", "if", "triggers",
}

SYMBOLS = [
    ":=:", ":=", "/=", "<=", ">=", "(", ")", "<", ">", "|", "=", "+", "-",
    ",", ";", ":", "#",
]


@dataclass(frozen=True)
class Token:
    kind: str   # kw | id | int | sym | eof
    text: str
    line: int
    column: int

    def is_kw(self, *names: str) -> bool:
        return self.kind == "kw" and self.text in names

    def is_sym(self, *names: str) -> bool:
        return self.kind == "sym" and self.text in names


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    diags: List[Diagnostic] = []
    line, col = 1, 1
    i, n = 0, len(source)

    def bump(text: str):
        nonlocal line, col
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            bump(ch)
            i += 1
            continue
        if source.startswith("--", i):
            j = source.find("\n", i)
            j = n if j < 0 else j
            bump(source[i:j])
            i = j
            continue
        if source.startswith("(*", i):
            j = source.find("*)", i + 2)
            if j < 0:
                diags.append(error("unterminated comment", line, col))
                break
            bump(source[i:j + 2])
            i = j + 2
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] in "_'"):
                j += 1
            word = source[i:j]
            kind = "kw" if word in KEYWORDS else "id"
            tokens.append(Token(kind, word, line, col))
            bump(word)
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("int", source[i:j], line, col))
            bump(source[i:j])
            i = j
            continue
        for sym_text in SYMBOLS:
            if source.startswith(sym_text, i):
                tokens.append(Token("sym", sym_text, line, col))
                bump(sym_text)
                i += len(sym_text)
                break
        else:
            diags.append(error(f"unknown character {ch!r}", line, col))
            bump(ch)
            i += 1

    if diags:
        raise FrontEndError(diags)
    tokens.append(Token("eof", "", line, col))
    return tokens
