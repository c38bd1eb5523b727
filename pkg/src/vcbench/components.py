"""Standard components: the concept specifications user code verifies
against. Their sources ship in the corpus and are parsed at load time so
the displayed text and the checked contracts can never drift apart."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import List

from . import checker
from .checker import ConceptInfo, Library, check_module
from .parser import parse_module

BUILTIN_CONCEPTS = ("Integer_Template", "Preemptable_Queue_Template",
                    "Stack_Template")


def corpus_text(name: str) -> str:
    return (resources.files("vcbench") / "corpus" / f"{name}.spl").read_text()


def corpus_names() -> List[str]:
    root = resources.files("vcbench") / "corpus"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".spl"))


@lru_cache(maxsize=1)
def standard_components() -> List[ConceptInfo]:
    lib = Library()
    out: List[ConceptInfo] = []
    for name in BUILTIN_CONCEPTS:
        typed = check_module(parse_module(corpus_text(name)), lib)
        lib.add(typed)
        out.append(typed.concept)
    # the parsed Integer_Template replaces the bootstrap copy
    checker.INTEGER.types = out[0].types
    checker.INTEGER.contracts = out[0].contracts
    return out


def base_library() -> Library:
    lib = Library()
    for concept in standard_components():
        lib.concepts[concept.name] = concept
    return lib
