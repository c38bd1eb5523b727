"""Diagnostics shared by the lexer, parser, and checker."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # error | warning
    message: str
    line: int      # 1-based
    column: int    # 1-based

    def to_json(self) -> dict:
        return {
            "severity": self.severity,
            "message": self.message,
            "line": self.line,
            "column": self.column,
        }


def error(message: str, line: int, column: int = 1) -> Diagnostic:
    return Diagnostic("error", message, line, column)


class FrontEndError(Exception):
    """Raised when a module cannot be taken further; carries diagnostics."""

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        head = diagnostics[0] if diagnostics else None
        msg = f"{head.line}:{head.column}: {head.message}" if head else "front-end error"
        super().__init__(msg)
