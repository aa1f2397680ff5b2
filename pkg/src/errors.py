# src/errors.py
from __future__ import annotations
from typing import Dict, Optional, Type


class DynmonError(Exception):
    """Root of every error raised on purpose by this project."""


class InputError(DynmonError, ValueError):
    """Malformed input: unknown vertices, bad permutations, mismatched representations."""


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ConstraintError(InputError):
    """The input is well-formed but violates a problem constraint (e.g. tau(u) > t)."""


class BudgetExceeded(DynmonError):
    """An enumeration guard refused to run."""

    def __init__(self, message: str, attempted: Optional[int] = None):
        super().__init__(message)
        self.attempted = attempted


EXIT_OK = 0
EXIT_NEGATIVE = 1

# most specific class first
EXIT_CODES: Dict[Type[DynmonError], int] = {
    ParseError: 2,
    ConstraintError: 3,
    InputError: 2,
    BudgetExceeded: 4,
}


def exit_code_for(err: DynmonError) -> int:
    for cls, code in EXIT_CODES.items():
        if isinstance(err, cls):
            return code
    return 2
