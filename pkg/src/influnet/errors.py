"""Exception types shared across the package."""

from __future__ import annotations


class EdgeListParseError(ValueError):
    """Raised when an edge-list CSV row cannot be parsed.

    Carries the 1-based line number of the offending row.
    """

    def __init__(self, message: str, line_no: int) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver exhausts its iteration budget.

    The last iterate and its residual are attached so callers can inspect
    how far the computation got.
    """

    def __init__(self, message: str, iterate: dict, residual: float) -> None:
        super().__init__(message)
        self.iterate = iterate
        self.residual = residual
