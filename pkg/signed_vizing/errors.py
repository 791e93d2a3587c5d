"""Exception hierarchy.

Validation problems subclass ``ValueError`` so callers that only know the builtin
still catch them. ``VizingDiagnosticError`` is a ``RuntimeError``: it means the
extension engine met a configuration it has no rule for, which is a bug report,
not bad input.
"""
from __future__ import annotations

from typing import Any


class SignedVizingError(Exception):
    """Base class for every error raised by this package."""


class GraphValidationError(SignedVizingError, ValueError):
    """A signed graph violates simplicity or vertex range rules."""


class LoopEdgeError(GraphValidationError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphValidationError):
    """Two edges share the same endpoint pair."""


class VertexRangeError(GraphValidationError):
    """An edge endpoint is not a vertex of the graph."""


class UnknownVertexError(SignedVizingError, ValueError):
    """A vertex set mentions a vertex that is not in the graph."""


class UnderlyingGraphMismatchError(SignedVizingError, ValueError):
    """Two signed graphs do not share the same underlying graph."""


class ColorSetError(SignedVizingError, ValueError):
    """Invalid color count or a color outside M_n."""


class ColoringError(SignedVizingError, ValueError):
    """A coloring is malformed or refers to another graph."""


class EdgeLawError(ColoringError):
    """The two end colors of an edge violate gamma(v,e) = -sigma(e) gamma(w,e)."""


class ChainError(SignedVizingError, ValueError):
    """Kempe chain requested with colors that do not fit its start vertex."""


class ZeroChainSwapError(ChainError):
    """Swapping a chain that involves the color 0 is not allowed."""


class PreconditionError(SignedVizingError, ValueError):
    """An operation was called outside its documented preconditions."""


class NotCubicBridgelessError(PreconditionError):
    """Input is not a connected, bridgeless, 3-regular graph."""


class ParseError(SignedVizingError, ValueError):
    """Malformed GraphFile or ColoringFile content."""

    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"{prefix}{message}")


class SizeGuardError(SignedVizingError, ValueError):
    """An exhaustive oracle was asked to run beyond its size limit."""

    def __init__(self, guard: str, limit: int, actual: int) -> None:
        self.guard = guard
        self.limit = limit
        self.actual = actual
        super().__init__(f"{guard}: {actual} exceeds limit {limit}")


class VizingDiagnosticError(SignedVizingError, RuntimeError):
    """The extension engine reached a configuration outside its case analysis."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        self.context = dict(context or {})
        super().__init__(message)

    def __str__(self) -> str:
        base = super().__str__()
        if not self.context:
            return base
        detail = ", ".join(f"{k}={v!r}" for k, v in sorted(self.context.items()))
        return f"{base} ({detail})"
