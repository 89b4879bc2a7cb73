"""Exception types shared across the package."""

from __future__ import annotations


class QT2ECError(Exception):
    """Base class for every error raised by this package."""


class FormatError(QT2ECError, ValueError):
    """Malformed input text (edge list, graph6, ...)."""


class ContractError(QT2ECError, ValueError):
    """API misuse: out-of-range arguments, unknown edges, mismatched objects."""


class RefusalError(QT2ECError, RuntimeError):
    """Operation declined: a size cap was exceeded or a precondition on the
    graph (e.g. connectivity) does not hold.  Maps to CLI exit code 3."""


class InfeasibilityError(RefusalError):
    """An edge class admits no consistent orientation; ``edge`` is forced
    both ways by the propagation rule."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge = edge
