"""Exception hierarchy shared by every cpxcp module."""

from typing import Iterable, List, Optional


class CpxcpError(Exception):
    """Base class for all library errors."""


class PresentationSyntaxError(CpxcpError, ValueError):
    """DSL text that does not match the grammar."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        expected: Iterable[str] = (),
    ):
        self.line = line
        self.column = column
        self.expected = sorted(expected)
        location = f" at line {line}, column {column}" if line is not None else ""
        hint = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message}{location}{hint}")


class PresentationValidationError(CpxcpError, ValueError):
    """A parsed presentation that violates the structural invariants."""

    def __init__(self, violations: List["object"]):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations)
        super().__init__(f"Invalid presentation: {summary}")


class ZeroVectorError(CpxcpError, ValueError):
    """An adapted basis was requested for the zero vector."""


class MixedPresentationsError(CpxcpError, ValueError):
    """Elements from different presentations were combined."""


class InvalidMoveError(CpxcpError, ValueError):
    """A generator move that is not invertible for the presentation's prime."""


class BasisChangeError(CpxcpError, ValueError):
    """A center rebase that is not an automorphism."""


class CommutingPairError(CpxcpError, ValueError):
    """Two elements commute, so they cannot stand in for x and y."""


class ClassificationError(CpxcpError, RuntimeError):
    """A classification step produced a shape it should not have."""


class InfiniteGroupError(CpxcpError, ValueError):
    """The oracle was handed a presentation with an infinite center."""


class TooLargeError(CpxcpError, ValueError):
    """An oracle computation would exceed its configured size bound."""

    def __init__(self, order: int, bound: int, what: str = "group"):
        self.order = order
        self.bound = bound
        super().__init__(f"{what} of order {order} exceeds the bound {bound}")


class UsageError(CpxcpError, ValueError):
    """Malformed command-line input, such as a bad family range or an unreadable file."""
