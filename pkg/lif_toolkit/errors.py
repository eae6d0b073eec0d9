"""errors.py: exception hierarchy shared by every lif_toolkit module."""
from typing import Optional, Tuple

Span = Tuple[int, int]


class LifToolkitError(ValueError):
    """Base class. `span` is the (start, end) offset of the offending
    sub-expression when the error came out of the expression evaluator."""

    kind = "Error"

    def __init__(self, message: str = "", span: Optional[Span] = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        if self.span is None:
            return f"{self.kind}: {self.message}"
        return f"{self.kind} at {self.span[0]}..{self.span[1]}: {self.message}"


class DivisionByZero(LifToolkitError, ZeroDivisionError):
    kind = "DivisionByZero"


class TruncationExceeded(LifToolkitError):
    kind = "TruncationExceeded"


class NotInvertible(LifToolkitError):
    kind = "NotInvertible"


class NotDivisible(LifToolkitError):
    kind = "NotDivisible"


class CompositionRequiresNonunit(LifToolkitError):
    kind = "CompositionRequiresNonunit"


class NotAlmostUnit(LifToolkitError):
    kind = "NotAlmostUnit"


class PreconditionViolated(LifToolkitError):
    kind = "PreconditionViolated"


class ExpressionSyntaxError(LifToolkitError):
    """Parse failure at byte `offset`; `expected` lists what would have been accepted."""

    kind = "SyntaxError"

    def __init__(self, message: str, offset: int, expected: Tuple[str, ...] = ()):
        super().__init__(message, span=(offset, offset + 1))
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))

    def __str__(self) -> str:
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        return f"{self.kind} at offset {self.offset}: {self.message}{exp}"


class UnknownFunction(LifToolkitError):
    kind = "UnknownFunction"


class UnboundName(LifToolkitError):
    kind = "UnboundName"
