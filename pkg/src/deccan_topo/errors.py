class TopoError(ValueError):
    """Base class for every error raised by deccan-topo."""


class ParseError(TopoError):
    """Raised when DSL text is syntactically invalid or ill-typed."""

    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ShapeError(TopoError):
    """Raised when a set expression lies outside the fragment an operation supports."""


class PreconditionError(TopoError):
    """Raised when an operation's documented precondition is violated."""
