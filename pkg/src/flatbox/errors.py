"""Exception types shared by every module."""


class FlatboxError(Exception):
    """Base class for package errors."""


class InvalidArgument(FlatboxError, ValueError):
    """An argument violates an operation's precondition."""


class Unsupported(FlatboxError):
    """The request is well-formed but outside what the toolkit provides."""


class BudgetExceeded(FlatboxError):
    """An exhaustive search ran out of its node or time allowance."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes
