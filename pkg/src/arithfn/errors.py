"""Exception types shared across the package."""

from __future__ import annotations


class ArithfnError(Exception):
    """Base class of every error raised by this package."""


class BoundMismatchError(ArithfnError, ValueError):
    """Two functions with different truncation bounds were combined."""


class BackendMismatchError(ArithfnError, ValueError):
    """Two functions with different coefficient backends were combined."""


class UnsupportedBackendError(ArithfnError, ValueError):
    """The requested operation is not defined for this coefficient backend."""


class NonFiniteError(ArithfnError, ValueError):
    """A float value with a NaN or infinite component was constructed."""


class NotInvertibleError(ArithfnError, ValueError):
    """Dirichlet inverse requested for a function with a(1) = 0."""


class DomainError(ArithfnError, ValueError):
    """Input violates an operator's domain (wrong value at index 1)."""

    def __init__(self, message: str, value=None):
        super().__init__(message)
        self.value = value


class StructureError(ArithfnError, ValueError):
    """A decomposition precondition failed; carries the disproving witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(ArithfnError, ValueError):
    """A serialized function table is malformed; carries the 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ExprSyntaxError(ArithfnError, ValueError):
    """Expression text failed to parse; carries offset and expectations."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        super().__init__(f"offset {position}: {message}")
        self.position = position
        self.expected = expected


class ExprEvalError(ArithfnError, ValueError):
    """Evaluating an expression node failed; carries the node's source span."""

    def __init__(self, message: str, span: str = "", position: int = -1):
        if span:
            message = f"{message} (in `{span}`)"
        super().__init__(message)
        self.span = span
        self.position = position
