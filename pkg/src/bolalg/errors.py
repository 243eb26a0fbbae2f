"""Exception hierarchy shared by the whole package."""

from __future__ import annotations


class BolalgError(Exception):
    """Base class for every error raised by bolalg."""


class DimensionError(BolalgError, ValueError):
    """Operands have incompatible shapes or ambient dimensions."""


class PreconditionError(BolalgError):
    """An input violates a documented precondition.

    ``condition`` names the failed check and ``witness`` carries whatever
    concrete data demonstrates the failure (a vector, a basis tuple, ...).
    """

    def __init__(self, condition: str, message: str, witness=None):
        super().__init__(f"{condition}: {message}")
        self.condition = condition
        self.message = message
        self.witness = witness


class QuotientError(PreconditionError):
    """The operations are not well defined on the requested quotient."""


class FormatError(BolalgError, ValueError):
    """Malformed algebra, module or morphism file."""

    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class IdentitySyntaxError(BolalgError, ValueError):
    """Malformed identity expression; ``position`` is a 1-based column."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        hint = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"position {position}: {message}{hint}")
        self.position = position
        self.expected = expected
