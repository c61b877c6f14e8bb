from __future__ import annotations

from typing import Optional


class AlgebraError(ValueError):
    """Base class for every user-facing error raised by the library."""


class ParseError(AlgebraError):
    """
    Syntax error in a polynomial expression or a session file.

    `position` is the 0-based offset inside the expression; `line` and
    `column` are 1-based and only set when parsing a session file.
    """

    def __init__(
        self,
        message: str,
        position: Optional[int] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ) -> None:
        self.message = message
        self.position = position
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is not None:
            return f"line {self.line}, column {self.column}: {self.message}"
        if self.position is not None:
            return f"at position {self.position}: {self.message}"
        return self.message


class RingMismatchError(AlgebraError):
    pass


class ExponentOverflowError(AlgebraError):
    pass


class PreconditionError(AlgebraError):
    pass


class InsufficientDataError(AlgebraError):
    pass


class SessionError(AlgebraError):
    pass
