"""Exception types shared across the package."""

from __future__ import annotations


class CosetError(Exception):
    """Base class for every error raised by this package."""


class OverCap(CosetError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, limit: int, detail: str = "") -> None:
        self.what = what
        self.limit = limit
        msg = f"{what} exceeds cap {limit}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class Overflow(OverCap):
    """Coset enumeration ran out of room: the index is too large or infinite."""

    def __init__(self, max_cosets: int) -> None:
        super().__init__("live cosets", max_cosets, "index too large or infinite")
        self.max_cosets = max_cosets


class ParseError(CosetError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None) -> None:
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f": {text!r}"
        super().__init__(message)


class NotNormal(CosetError):
    pass


class NotSurjective(CosetError):
    pass


class TrivialGroup(CosetError):
    pass


class LabelMismatch(CosetError):
    pass


class BadProductHypothesis(CosetError):
    pass
