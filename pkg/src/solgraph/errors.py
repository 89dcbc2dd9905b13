"""Exception types shared across the package."""

from __future__ import annotations


class SolgraphError(Exception):
    """Base class for all errors raised by solgraph."""


class DegreeMismatchError(SolgraphError, ValueError):
    pass


class CapacityError(SolgraphError):
    """An operation would need to enumerate more elements than allowed."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class NotNormalError(SolgraphError, ValueError):
    pass


class SolubleGroupError(SolgraphError, ValueError):
    def __init__(self, msg: str = "group is soluble"):
        super().__init__(msg)


class SpecSyntaxError(SolgraphError, ValueError):
    def __init__(self, msg: str, offset: int):
        self.offset = offset
        super().__init__(f"{msg} at offset {offset}")


class UnsupportedParameterError(SolgraphError, ValueError):
    pass


class GeneratorFileError(SolgraphError, ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class NotAVertexError(SolgraphError, ValueError):
    pass


class NoInvolutionError(SolgraphError, ValueError):
    pass


class NotSophieGermainError(SolgraphError, ValueError):
    pass
