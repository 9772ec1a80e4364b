"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HvSwitchError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyInput(HvSwitchError):
    pass


class Overlap(HvSwitchError):
    pass


class CardinalityMismatch(HvSwitchError):
    pass


class ProjectionMismatch(HvSwitchError):
    def __init__(self, message: str, direction: str | None = None, line: int | None = None):
        super().__init__(message)
        self.direction = direction
        self.line = line


class NotAMember(HvSwitchError):
    pass


class AmbiguousFree(HvSwitchError):
    pass


class NotContained(HvSwitchError):
    pass


class Collision(HvSwitchError):
    pass


class InvalidSpiral(HvSwitchError):
    """Base class for the ways a vertex cycle can fail to be a squared spiral."""


class OddVertexCount(InvalidSpiral):
    pass


class NonAlternating(InvalidSpiral):
    pass


class ZeroLengthSegment(InvalidSpiral):
    pass


class CollinearTriple(InvalidSpiral):
    pass


class DuplicateVertex(InvalidSpiral):
    pass


class NotAWindow(HvSwitchError):
    pass


class NotACurl(HvSwitchError):
    pass


class NotACurlSequence(HvSwitchError):
    pass


class NotApplicable(HvSwitchError):
    pass


class GridTooLarge(HvSwitchError):
    pass


class ParseError(HvSwitchError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
