"""Typed errors raised by the library.

Everything inherits from AlgebraError so callers can catch the whole
family at once; the CLI maps subfamilies onto distinct exit codes.
"""


class AlgebraError(Exception):
    """Base class for all library errors."""


class InvalidElement(AlgebraError):
    """An element description violates a representation invariant."""


class BadFront(InvalidElement):
    """Front pair out of range, duplicated, or not below the ray."""


class BadRay(InvalidElement):
    """Ray start or shifted ray start falls below 1."""


class RangeCollision(InvalidElement):
    """A front value collides with the ray's range or another value."""


class WindowTooSmall(AlgebraError):
    """Truncation window does not reach the element's ray."""


class WindowMismatch(AlgebraError):
    """Brute-force composition of maps with different windows."""


class BadArguments(AlgebraError):
    """Arguments outside an operation's documented precondition."""


class NotIdempotent(AlgebraError):
    """Operation requires idempotent input."""


class NotInCN(AlgebraError):
    """Element has exceptional points, so it is not a pure ray shift."""


class NotMember(AlgebraError):
    """Element lies outside the requested flavor."""


class NotRelated(AlgebraError):
    """The requested witness does not exist for this pair."""


class UnsupportedFlavor(AlgebraError):
    """The operation is not defined for the requested flavor."""


class EqualInputs(AlgebraError):
    """Operation requires two distinct inputs."""


class BadBound(AlgebraError):
    """Enumeration bound too small for the data, or too large to walk."""


class InvalidNbhd(AlgebraError):
    """Neighborhood anchors are not contained in the center's domain."""


class AnchorOutsideDomain(AlgebraError):
    """An anchor point is not in the domain of the relevant product."""


class Unsatisfiable(AlgebraError):
    """Sampler constraints cannot be met."""


class ParseError(AlgebraError):
    """Expression text is not well formed; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset
