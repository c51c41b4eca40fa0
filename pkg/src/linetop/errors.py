"""Exception types shared across the package."""


class LinetopError(Exception):
    """Base class for all package errors."""


class OrderMismatch(LinetopError):
    """Two values built over different order expressions were combined."""


class UnsupportedOrder(LinetopError):
    """The requested operation is not available for this order expression."""


class EmptyInterval(LinetopError):
    """An interval query received endpoints in the wrong position."""


class EmptyFamily(LinetopError):
    """A sup/inf/join/meet was requested for an empty family."""


class EmptyTrace(LinetopError):
    """A separating-element search ran on a violated precondition."""


class UncertifiedLimit(LinetopError):
    """A sequence family failed certification and cannot be used as a limit."""


class OutOfSandwich(LinetopError):
    """A generator cut lies outside the declared sandwich interval."""


class SearchExhausted(LinetopError):
    """A bounded witness search ended without finding a witness."""


class SizeTooLarge(LinetopError):
    """A brute-force enumeration was requested beyond its size cap."""


class ParseError(LinetopError):
    """Order/element/cut text failed to parse."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position
