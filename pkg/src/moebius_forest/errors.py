"""Exception types raised by the package."""


class MoebiusError(Exception):
    pass


class ParseError(MoebiusError, ValueError):
    pass


class InvalidMatrixError(MoebiusError, ValueError):
    pass


class DomainError(MoebiusError, ValueError):
    """A point lies outside the domain an operation requires."""


class PoleError(MoebiusError, ZeroDivisionError):
    pass


class NotAPairError(MoebiusError, ValueError):
    pass


class InfiniteDiameterError(MoebiusError, ValueError):
    pass


class GuardExhaustedError(MoebiusError, RuntimeError):
    """Root search hit its step guard.

    All trees of a left-right forest are rooted, so this indicates a bug
    rather than a genuinely infinite ancestry.
    """


class WitnessSearchError(MoebiusError, RuntimeError):
    pass
