"""Exception hierarchy shared by every bctk module."""


class BctkError(Exception):
    """Base class for all errors raised by bctk."""


class GraphError(BctkError, ValueError):
    """Malformed graph input or reference to an edge/vertex that does not exist."""


class LoopContractionError(GraphError):
    """Raised when asked to contract a loop."""


class NonTransitiveRelationError(GraphError):
    """The edge relation under some edge failed to be an equivalence.

    ``witness`` holds a triple ``(x, y, z)`` with x~y, y~z but not x~z.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class GuardExceededError(BctkError):
    """An exhaustive enumeration would exceed its configured size guard."""


class CoefficientOverflowError(BctkError, OverflowError):
    """An exact integer left the signed 64-bit range."""


class PreconditionError(BctkError, ValueError):
    """A lemma check was called on an instance outside its hypotheses."""
