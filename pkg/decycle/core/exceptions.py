"""
    Django-decycle exceptions
    =========================

    This module defines the exceptions raised by the django-decycle applications. Exceptions that
    signal a bad input value also inherit from ``ValueError``.

"""


class DecycleError(Exception):
    pass


class GraphSizeError(DecycleError, ValueError):
    pass


class NotATreeError(DecycleError, ValueError):
    pass


class VertexIndexError(DecycleError, ValueError):
    pass


class GraphFormatError(DecycleError, ValueError):
    """ Raised when a graph6 string or an edge list cannot be decoded.

    ``position`` is the byte offset (graph6) or the 1-based line number (edge lists) at which the
    problem was detected.

    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = '{} (at {})'.format(message, position)
        super().__init__(message)


class CertificateError(DecycleError):
    pass


class BudgetExhausted(DecycleError):
    """ Raised when the exact solver runs out of nodes or time before proving optimality.

    The best decycling set found so far and the best proven lower bound are attached so that callers
    can report them; they must never be treated as an optimal value.

    """

    def __init__(self, message, incumbent=None, lower_bound=0, nodes=0, wall_time=0.0):
        self.incumbent = incumbent
        self.lower_bound = lower_bound
        self.nodes = nodes
        self.wall_time = wall_time
        super().__init__(message)

    def __reduce__(self):
        return (
            self.__class__,
            (self.args[0], self.incumbent, self.lower_bound, self.nodes, self.wall_time),
        )


class UnknownSuiteError(DecycleError, LookupError):
    pass


class CacheError(DecycleError):
    pass


class ClaimPreconditionError(DecycleError, ValueError):
    """ Raised when a theorem check is called on an instance outside the claim's hypotheses. """
