"""Exception hierarchy shared by every module of the package."""


class RTGraphError(Exception):
    """Base class for all errors raised by :mod:`rtgraph`."""


class GraphError(RTGraphError, ValueError):
    pass


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class ParameterTooSmall(GraphError):
    pass


class ParseError(GraphError):
    pass


class LinAlgError(RTGraphError, ArithmeticError):
    pass


class NotSquare(LinAlgError):
    pass


class DimensionMismatch(LinAlgError):
    pass


class SingularMatrix(LinAlgError):
    pass


class InexactDivision(LinAlgError):
    """A polynomial division left a non-zero remainder.

    Inside closed-form assembly this means an algebraic identity failed, so it
    is never swallowed.
    """


class Disconnected(RTGraphError):
    pass


class TooSmall(RTGraphError):
    pass


class NotRegular(RTGraphError):
    pass


class ForbiddenEvaluationPoint(RTGraphError, ValueError):
    pass


class InvalidParams(RTGraphError, ValueError):
    pass
