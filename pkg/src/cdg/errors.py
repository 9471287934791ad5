class CDGError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(CDGError, ValueError):
    """A graph (or part of one) was specified incorrectly."""


class VertexCountError(GraphInputError):
    pass


class VertexRangeError(GraphInputError):
    pass


class SelfLoopError(GraphInputError):
    pass


class MissingEdgeError(GraphInputError):
    pass


class EmptyVertexSetError(GraphInputError):
    pass


class GraphFormatError(GraphInputError):
    pass


class PreconditionError(CDGError, ValueError):
    """An operation was called outside its domain (e.g. a rule on the wrong kind of graph)."""
