"""Exception hierarchy shared by every scramblekit module."""


class ScrambleKitError(ValueError):
    """Base class for all errors raised by scramblekit."""


class GraphError(ScrambleKitError):
    pass


class LoopEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class EmptySide(GraphError):
    pass


class EmptySet(GraphError):
    pass


class TerminalsOverlap(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class ZeroFactor(GraphError):
    pass


class BadParam(ScrambleKitError):
    pass


class BadSet(ScrambleKitError):
    pass


class NotEffective(ScrambleKitError):
    pass


class CapExceeded(ScrambleKitError):
    pass


class GraphMismatch(ScrambleKitError):
    pass


class InvalidScramble(ScrambleKitError):
    pass


class NoColumnMetadata(ScrambleKitError):
    pass


class NotASubgraph(ScrambleKitError):
    pass


class NotASubdivision(ScrambleKitError):
    pass


class TooLarge(ScrambleKitError):
    pass


class NotAPermutation(ScrambleKitError):
    pass


class FormatError(ScrambleKitError):
    """Malformed graph, divisor or scramble text."""
