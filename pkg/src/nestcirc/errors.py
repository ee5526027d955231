"""Exception types shared across the package."""


class NestcircError(Exception):
    """Base class for every error raised by nestcirc."""


class BadLabelError(NestcircError):
    """A vertex label is empty or contains whitespace."""


class TooShortError(NestcircError):
    """A closed walk has fewer than 3 edges."""


class NotClosedError(NestcircError):
    """A walk does not end at its starting vertex."""


class SelfLoopError(NestcircError):
    """Two consecutive positions carry the same vertex."""


class RepeatedEdgeError(NestcircError):
    """The same undirected edge is traversed twice."""


class NotAnIntersectionError(NestcircError):
    """The index pair does not name two equal interior vertices."""


class NotASubCircuitError(NestcircError):
    """The index pair does not name a proper sub-circuit."""


VERTEX_TRIPLE = "VertexTriple"
START_VERTEX_REPEATS = "StartVertexRepeats"
NOT_TOTALLY_NESTED = "NotTotallyNested"


class NotPncError(NestcircError):
    """A circuit failed perfectly-nested recognition.

    ``reason`` is one of ``VertexTriple``, ``StartVertexRepeats`` or
    ``NotTotallyNested``.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class TrivialPncError(NestcircError):
    """The operation needs at least one internal vertex."""


class NotInternalVertexError(NestcircError):
    """The label is not an internal vertex of the circuit."""


class InvalidChainError(NestcircError):
    """The cycles and joints do not form a valid chain."""


class NotAMemberError(NestcircError):
    """The circuit is not a member of the reduction family."""


class NotInFamilyError(NestcircError):
    """The target circuit is not reachable from the root."""


class OutOfRangeError(NestcircError):
    """The requested reduction counts exceed the number of internal vertices."""


class TooLongError(NestcircError):
    """A binary sequence is longer than the class bound."""


class BoundMismatchError(NestcircError):
    """Two sequence classes live under different bounds."""


class DimensionMismatchError(NestcircError):
    """A family and a class poset have different sizes."""
