"""Exception types shared across the package."""


class MctError(Exception):
    """Base class for all errors raised by mcturan."""


class InvalidCertificate(MctError, ValueError):
    """A list of classes does not describe an edge-disjoint C5 decomposition."""


class BadClass(InvalidCertificate):
    """A color class has a repeated or out-of-range vertex."""


class DuplicateEdge(InvalidCertificate):
    """Two color classes share an edge."""

    def __init__(self, edge, first, second):
        self.edge = edge
        self.classes = (first, second)
        super().__init__(f"edge {edge[0]}-{edge[1]} appears in classes {first} and {second}")


class PatternTooLarge(MctError, ValueError):
    pass


class BadN(MctError, ValueError):
    pass


class PackingNotFound(MctError):
    pass


class PreconditionViolated(MctError):
    pass


class TooLarge(MctError, ValueError):
    pass


class BudgetExhausted(MctError):
    """Search stopped at its node budget. ``result`` holds the best packing found."""

    def __init__(self, result):
        self.result = result
        super().__init__(f"node budget exhausted after {result.nodes_explored} nodes "
                         f"(best k={result.k_star})")


class ParseError(MctError, ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
