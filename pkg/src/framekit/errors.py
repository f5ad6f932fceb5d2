"""Exception classes raised by framekit."""


class FramekitError(Exception):
    """Base class for all framekit errors."""


class NotHermitian(FramekitError):
    pass


class NotPSD(FramekitError):
    pass


class ZeroSequence(FramekitError):
    """Raised when every vector of a sequence vanishes."""


class DimensionMismatch(FramekitError):
    pass


class NotONB(FramekitError):
    pass


class NotRieszBasis(FramekitError):
    pass


class NotFrameForH(FramekitError):
    """Raised when a sequence does not span the ambient space but has to."""


class SingularQ(FramekitError):
    pass


class NotBijectiveOnV(FramekitError):
    pass


class QNormViolation(FramekitError):
    """Raised when an operator is not admissible for a type III R-dual.

    ``violations`` lists the failed bounds as ``(name, value, limit)``.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        parts = ["%s = %.17g exceeds %.17g" % v for v in self.violations]
        super().__init__("; ".join(parts))


class HypothesisViolated(FramekitError):
    """Raised when a characterization is applied outside its hypotheses.

    ``conditions`` holds the failed hypothesis conditions.
    """

    def __init__(self, conditions):
        self.conditions = list(conditions)
        parts = ["%s (lhs=%.17g, rhs=%.17g)" % (c.name, c.lhs, c.rhs) for c in self.conditions]
        super().__init__("hypothesis violated: " + ", ".join(parts))


class NotType3(FramekitError):
    pass


class WitnessTypeMismatch(FramekitError):
    pass


class BadLattice(FramekitError):
    pass


class ParseError(FramekitError):
    """Raised on malformed matrix files; carries 1-based ``line`` and ``column``."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = " (line %d" % line
            where += ", column %d)" % column if column is not None else ")"
        super().__init__(message + where)


class ExampleAssertionFailure(FramekitError):
    """Raised when a reproduced example value disagrees with the expected one."""
