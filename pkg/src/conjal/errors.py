"""Exception hierarchy.

Every error carries a stable ``code`` used by the CLI as ``ERR:<code>`` and an
``exit_code`` (1 for domain errors, 2 for usage/parse errors).
"""


class ConjalError(Exception):
    code = "ERROR"
    exit_code = 1


class RingMismatch(ConjalError):
    code = "RING_MISMATCH"


class NotEntire(ConjalError):
    code = "NOT_ENTIRE"


class AlgebraMismatch(ConjalError):
    code = "ALGEBRA_MISMATCH"


class UnknownAlgebra(ConjalError):
    code = "UNKNOWN_ALGEBRA"
    exit_code = 2


class NotScalar(ConjalError):
    code = "NOT_SCALAR"


class NotInvertible(ConjalError):
    code = "NOT_INVERTIBLE"

    def __init__(self, message, classification=None):
        super().__init__(message)
        self.classification = classification


class NonAssociative(ConjalError):
    code = "NON_ASSOCIATIVE"


class RootOfDenominator(ConjalError):
    code = "ROOT_OF_DENOMINATOR"

    def __init__(self, message, poly=None, point=None):
        super().__init__(message)
        self.poly = poly
        self.point = point


class NotRepresentable(ConjalError):
    code = "NOT_REPRESENTABLE"


class DegreeBoundExceeded(ConjalError):
    code = "DEGREE_BOUND_EXCEEDED"


class PreconditionViolated(ConjalError):
    code = "PRECONDITION"


class BadScalar(ConjalError):
    code = "BAD_SCALAR"
    exit_code = 2


class ExprSyntaxError(ConjalError):
    code = "SYNTAX"
    exit_code = 2

    def __init__(self, offset, expected, found=""):
        msg = f"at offset {offset}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.offset = offset
        self.expected = expected


class UnknownBasisName(ConjalError):
    code = "UNKNOWN_BASIS"
    exit_code = 2

    def __init__(self, name, offset):
        super().__init__(f"unknown basis name {name!r} at offset {offset}")
        self.name = name
        self.offset = offset


class DegenerateGenerator(UserWarning):
    """Raised as a warning when a denominator lands in the zero set at every sample."""
