"""Exception hierarchy.

Everything raised deliberately by this package derives from
:class:`CliffidemError`, so callers can catch one type.  Most errors are
also ``ValueError`` subclasses because they signal bad inputs.
"""


class CliffidemError(Exception):
    """Base class for all package errors."""


class SignatureError(CliffidemError, ValueError):
    """Invalid (p, q) pair, dimension cap exceeded, or bad generator index."""


class SignatureMismatchError(CliffidemError, ValueError):
    """Two operands live in different algebras."""


class GradeError(CliffidemError, ValueError):
    """Grade index outside 0..p+q."""


class JSONFormatError(CliffidemError, ValueError):
    """A serialized document does not match the published schema."""


class NotIdempotentError(CliffidemError, ValueError):
    """An operation that requires A*A = A received something else."""


class RankRangeError(CliffidemError, ValueError):
    """A rank class outside 0..N, or unrealizable for the algebra."""


class RankComputationError(CliffidemError, ArithmeticError):
    """The scalar-part rank rule produced a non-integer or out-of-range
    value — impossible for true idempotents, so it flags a real bug."""


class SimpleAlgebraError(CliffidemError, ValueError):
    """A central split was requested in an algebra with trivial center."""


class FamilySearchError(CliffidemError, RuntimeError):
    """No primitive blade family was found (should be impossible)."""


class RetryBudgetError(CliffidemError, RuntimeError):
    """Random search exhausted its retry budget."""


class SingularMatrixError(CliffidemError, ValueError):
    """A linear solve or inversion hit a singular matrix."""


class OffVarietyError(CliffidemError, ValueError):
    """A parameter point does not satisfy its variety equations exactly."""


class ExtractionError(CliffidemError, ValueError):
    """An element passed the idempotent/rank checks yet is not of the
    family's coefficient form — an internal inconsistency."""


class DegenerateParameterError(CliffidemError, ValueError):
    """A rational parametrization was evaluated where it is undefined."""
