"""Exception types raised by the hsvd package."""

__all__ = [
    "HsvdError",
    "DimensionMismatch",
    "SignatureMismatch",
    "NotHermitian",
    "NoConvergence",
    "IsotropicBreakdown",
    "DualNotFound",
    "InertiaMismatch",
    "NotHyperexchange",
    "Infeasible",
    "InternalInvariantViolation",
    "MatrixParseError",
    "FactorsFileError",
]


class HsvdError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HsvdError):
    """Operands have incompatible shapes."""


class SignatureMismatch(DimensionMismatch):
    """Matrix row/column count does not equal p + q of the signature."""


class NotHermitian(HsvdError):
    """Input to the Hermitian eigensolver fails the symmetry check."""


class NoConvergence(HsvdError):
    """Iterative solver exceeded its sweep cap."""


class IsotropicBreakdown(HsvdError):
    """Hyperbolic orthogonalization found only isotropic candidates.

    Signals that the subspace is degenerate with respect to the indefinite
    inner product and paired (isotropic) handling is required instead.
    """


class DualNotFound(HsvdError):
    """The linear system for an isotropic dual vector is inconsistent.

    Indicates the ambient subspace is too small, i.e. inconsistent
    invariants upstream.
    """


class InertiaMismatch(HsvdError):
    """A diagonal +-1 matrix has the wrong number of +1 entries."""


class NotHyperexchange(HsvdError):
    """V^H J V is not the claimed +-1 diagonal within tolerance."""


class Infeasible(HsvdError):
    """Requested invariants violate a feasibility constraint."""


class InternalInvariantViolation(HsvdError):
    """A condition that must hold by construction failed; this is a bug."""


class MatrixParseError(HsvdError):
    """A matrix file could not be parsed.

    Carries the 1-based line number at which parsing failed.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FactorsFileError(HsvdError):
    """A factors JSON document is malformed or inconsistent."""
