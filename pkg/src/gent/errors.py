"""Exception types shared across the package."""


class GentError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveDefinite(GentError):
    """Covariance matrix has a non-positive eigenvalue."""


class NumericalDegeneracy(GentError):
    """Eigenvalues of Omega@V do not form clean +-i*kappa pairs."""


class UnphysicalState(GentError):
    """Covariance matrix violates the uncertainty relation."""


class BranchAmbiguity(GentError):
    """Standard-form recovery found no real nonnegative (c^2, d^2) roots."""


class SingularDenominator(GentError):
    """Form-II residuals evaluated at 2*b_i == v_i."""


class DomainError(GentError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class NotSymplectic(GentError):
    """Matrix fails the symplectic condition M^T Omega M = Omega."""


class OptimizerNoConverge(GentError):
    """Multi-start optimizer results disagree beyond tolerance."""


class BracketFailure(GentError):
    """No bracketing triple found for the scalar minimizer."""


class SupportViolation(GentError):
    """Relative entropy diverges: support(rho) not contained in support(rho')."""


class DimensionMismatch(GentError):
    """Fock operators have incompatible dimensions."""


class DecompositionFailure(GentError):
    """Williamson/Euler decomposition failed the symplectic check."""


class TruncationWarning(UserWarning):
    """Fock truncation left a trace deficit above tolerance."""
