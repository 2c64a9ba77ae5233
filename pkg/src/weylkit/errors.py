"""Exception types raised across the package."""


class WeylkitError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(WeylkitError):
    """Operands have incompatible shapes."""


class NotHermitian(WeylkitError):
    """Matrix fails the Hermitian precondition."""


class NoConvergence(WeylkitError):
    """Iterative eigensolver hit its sweep cap with too much off-diagonal mass."""


class RankDeficient(WeylkitError):
    """Input columns are not numerically independent."""


class NotPrimitiveRoot(WeylkitError):
    """Scalar is not a primitive p-th root of unity."""


class UnsupportedOrder(WeylkitError):
    """Construction requires an odd order p >= 3."""


class DimensionOverflow(WeylkitError):
    """Tensor construction would exceed the dimension cap."""


class OrderViolation(WeylkitError):
    """Unitary does not have order p within tolerance."""


class NotWeylPair(WeylkitError):
    """Pair fails the Weyl commutation-relation residual test."""


class UnequalMultiplicities(WeylkitError):
    """Eigenvalue multiplicities of a p-th order unitary are not all equal."""


class DivisibilityViolation(WeylkitError):
    """Matrix dimension is not divisible by p."""


class MismatchedOrder(WeylkitError):
    """Two systems use different p or different root of unity."""


class ConstraintDegeneracy(WeylkitError):
    """Affine constraint projector could not be formed."""


class IterationCap(WeylkitError):
    """Span closure failed to stabilize; signals numerical failure."""
