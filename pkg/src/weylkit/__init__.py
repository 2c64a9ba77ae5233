"""Construction, canonicalization, and certification of p-th order unitary
systems satisfying Weyl commutation relations."""

from .canonical import (
    CanonicalForm,
    canonical_u,
    canonical_v,
    canonicalize,
    random_pair,
    spectral_projections,
    unitary_equivalence,
)
from .certify import (
    ChoiMatrix,
    FeasibilityReport,
    UcpCertificate,
    apply_choi,
    choi_of_map,
    dilation_rigidity,
    identity_choi,
    is_ucp,
    matrix_range_member,
    order_equivalence_certificate,
    ucp_interpolation,
)
from .errors import (
    ConstraintDegeneracy,
    DimensionMismatch,
    DimensionOverflow,
    DivisibilityViolation,
    IterationCap,
    MismatchedOrder,
    NoConvergence,
    NotHermitian,
    NotPrimitiveRoot,
    NotWeylPair,
    OrderViolation,
    RankDeficient,
    UnequalMultiplicities,
    UnsupportedOrder,
    WeylkitError,
)
from .linalg import (
    adjoint,
    frobenius_norm,
    haar_unitary,
    hermitian_eig,
    kron,
    matmul,
    operator_norm,
    psd_project,
    qr_orthonormalize,
)
from .star_iso import (
    SpanBasis,
    algebra_span,
    commutant,
    is_irreducible,
    rho_apply,
    rho_inverse,
    word_table,
)
from .tolerances import DEFAULT, ToleranceConfig
from .weyl import (
    RelationReport,
    WeylSystem,
    check_relations,
    clock_matrix,
    counterexample_triple,
    default_zeta,
    ew_matrix,
    shift_matrix,
    simple_commutation,
    simple_weyl_triple,
    spectral_audit,
    weyl_brauer,
    weyl_pair,
)

__version__ = "0.1.0"
