"""Constructors for systems of p-th order unitaries with Weyl commutation relations.

The canonical generators are the clock matrix (diagonal of p-th roots of
unity) and the cyclic shift matrix.  From those we build the simple triple,
the tensor-iterated families, and the audit matrix whose printed form fails
its own order relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionOverflow,
    NotPrimitiveRoot,
    OrderViolation,
    UnsupportedOrder,
)
from .linalg import frobenius_norm, kron
from .tolerances import DEFAULT, ToleranceConfig

__all__ = [
    "RelationReport",
    "WeylSystem",
    "check_relations",
    "clock_matrix",
    "counterexample_triple",
    "default_zeta",
    "ew_matrix",
    "shift_matrix",
    "simple_weyl_triple",
    "simple_commutation",
    "spectral_audit",
    "weyl_brauer",
    "weyl_pair",
]


def default_zeta(p: int) -> complex:
    """The principal primitive p-th root of unity exp(2*pi*i/p)."""
    return complex(np.exp(2j * np.pi / p))


def _check_primitive_root(p: int, zeta: complex, tol: float = 1e-10) -> complex:
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > tol or abs(zeta**p - 1.0) > tol:
        raise NotPrimitiveRoot(f"{zeta} is not a p-th root of unity for p={p}")
    for k in range(1, p):
        if abs(zeta**k - 1.0) <= tol:
            raise NotPrimitiveRoot(f"{zeta} has order {k} < {p}")
    return zeta


@dataclass
class WeylSystem:
    """A g-tuple of d x d unitaries with a commutation-exponent matrix over Z_p.

    The intended relations are u_k u_l = zeta**C[k, l] * u_l u_k with C
    skew-symmetric mod p.  Construction does not validate the relations;
    ``check_relations`` audits them and reports residuals.
    """

    p: int
    zeta: complex
    unitaries: list = field(default_factory=list)
    commutation: np.ndarray = None

    def __post_init__(self):
        self.zeta = complex(self.zeta)
        self.unitaries = [np.asarray(u, dtype=np.complex128) for u in self.unitaries]
        self.commutation = np.asarray(self.commutation, dtype=int)

    @property
    def g(self) -> int:
        return len(self.unitaries)

    @property
    def d(self) -> int:
        return self.unitaries[0].shape[0]


@dataclass
class RelationReport:
    """Residuals of the order and commutation relations of a WeylSystem."""

    max_order_residual: float
    residual_matrix: np.ndarray
    is_simple: bool
    pass_: bool


def simple_commutation(g: int) -> np.ndarray:
    """Exponent matrix with entry 1 above the diagonal and -1 below."""
    c = np.zeros((g, g), dtype=int)
    for k in range(g):
        for l in range(k + 1, g):
            c[k, l] = 1
            c[l, k] = -1
    return c


def clock_matrix(p: int, zeta: complex | None = None) -> np.ndarray:
    """Diagonal unitary diag(1, zeta, ..., zeta**(p-1)); traceless."""
    if zeta is None:
        zeta = default_zeta(p)
    zeta = _check_primitive_root(p, zeta)
    return np.diag(zeta ** np.arange(p)).astype(np.complex128)


def shift_matrix(p: int) -> np.ndarray:
    """Cyclic shift: e_j -> e_{j+1 mod p}.  Unitary of order p, traceless."""
    if p < 2:
        raise UnsupportedOrder("shift_matrix requires p >= 2")
    v = np.zeros((p, p), dtype=np.complex128)
    for j in range(p):
        v[(j + 1) % p, j] = 1.0
    return v


def weyl_pair(p: int, zeta: complex | None = None) -> WeylSystem:
    """The canonical clock/shift pair; satisfies u v = zeta v u."""
    if zeta is None:
        zeta = default_zeta(p)
    u = clock_matrix(p, zeta)
    v = shift_matrix(p)
    return WeylSystem(
        p=p,
        zeta=zeta,
        unitaries=[u, v],
        commutation=np.array([[0, 1], [-1, 0]]),
    )


def _simple_triple_matrices(p: int, zeta: complex):
    u = clock_matrix(p, zeta)
    v = shift_matrix(p)
    lam = zeta ** ((p - 1) // 2)
    w = lam * (u @ v)
    return u, w, v


def simple_weyl_triple(p: int, zeta: complex | None = None) -> WeylSystem:
    """(clock, lam * clock * shift, shift) with lam = zeta**((p-1)/2).

    The scalar is the unique choice making the middle unitary p-th order;
    it only has an integer exponent for odd p.
    """
    if p < 3 or p % 2 == 0:
        raise UnsupportedOrder("simple triple requires odd p >= 3")
    if zeta is None:
        zeta = default_zeta(p)
    zeta = _check_primitive_root(p, zeta)
    wa, wb, wc = _simple_triple_matrices(p, zeta)
    return WeylSystem(
        p=p, zeta=zeta, unitaries=[wa, wb, wc], commutation=simple_commutation(3)
    )


def weyl_brauer(
    p: int, k: int, zeta: complex | None = None, tol: ToleranceConfig = DEFAULT
) -> WeylSystem:
    """Tensor-iterated family of 2k+1 unitaries of dimension p**k.

    Starting from the simple triple, each round maps matrices
    (x_1, ..., x_m) to (x_1 (x) 1, ..., x_{m-1} (x) 1, x_m (x) a,
    x_m (x) b, x_m (x) c).  The result satisfies the simple commutation
    relations and its last element is the k-fold tensor power of the shift.
    """
    if p < 3 or p % 2 == 0:
        raise UnsupportedOrder("weyl_brauer requires odd p >= 3")
    if k < 1:
        raise UnsupportedOrder("weyl_brauer requires k >= 1")
    if p**k > tol.dimension_cap:
        raise DimensionOverflow(f"p**k = {p**k} exceeds cap {tol.dimension_cap}")
    if zeta is None:
        zeta = default_zeta(p)
    zeta = _check_primitive_root(p, zeta)
    wa, wb, wc = _simple_triple_matrices(p, zeta)
    ident = np.eye(p, dtype=np.complex128)
    mats = [wa, wb, wc]
    for _ in range(k - 1):
        last = mats[-1]
        mats = [kron(x, ident) for x in mats[:-1]] + [
            kron(last, wa),
            kron(last, wb),
            kron(last, wc),
        ]
    return WeylSystem(
        p=p, zeta=zeta, unitaries=mats, commutation=simple_commutation(len(mats))
    )


def counterexample_triple(p: int, zeta: complex | None = None) -> WeylSystem:
    """A simple triple (x, y, z) with y a nontrivial scalar twist of the
    canonical middle unitary; no ucp map can send the simple triple onto it.
    """
    if p < 3 or p % 2 == 0:
        raise UnsupportedOrder("counterexample requires odd p >= 3")
    if zeta is None:
        zeta = default_zeta(p)
    zeta = _check_primitive_root(p, zeta)
    wa, wb, wc = _simple_triple_matrices(p, zeta)
    return WeylSystem(
        p=p,
        zeta=zeta,
        unitaries=[wa, zeta * wb, wc],
        commutation=simple_commutation(3),
    )


def ew_matrix(p: int, zeta: complex | None = None) -> np.ndarray:
    """Verbatim transcription of the published cyclic matrix with subdiagonal
    entries zeta**2, ..., zeta**(p-1), zeta**((1-p)/2) and corner 1.

    No claim is made that this matrix is p-th order or satisfies the
    commutation relations; audit it with ``check_relations``/``spectral_audit``.
    For p = 3 the cycle product is zeta, so the cube equals zeta times the
    identity rather than the identity.
    """
    if p < 3 or p % 2 == 0:
        raise UnsupportedOrder("ew_matrix requires odd p >= 3")
    if zeta is None:
        zeta = default_zeta(p)
    zeta = _check_primitive_root(p, zeta)
    y = np.zeros((p, p), dtype=np.complex128)
    y[0, p - 1] = 1.0
    for k in range(2, p):
        y[k - 1, k - 2] = zeta**k
    y[p - 1, p - 2] = zeta ** ((1 - p) // 2)
    return y


def check_relations(ws: WeylSystem, tol: ToleranceConfig = DEFAULT) -> RelationReport:
    """Audit order and commutation residuals; reports, never raises."""
    g = ws.g
    d = ws.d
    ident = np.eye(d, dtype=np.complex128)
    order_res = 0.0
    for u in ws.unitaries:
        order_res = max(order_res, frobenius_norm(np.linalg.matrix_power(u, ws.p) - ident))
    residuals = np.zeros((g, g))
    for k in range(g):
        for l in range(g):
            uk, ul = ws.unitaries[k], ws.unitaries[l]
            residuals[k, l] = frobenius_norm(
                uk @ ul - ws.zeta ** int(ws.commutation[k, l]) * (ul @ uk)
            )
    c = np.mod(ws.commutation, ws.p)
    is_simple = all(
        c[k, l] == 1 for k in range(g) for l in range(k + 1, g)
    ) and np.all(np.mod(ws.commutation + ws.commutation.T, ws.p) == 0)
    threshold = tol.relation * d
    passed = order_res <= threshold and float(residuals.max(initial=0.0)) <= threshold
    return RelationReport(
        max_order_residual=order_res,
        residual_matrix=residuals,
        is_simple=bool(is_simple),
        pass_=bool(passed),
    )


def spectral_audit(
    u: np.ndarray, p: int, zeta: complex | None = None, tol: ToleranceConfig = DEFAULT
) -> dict:
    """Eigenvalue multiplicities of a p-th order unitary at each root of unity.

    The multiplicity of zeta**k is the rank of the corresponding spectral
    projection.  For a member of a Weyl pair every multiplicity is d/p and
    the trace vanishes.
    """
    from .canonical import spectral_projections

    u = np.asarray(u, dtype=np.complex128)
    d = u.shape[0]
    if zeta is None:
        zeta = default_zeta(p)
    if frobenius_norm(np.linalg.matrix_power(u, p) - np.eye(d)) > tol.order * d:
        raise OrderViolation("matrix is not p-th order within tolerance")
    projections = spectral_projections(u, p, zeta, tol)
    multiplicities = []
    for proj in projections:
        from .linalg import hermitian_eig

        evals, _ = hermitian_eig(proj, tol)
        multiplicities.append(int(np.sum(evals > tol.projection_rank_cut)))
    return {
        "divides": d % p == 0,
        "trace": complex(np.trace(u)),
        "spectrum_multiplicities": multiplicities,
    }
