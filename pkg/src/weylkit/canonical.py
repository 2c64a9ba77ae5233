"""Block canonical form for Weyl pairs.

Any pair of p-th order unitaries (u, v) in dimension d = p*n with
u v = zeta v u can be conjugated so that u becomes block-diagonal with
blocks zeta**k * 1_n and v becomes block-cyclic with unitary blocks
v_2, ..., v_p and corner v_1 = v_2* v_3* ... v_p*.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DivisibilityViolation,
    NotWeylPair,
    OrderViolation,
    UnequalMultiplicities,
)
from .linalg import frobenius_norm, haar_unitary, hermitian_eig, qr_orthonormalize
from .tolerances import DEFAULT, ToleranceConfig
from .weyl import WeylSystem, check_relations, default_zeta

__all__ = [
    "CanonicalForm",
    "canonical_u",
    "canonical_v",
    "canonicalize",
    "random_pair",
    "spectral_projections",
    "unitary_equivalence",
]


@dataclass
class CanonicalForm:
    """Change-of-basis unitary y and the cyclic blocks of y* v y."""

    p: int
    n: int
    zeta: complex
    y: np.ndarray
    blocks: list  # v_2, ..., v_p
    v1: np.ndarray

    @property
    def d(self) -> int:
        return self.p * self.n


def canonical_u(p: int, n: int, zeta: complex) -> np.ndarray:
    """Block-diagonal diag(1_n, zeta 1_n, ..., zeta**(p-1) 1_n)."""
    return np.kron(np.diag(zeta ** np.arange(p)), np.eye(n)).astype(np.complex128)


def canonical_v(p: int, n: int, blocks, v1: np.ndarray | None = None) -> np.ndarray:
    """Block-cyclic matrix with blocks v_2..v_p on the subdiagonal and the
    closing corner v_1 = v_2* ... v_p* (computed when not supplied)."""
    blocks = [np.asarray(b, dtype=np.complex128) for b in blocks]
    if len(blocks) != p - 1:
        raise DimensionMismatch(f"expected {p - 1} blocks, got {len(blocks)}")
    if v1 is None:
        v1 = np.eye(n, dtype=np.complex128)
        for b in blocks:
            v1 = v1 @ b.conj().T
    v = np.zeros((p * n, p * n), dtype=np.complex128)
    v[0 : n, (p - 1) * n :] = v1
    for k in range(2, p + 1):
        v[(k - 1) * n : k * n, (k - 2) * n : (k - 1) * n] = blocks[k - 2]
    return v


def spectral_projections(
    u: np.ndarray, p: int, zeta: complex | None = None, tol: ToleranceConfig = DEFAULT
):
    """Spectral projections of a p-th order unitary at each power of zeta.

    Uses the finite Fourier identity P_k = (1/p) sum_j zeta**(-k j) u**j,
    exact because u**p = 1.
    """
    u = np.asarray(u, dtype=np.complex128)
    d = u.shape[0]
    if zeta is None:
        zeta = default_zeta(p)
    powers = [np.eye(d, dtype=np.complex128)]
    for _ in range(p - 1):
        powers.append(powers[-1] @ u)
    if frobenius_norm(powers[-1] @ u - np.eye(d)) > tol.order * d:
        raise OrderViolation("matrix is not p-th order within tolerance")
    projections = []
    for k in range(p):
        pk = sum(zeta ** (-k * j) * powers[j] for j in range(p)) / p
        pk = (pk + pk.conj().T) / 2.0
        projections.append(pk)
    return projections


def _eigenspace_basis(proj: np.ndarray, tol: ToleranceConfig) -> np.ndarray:
    """Orthonormal basis of the range of a (near-)idempotent Hermitian proj."""
    evals, vecs = hermitian_eig(proj, tol)
    keep = evals > tol.projection_rank_cut
    return qr_orthonormalize(vecs[:, keep], tol)


def canonicalize(
    u: np.ndarray,
    v: np.ndarray,
    p: int,
    zeta: complex | None = None,
    tol: ToleranceConfig = DEFAULT,
) -> CanonicalForm:
    """Reduce a Weyl pair to the block canonical form.

    Columns of y are orthonormal bases of the eigenspaces of u in the order
    of ascending powers of zeta; the blocks of y* v y are then read off the
    cyclic positions.  The QR phase convention makes the result
    deterministic.
    """
    u = np.asarray(u, dtype=np.complex128)
    v = np.asarray(v, dtype=np.complex128)
    if u.shape != v.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {u.shape} and {v.shape}")
    d = u.shape[0]
    if zeta is None:
        zeta = default_zeta(p)
    if d % p != 0:
        raise DivisibilityViolation(f"p={p} does not divide d={d}")
    n = d // p
    pair = WeylSystem(
        p=p, zeta=zeta, unitaries=[u, v], commutation=np.array([[0, 1], [-1, 0]])
    )
    report = check_relations(pair, tol)
    if not report.pass_:
        raise NotWeylPair(
            f"relation residual {report.residual_matrix.max():.3e}, "
            f"order residual {report.max_order_residual:.3e}"
        )
    projections = spectral_projections(u, p, zeta, tol)
    bases = []
    for pk in projections:
        basis = _eigenspace_basis(pk, tol)
        if basis.shape[1] != n:
            raise UnequalMultiplicities(
                f"eigenspace dimension {basis.shape[1]} != {n}"
            )
        bases.append(basis)
    y = np.hstack(bases)
    vt = y.conj().T @ v @ y
    blocks = [vt[(k - 1) * n : k * n, (k - 2) * n : (k - 1) * n] for k in range(2, p + 1)]
    v1 = vt[0:n, (p - 1) * n :]
    return CanonicalForm(p=p, n=n, zeta=complex(zeta), y=y, blocks=blocks, v1=v1)


def random_pair(
    p: int,
    n: int,
    seed: int,
    scramble: bool = False,
    zeta: complex | None = None,
) -> WeylSystem:
    """Seeded sample from the solution set of the commutation relation.

    u is the canonical block-diagonal form; v is built from Haar-random
    blocks with the closing corner.  With ``scramble`` both are conjugated
    by one Haar unitary of size p*n.  Deterministic per (p, n, seed).
    """
    if zeta is None:
        zeta = default_zeta(p)
    u = canonical_u(p, n, zeta)
    blocks = [haar_unitary(n, seed * 1000003 + k) for k in range(p - 1)]
    v = canonical_v(p, n, blocks)
    if scramble:
        w = haar_unitary(p * n, seed * 1000003 + p + 61)
        u = w.conj().T @ u @ w
        v = w.conj().T @ v @ w
    return WeylSystem(
        p=p, zeta=zeta, unitaries=[u, v], commutation=np.array([[0, 1], [-1, 0]])
    )


def unitary_equivalence(
    u: np.ndarray,
    v: np.ndarray,
    p: int,
    zeta: complex | None = None,
    tol: ToleranceConfig = DEFAULT,
) -> np.ndarray:
    """Unitary w conjugating a p x p Weyl pair onto the clock/shift pair.

    Canonicalization gives scalar cycle entries; a diagonal rescaling
    d_1 = 1, d_k = lambda_k d_{k-1} then absorbs them, the corner closing
    automatically because lambda_1 is the conjugate of the product of the
    others.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.shape[0] != p:
        raise DimensionMismatch(f"unitary_equivalence requires d = p, got d={u.shape[0]}")
    cf = canonicalize(u, v, p, zeta, tol)
    lams = [complex(b[0, 0]) for b in cf.blocks]  # lambda_2, ..., lambda_p
    diag = [1.0 + 0.0j]
    for lam in lams:
        diag.append(lam * diag[-1])
    return cf.y @ np.diag(diag)
