"""The explicit *-isomorphism carried by a canonical Weyl pair.

The algebra generated by a canonical pair in dimension p*n consists of
block matrices whose (i, j) block is a scalar multiple of a fixed
"standard word" in the cyclic blocks.  Mapping a p x p scalar matrix to
the corresponding block matrix is a unital *-isomorphism onto that
algebra; extracting the scalars inverts it.  Commutants and generated
algebras are computed as linear-algebra problems over the Frobenius
inner product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .canonical import CanonicalForm
from .errors import DimensionMismatch, IterationCap
from .linalg import frobenius_norm, hermitian_eig
from .tolerances import DEFAULT, ToleranceConfig

__all__ = [
    "SpanBasis",
    "algebra_span",
    "commutant",
    "is_irreducible",
    "rho_apply",
    "rho_inverse",
    "word_table",
]


@dataclass
class SpanBasis:
    """Frobenius-orthonormal basis of a subspace of d x d matrices."""

    ambient_dim: int
    basis: list
    dim: int


def word_table(cf: CanonicalForm):
    """The p x p table of standard words W_ij in the cyclic blocks.

    W_ii = 1, the subdiagonal and corner carry the blocks themselves,
    the superdiagonal their adjoints, and longer words are the ordered
    products in between.  Every entry is unitary.
    """
    p, n = cf.p, cf.n
    # 1-indexed access: v[k] = v_k for k = 1..p
    v = {1: cf.v1}
    for k in range(2, p + 1):
        v[k] = cf.blocks[k - 2]
    ident = np.eye(n, dtype=np.complex128)
    table = [[None] * p for _ in range(p)]
    for i in range(1, p + 1):
        for j in range(1, p + 1):
            if i == j:
                w = ident
            elif i == 1 and j == p:
                w = v[1]
            elif i == p and j == 1:
                w = v[1].conj().T
            elif i > j:
                # v_i v_{i-1} ... v_{j+1}
                w = v[i]
                for m in range(i - 1, j, -1):
                    w = w @ v[m]
            else:
                # v_{i+1}* v_{i+2}* ... v_j*
                w = v[i + 1].conj().T
                for m in range(i + 2, j + 1):
                    w = w @ v[m].conj().T
            table[i - 1][j - 1] = w
    return table


def rho_apply(cf: CanonicalForm, lam: np.ndarray) -> np.ndarray:
    """Apply the *-isomorphism: scalars lam_ij become blocks lam_ij * W_ij."""
    lam = np.asarray(lam, dtype=np.complex128)
    p, n = cf.p, cf.n
    if lam.shape != (p, p):
        raise DimensionMismatch(f"expected {p}x{p} input, got {lam.shape}")
    table = word_table(cf)
    out = np.zeros((p * n, p * n), dtype=np.complex128)
    for i in range(p):
        for j in range(p):
            out[i * n : (i + 1) * n, j * n : (j + 1) * n] = lam[i, j] * table[i][j]
    return out


def rho_inverse(cf: CanonicalForm, z: np.ndarray):
    """Coefficients of the Frobenius projection onto the standard-word frame.

    Returns ``(lam, residual)``: the p x p coefficient matrix and the norm
    of the part of z orthogonal to the generated algebra.  The residual is
    zero (to tolerance) exactly when z lies in the algebra.
    """
    z = np.asarray(z, dtype=np.complex128)
    p, n = cf.p, cf.n
    if z.shape != (p * n, p * n):
        raise DimensionMismatch(f"expected {p * n}x{p * n} input, got {z.shape}")
    table = word_table(cf)
    lam = np.zeros((p, p), dtype=np.complex128)
    for i in range(p):
        for j in range(p):
            block = z[i * n : (i + 1) * n, j * n : (j + 1) * n]
            lam[i, j] = np.trace(table[i][j].conj().T @ block) / n
    residual = frobenius_norm(z - rho_apply(cf, lam))
    return lam, residual


def _vec(m: np.ndarray) -> np.ndarray:
    return np.asarray(m, dtype=np.complex128).reshape(-1)


def commutant(mats, tol: ToleranceConfig = DEFAULT) -> SpanBasis:
    """Orthonormal basis of {x : x s = s x for every s in mats}.

    Solves the homogeneous system via the null space of the PSD Gram
    operator of the constraint map; eigenvalues below the null-space cut
    count as zero.
    """
    mats = [np.asarray(m, dtype=np.complex128) for m in mats]
    if not mats:
        raise DimensionMismatch("commutant requires a non-empty list")
    d = mats[0].shape[0]
    ident = np.eye(d)
    # vec(X S - S X) = (S^T (x) 1 - 1 (x) S) vec(X)
    gram = np.zeros((d * d, d * d), dtype=np.complex128)
    for s in mats:
        op = np.kron(s.T, ident) - np.kron(ident, s)
        gram += op.conj().T @ op
    scale = max(frobenius_norm(gram), 1.0)
    evals, vecs = hermitian_eig(gram, tol)
    keep = evals < tol.nullspace_cut * scale
    basis = [vecs[:, i].reshape(d, d, order="F") for i in range(d * d) if keep[i]]
    return SpanBasis(ambient_dim=d, basis=basis, dim=len(basis))


def algebra_span(mats, tol: ToleranceConfig = DEFAULT) -> SpanBasis:
    """Orthonormal basis of the unital associative algebra generated by mats.

    Iteratively closes the span of {1} and the generators under left
    multiplication by generators until the dimension stabilizes (capped at
    d**2 rounds; the cap can only be hit through numerical failure).
    """
    mats = [np.asarray(m, dtype=np.complex128) for m in mats]
    if not mats:
        raise DimensionMismatch("algebra_span requires a non-empty list")
    d = mats[0].shape[0]
    max_dim = d * d
    q = np.zeros((d * d, 0), dtype=np.complex128)  # orthonormal columns

    def try_add(m: np.ndarray) -> bool:
        nonlocal q
        vec = _vec(m)
        nrm0 = np.linalg.norm(vec)
        if nrm0 <= tol.span_rank_cut:
            return False
        # two orthogonalization passes for stability
        vec = vec - q @ (q.conj().T @ vec)
        vec = vec - q @ (q.conj().T @ vec)
        nrm = np.linalg.norm(vec)
        if nrm <= tol.span_rank_cut * nrm0:
            return False
        q = np.hstack([q, (vec / nrm)[:, np.newaxis]])
        return True

    fresh = []
    for m in [np.eye(d, dtype=np.complex128)] + mats:
        if try_add(m):
            fresh.append(m)

    for _ in range(max_dim):
        if q.shape[1] >= max_dim or not fresh:
            break
        new_fresh = []
        for g in mats:
            for m in fresh:
                prod = g @ m
                if try_add(prod):
                    new_fresh.append(prod)
        fresh = new_fresh
    else:
        raise IterationCap("algebra span closure did not stabilize")
    basis = [q[:, i].reshape(d, d) for i in range(q.shape[1])]
    return SpanBasis(ambient_dim=d, basis=basis, dim=len(basis))


def is_irreducible(mats, tol: ToleranceConfig = DEFAULT) -> bool:
    """True when only scalars commute with every matrix in the list."""
    return commutant(mats, tol).dim == 1
