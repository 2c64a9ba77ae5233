"""Dense complex linear algebra used throughout the package.

Matrices are plain ``numpy.ndarray`` with dtype complex128.  The Hermitian
eigensolver is a cyclic complex Jacobi iteration; everything downstream
(PSD projection, operator norms, spectral ranks) is built on top of it.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    RankDeficient,
)
from .tolerances import DEFAULT, ToleranceConfig

__all__ = [
    "adjoint",
    "frobenius_norm",
    "haar_unitary",
    "hermitian_eig",
    "kron",
    "matmul",
    "operator_norm",
    "psd_project",
    "qr_orthonormalize",
]


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; output dimensions multiply."""
    return np.kron(np.asarray(a), np.asarray(b))


def _check_finite(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def _jacobi_sweeps(w, v, target, tiny, max_sweeps):
    """Cyclic Jacobi sweeps, in place; returns the final off-diagonal mass."""
    n = w.shape[0]
    for _ in range(max_sweeps):
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += 2.0 * abs(w[p, q]) ** 2
        off = np.sqrt(off2)
        if off <= target:
            return off
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = w[p, q]
                ab = abs(beta)
                if ab <= tiny:
                    continue
                alpha = w[p, p].real
                gamma = w[q, q].real
                phase = beta / ab
                tau = (gamma - alpha) / (2.0 * ab)
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * phase.conjugate()
                # w <- G^H w G with G = [[c, sp], [-spc, c]] at (p, q)
                for i in range(n):
                    wip = w[i, p]
                    wiq = w[i, q]
                    w[i, p] = c * wip - spc * wiq
                    w[i, q] = sp * wip + c * wiq
                for j in range(n):
                    wpj = w[p, j]
                    wqj = w[q, j]
                    w[p, j] = c * wpj - sp * wqj
                    w[q, j] = spc * wpj + c * wqj
                # keep exact symmetry at the pivot
                w[p, q] = 0.0
                w[q, p] = 0.0
                w[p, p] = complex(w[p, p].real, 0.0)
                w[q, q] = complex(w[q, q].real, 0.0)
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - spc * viq
                    v[i, q] = sp * vip + c * viq
    off2 = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off2 += 2.0 * abs(w[p, q]) ** 2
    return np.sqrt(off2)


try:  # compiled sweep kernel; the pure-python fallback is semantically identical
    import numba

    _jacobi_sweeps = numba.njit(cache=True)(_jacobi_sweeps)
except ImportError:  # pragma: no cover
    pass


def hermitian_eig(a: np.ndarray, tol: ToleranceConfig = DEFAULT):
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as the columns of a unitary matrix, so that
    ``a = V @ diag(w) @ V.conj().T``.

    Raises NotHermitian if the input is not Hermitian within tolerance, and
    NoConvergence if the sweep cap is reached with significant off-diagonal
    mass remaining.
    """
    a = _check_finite(a)
    n, m = a.shape
    if n != m:
        raise DimensionMismatch("hermitian_eig requires a square matrix")
    norm_a = frobenius_norm(a)
    if frobenius_norm(a - a.conj().T) > tol.hermitian_check * (1.0 + norm_a):
        raise NotHermitian("matrix is not Hermitian within tolerance")

    w = ((a + a.conj().T) / 2.0).copy()
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([w[0, 0].real]), v

    target = tol.jacobi_target * max(norm_a, 1e-300)
    # skipping rotations below this pivot size still meets the target
    tiny = target / n

    off = _jacobi_sweeps(w, v, target, tiny, tol.jacobi_max_sweeps)
    if off > target and off > tol.jacobi_fail * max(norm_a, 1e-300):
        raise NoConvergence(
            f"Jacobi sweeps exhausted with off-diagonal mass {off:.3e}"
        )

    evals = np.real(np.diag(w))
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]


def qr_orthonormalize(cols: np.ndarray, tol: ToleranceConfig = DEFAULT) -> np.ndarray:
    """Orthonormalize full-column-rank input, preserving the column span.

    The QR phase gauge is fixed by making the diagonal of R positive real,
    which makes the output deterministic.  Raises RankDeficient when the
    smallest singular value (via Gram-matrix eigenvalues) is too small.
    """
    a = _check_finite(cols)
    gram = a.conj().T @ a
    evals, _ = hermitian_eig(gram, tol)
    smin = np.sqrt(max(evals[0], 0.0))
    if smin <= tol.rank_sigma_min:
        raise RankDeficient(f"smallest singular value {smin:.3e} below cutoff")
    q, r = np.linalg.qr(a)
    d = np.diag(r)
    phases = np.where(np.abs(d) > 0, d / np.abs(np.where(np.abs(d) > 0, d, 1.0)), 1.0)
    return q * phases[np.newaxis, :]


def psd_project(a: np.ndarray, tol: ToleranceConfig = DEFAULT) -> np.ndarray:
    """Nearest positive semidefinite matrix in Frobenius norm.

    Clips negative eigenvalues of the Hermitian input to zero.
    """
    evals, v = hermitian_eig(a, tol)
    clipped = np.maximum(evals, 0.0)
    out = (v * clipped[np.newaxis, :]) @ v.conj().T
    return (out + out.conj().T) / 2.0


def operator_norm(a: np.ndarray, tol: ToleranceConfig = DEFAULT) -> float:
    """Largest singular value, computed from the Gram matrix spectrum."""
    a = _check_finite(a)
    evals, _ = hermitian_eig(a.conj().T @ a, tol)
    return float(np.sqrt(max(evals[-1], 0.0)))


def haar_unitary(n: int, seed: int) -> np.ndarray:
    """Seeded Haar-random n x n unitary.

    Complex standard Gaussians are produced by Box-Muller from a
    counter-based (Philox) generator, then QR with the Mezzadri phase fix
    makes the distribution Haar.  Bit-for-bit reproducible per (n, seed).
    """
    if n < 1:
        raise DimensionMismatch("n must be >= 1")
    gen = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    u1 = 1.0 - gen.random((n, n))
    u2 = gen.random((n, n))
    g = np.sqrt(-np.log(u1)) * np.exp(2j * np.pi * u2)
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    q = q * (d / np.abs(d))[np.newaxis, :]
    return q
