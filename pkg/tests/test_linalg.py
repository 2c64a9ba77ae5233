import numpy as np
import pytest

from weylkit.errors import NotHermitian, RankDeficient
from weylkit.linalg import (
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

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


def random_hermitian(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def test_hermitian_eig_pauli_x():
    evals, evecs = hermitian_eig(PAULI_X)
    assert np.allclose(evals, [-1.0, 1.0], atol=1e-12)
    # eigenvectors are (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to phase
    for k, sign in enumerate((-1.0, 1.0)):
        v = evecs[:, k]
        assert abs(abs(v[0]) - 1 / np.sqrt(2)) < 1e-12
        assert np.linalg.norm(PAULI_X @ v - sign * v) < 1e-12


def test_hermitian_eig_diagonal():
    d = np.diag([3.0, -1.0, 2.0]).astype(np.complex128)
    evals, evecs = hermitian_eig(d)
    assert np.allclose(evals, [-1.0, 2.0, 3.0])
    assert np.allclose(abs(evecs), abs(np.eye(3)[:, [1, 2, 0]]))


@pytest.mark.parametrize("n", [2, 5, 15, 40])
def test_hermitian_eig_matches_lapack(n):
    a = random_hermitian(n, seed=n)
    evals, evecs = hermitian_eig(a)
    ref = np.linalg.eigvalsh(a)
    assert np.allclose(evals, ref, atol=1e-10 * n)
    assert frobenius_norm(a @ evecs - evecs @ np.diag(evals)) < 1e-10 * n
    assert frobenius_norm(evecs.conj().T @ evecs - np.eye(n)) < 1e-11 * n


def test_hermitian_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_qr_orthonormalize_span_and_orthonormality():
    rng = np.random.default_rng(0)
    cols = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
    q = qr_orthonormalize(cols)
    assert frobenius_norm(q.conj().T @ q - np.eye(3)) < 1e-12
    # same column span: compare orthogonal projectors
    proj_q = q @ q.conj().T
    proj_c = cols @ np.linalg.pinv(cols)
    assert frobenius_norm(proj_q - proj_c) < 1e-10


def test_qr_orthonormalize_rank_deficient():
    cols = np.ones((4, 2), dtype=np.complex128)
    with pytest.raises(RankDeficient):
        qr_orthonormalize(cols)


def test_qr_orthonormalize_deterministic():
    rng = np.random.default_rng(3)
    cols = rng.normal(size=(5, 4)) + 1j * rng.normal(size=(5, 4))
    assert np.array_equal(qr_orthonormalize(cols), qr_orthonormalize(cols.copy()))


def test_psd_project_oracle():
    a = random_hermitian(7, seed=11)
    out = psd_project(a)
    evals, evecs = np.linalg.eigh(a)
    ref = (evecs * np.clip(evals, 0.0, None)) @ evecs.conj().T
    assert frobenius_norm(out - ref) < 1e-10
    assert np.linalg.eigvalsh(out)[0] > -1e-12


def test_psd_project_fixes_psd():
    a = random_hermitian(5, seed=2)
    a = a @ a.conj().T
    assert frobenius_norm(psd_project(a) - a) < 1e-10


def test_operator_norm_matches_svd():
    rng = np.random.default_rng(4)
    a = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    assert abs(operator_norm(a) - np.linalg.norm(a, 2)) < 1e-10


def test_haar_unitary_is_unitary_and_seeded():
    u = haar_unitary(8, seed=42)
    assert frobenius_norm(u @ u.conj().T - np.eye(8)) < 1e-12
    assert np.array_equal(u, haar_unitary(8, seed=42))
    assert frobenius_norm(u - haar_unitary(8, seed=43)) > 0.1


def test_haar_unitary_moment():
    # E[|u_00|^2] = 1/n for Haar measure
    samples = [abs(haar_unitary(4, seed=s)[0, 0]) ** 2 for s in range(400)]
    assert abs(np.mean(samples) - 0.25) < 0.02


def test_elementwise_helpers():
    rng = np.random.default_rng(9)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    assert np.array_equal(adjoint(a), a.conj().T)
    assert np.allclose(matmul(a, b), a @ b)
    assert np.allclose(kron(a, b), np.kron(a, b))
    assert abs(frobenius_norm(a) - np.linalg.norm(a)) < 1e-14
