import numpy as np
import pytest

from weylkit.canonical import random_pair
from weylkit.certify import (
    apply_choi,
    choi_of_map,
    dilation_rigidity,
    identity_choi,
    is_ucp,
    matrix_range_member,
    order_equivalence_certificate,
    ucp_interpolation,
)
from weylkit.errors import MismatchedOrder
from weylkit.linalg import frobenius_norm
from weylkit.weyl import (
    clock_matrix,
    counterexample_triple,
    shift_matrix,
    simple_weyl_triple,
    weyl_pair,
)


def test_choi_round_trip():
    rng = np.random.default_rng(0)
    kraus = rng.normal(size=(4, 3)) + 1j * rng.normal(size=(4, 3))

    def phi(x):
        return kraus @ x @ kraus.conj().T

    choi = choi_of_map(phi, 3, 4)
    for seed in range(5):
        x = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        assert frobenius_norm(apply_choi(choi, x) - phi(x)) < 1e-10


def test_identity_choi_is_rank_one_ucp():
    choi = identity_choi(3)
    evals = np.linalg.eigvalsh(choi.mat)
    assert sum(evals > 1e-10) == 1
    report = is_ucp(choi)
    assert report["cp"] and report["unital"]


def test_is_ucp_depolarizing():
    p = 3
    choi = choi_of_map(lambda x: np.trace(x) / p * np.eye(p), p, p)
    report = is_ucp(choi)
    assert report["cp"] and report["unital"]
    assert report["min_eig"] > -1e-12


def test_is_ucp_flags_transpose_map():
    # the transpose is positive but not completely positive
    choi = choi_of_map(lambda x: x.T, 2, 2)
    report = is_ucp(choi)
    assert not report["cp"]
    assert report["min_eig"] < -0.5


def test_is_ucp_flags_non_unital():
    choi = choi_of_map(lambda x: 0.5 * x, 2, 2)
    report = is_ucp(choi)
    assert report["cp"] and not report["unital"]


def test_self_interpolation_feasible_with_identity_witness():
    u, v = clock_matrix(3), shift_matrix(3)
    report = ucp_interpolation([u, v], [u, v])
    assert report.status == "feasible"
    ident = identity_choi(3).mat
    assert frobenius_norm(report.witness.mat - ident) < 1e-5


def test_tracial_state_feasible():
    u, v = clock_matrix(3), shift_matrix(3)
    zero = np.zeros((1, 1), dtype=np.complex128)
    report = ucp_interpolation([u, v], [zero, zero])
    assert report.status == "feasible"


def test_counterexample_infeasible_with_frozen_gap():
    tri = simple_weyl_triple(3)
    cex = counterexample_triple(3)
    report = ucp_interpolation(tri.unitaries, cex.unitaries)
    assert report.status == "infeasible_evidence"
    assert report.gap > 1e-3
    # regression constant: the stalled gap is 2/sqrt(3)
    assert abs(report.gap - 2.0 / np.sqrt(3.0)) < 1e-2


def test_norm_violation_infeasible():
    u, v = clock_matrix(3), shift_matrix(3)
    big = np.array([[1.5]], dtype=np.complex128)
    one = np.array([[1.0]], dtype=np.complex128)
    report = ucp_interpolation([u, v], [big, one])
    assert report.status == "infeasible_evidence"
    assert report.gap > 1e-3


def test_constraint_monotonicity():
    # adding a generator/target pair never turns infeasible into feasible
    u, v = clock_matrix(3), shift_matrix(3)
    big = np.array([[1.5]], dtype=np.complex128)
    one = np.array([[1.0]], dtype=np.complex128)
    base = ucp_interpolation([u], [big])
    extended = ucp_interpolation([u, v], [big, one])
    assert base.status == "infeasible_evidence"
    assert extended.status != "feasible"


def test_feasible_witness_images_are_contractions():
    u, v = clock_matrix(3), shift_matrix(3)
    report = ucp_interpolation([u, v], [u, v])
    for z in (u, v):
        img = apply_choi(report.witness, z)
        assert np.linalg.norm(img, 2) <= 1 + 1e-7


def test_matrix_range_membership():
    u, v = clock_matrix(3), shift_matrix(3)
    assert matrix_range_member([u, v], [u, v]).status == "feasible"
    zero = np.zeros((1, 1), dtype=np.complex128)
    assert matrix_range_member([u, v], [zero, zero]).status == "feasible"
    out = matrix_range_member([u, v], [np.array([[1.5]]), np.array([[1.0]])])
    assert out.status == "infeasible_evidence"


def test_dilation_rigidity_pauli_pair():
    report = dilation_rigidity(2, 2, seeds=(0, 1))
    assert report["witness_found"]
    assert max(report["offdiag_norms"]) <= 1e-6


def test_dilation_rigidity_degenerate_ell():
    report = dilation_rigidity(3, 0)
    assert report["witness_found"]
    assert report["reports"][0].status == "feasible"


def test_order_equivalence_certificate_valid():
    cert = order_equivalence_certificate(weyl_pair(3), random_pair(3, 2, seed=4, scramble=True))
    assert cert.is_valid()
    assert max(cert.mapping_residuals.values()) <= 1e-8
    assert min(cert.psd_margins.values()) >= -1e-8


def test_order_equivalence_composition_fixes_generators():
    pair2 = random_pair(3, 2, seed=8, scramble=True)
    cert = order_equivalence_certificate(weyl_pair(3), pair2)
    u, v = clock_matrix(3), shift_matrix(3)
    for x in (np.eye(3, dtype=np.complex128), u, v, u.conj().T, v.conj().T):
        back = apply_choi(cert.backward, apply_choi(cert.forward, x))
        assert frobenius_norm(back - x) < 1e-7


def test_order_equivalence_self_is_identity():
    cert = order_equivalence_certificate(weyl_pair(3), weyl_pair(3))
    assert frobenius_norm(cert.forward.mat - identity_choi(3).mat) < 1e-10


def test_order_equivalence_rejects_mismatched_order():
    with pytest.raises(MismatchedOrder):
        order_equivalence_certificate(weyl_pair(3), weyl_pair(5))
