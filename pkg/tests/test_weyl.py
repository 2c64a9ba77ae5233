import numpy as np
import pytest

from weylkit.errors import (
    DimensionOverflow,
    NotPrimitiveRoot,
    OrderViolation,
    UnsupportedOrder,
)
from weylkit.linalg import frobenius_norm, kron
from weylkit.weyl import (
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


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_clock_shift_relations(p):
    zeta = default_zeta(p)
    u = clock_matrix(p)
    v = shift_matrix(p)
    ident = np.eye(p)
    assert frobenius_norm(np.linalg.matrix_power(u, p) - ident) < 1e-12
    assert frobenius_norm(np.linalg.matrix_power(v, p) - ident) < 1e-12
    assert frobenius_norm(u @ v - zeta * v @ u) < 1e-12


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_traces_vanish(p):
    u = clock_matrix(p)
    v = shift_matrix(p)
    for m in (u, v, u @ v):
        assert abs(np.trace(m)) < 1e-12


def test_weyl_pair_passes_check_relations():
    report = check_relations(weyl_pair(5))
    assert report.pass_
    assert report.is_simple
    assert report.max_order_residual < 1e-12


def test_clock_rejects_non_primitive_root():
    with pytest.raises(NotPrimitiveRoot):
        clock_matrix(4, zeta=-1.0)  # -1 has order 2, not 4
    with pytest.raises(NotPrimitiveRoot):
        clock_matrix(3, zeta=0.5)


def test_simple_triple_relations():
    tri = simple_weyl_triple(5)
    report = check_relations(tri)
    assert report.pass_ and report.is_simple
    # middle element is the scalar-corrected product of the outer two
    u, w, v = tri.unitaries
    lam = tri.zeta ** 2
    assert frobenius_norm(w - lam * u @ v) < 1e-12


def test_simple_triple_rejects_even_order():
    with pytest.raises(UnsupportedOrder):
        simple_weyl_triple(4)
    with pytest.raises(UnsupportedOrder):
        simple_weyl_triple(2)


def test_weyl_brauer_shape_and_relations():
    ws = weyl_brauer(3, 2)
    assert ws.g == 5
    assert ws.d == 9
    report = check_relations(ws)
    assert report.pass_ and report.is_simple


def test_weyl_brauer_pairing_identity():
    # products z_{2j-1}^{p-1} z_{2j} recover scalar multiples of tensor
    # factors of the shift; their full product recovers the k-fold tensor
    # power of the shift itself.
    p, k = 3, 2
    ws = weyl_brauer(p, k)
    zeta = ws.zeta
    wc = shift_matrix(p)
    z = ws.unitaries
    lam = zeta ** ((p - 1) // 2)
    prod = np.eye(p**k, dtype=np.complex128)
    for j in range(k):
        pair = np.linalg.matrix_power(z[2 * j], p - 1) @ z[2 * j + 1]
        factor = [np.eye(p, dtype=np.complex128)] * k
        factor[j] = wc
        expected = lam * kron(factor[0], factor[1])
        assert frobenius_norm(pair - expected) < 1e-10
        prod = prod @ pair
    target = lam ** (-k) * prod
    assert frobenius_norm(target - kron(wc, wc)) < 1e-10


def test_weyl_brauer_last_element_is_tensor_shift():
    ws = weyl_brauer(3, 2)
    assert frobenius_norm(ws.unitaries[-1] - kron(shift_matrix(3), shift_matrix(3))) < 1e-12


def test_weyl_brauer_dimension_cap():
    with pytest.raises(DimensionOverflow):
        weyl_brauer(3, 9)


def test_counterexample_satisfies_relations_but_differs():
    tri = counterexample_triple(3)
    assert check_relations(tri).pass_
    canonical = simple_weyl_triple(3)
    diff = frobenius_norm(tri.unitaries[1] - canonical.unitaries[1])
    assert diff > 1.0


def test_ew_matrix_entries():
    p = 3
    zeta = default_zeta(p)
    y = ew_matrix(p)
    assert y[0, p - 1] == 1.0
    assert abs(y[1, 0] - zeta**2) < 1e-15
    assert abs(y[p - 1, p - 2] - zeta ** ((1 - p) // 2)) < 1e-15


def test_ew_matrix_cube_is_scalar_not_identity():
    # frozen expected outcome: the cycle product is zeta, so the cube is
    # zeta times the identity and the order-p check fails
    p = 3
    zeta = default_zeta(p)
    y = ew_matrix(p)
    assert frobenius_norm(np.linalg.matrix_power(y, p) - zeta * np.eye(p)) < 1e-12
    assert frobenius_norm(np.linalg.matrix_power(y, p) - np.eye(p)) > 1.0


def test_ew_triple_fails_relations():
    p = 3
    ws = WeylSystem(
        p=p,
        zeta=default_zeta(p),
        unitaries=[clock_matrix(p), ew_matrix(p), shift_matrix(p)],
        commutation=simple_commutation(3),
    )
    assert not check_relations(ws).pass_


def test_check_relations_flags_perturbation():
    ws = weyl_pair(3)
    ws.unitaries[0] = ws.unitaries[0] + 1e-4
    assert not check_relations(ws).pass_


@pytest.mark.parametrize("p", [2, 3, 5])
def test_spectral_audit_balanced(p):
    audit = spectral_audit(clock_matrix(p), p)
    assert audit["divides"]
    assert audit["spectrum_multiplicities"] == [1] * p
    assert abs(audit["trace"]) < 1e-12


def test_spectral_audit_tensor_multiplicities():
    u = kron(clock_matrix(3), np.eye(2))
    audit = spectral_audit(u, 3)
    assert audit["spectrum_multiplicities"] == [2, 2, 2]


def test_spectral_audit_rejects_wrong_order():
    with pytest.raises(OrderViolation):
        spectral_audit(ew_matrix(3), 3)


def test_system_properties():
    ws = weyl_pair(7)
    assert ws.g == 2
    assert ws.d == 7
    assert ws.commutation.shape == (2, 2)
