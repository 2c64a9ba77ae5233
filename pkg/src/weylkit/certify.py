"""Choi-matrix certification of complete positivity and ucp feasibility.

A linear map M_p -> M_n is encoded by its Choi matrix
C = sum_ij E_ij (x) Phi(E_ij); the map is completely positive exactly when
C is positive semidefinite and unital exactly when the diagonal blocks sum
to the identity.  Interpolation questions ("is there a ucp map sending
these generators to those targets?") become semidefinite feasibility
problems solved by Dykstra-corrected alternating projections between the
PSD cone and an affine constraint set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .canonical import canonicalize
from .errors import ConstraintDegeneracy, DimensionMismatch, MismatchedOrder, NoConvergence
from .linalg import frobenius_norm, hermitian_eig, psd_project
from .star_iso import rho_apply, rho_inverse
from .tolerances import DEFAULT, ToleranceConfig
from .weyl import WeylSystem

__all__ = [
    "ChoiMatrix",
    "FeasibilityReport",
    "UcpCertificate",
    "apply_choi",
    "choi_of_map",
    "dilation_rigidity",
    "identity_choi",
    "is_ucp",
    "matrix_range_member",
    "order_equivalence_certificate",
    "ucp_interpolation",
]


@dataclass
class ChoiMatrix:
    """Choi matrix of a linear map M_{in_dim} -> M_{out_dim}."""

    in_dim: int
    out_dim: int
    mat: np.ndarray

    def block(self, i: int, j: int) -> np.ndarray:
        n = self.out_dim
        return self.mat[i * n : (i + 1) * n, j * n : (j + 1) * n]


@dataclass
class UcpCertificate:
    """Explicit two-sided ucp certificate between two generator pairs."""

    forward: ChoiMatrix
    backward: ChoiMatrix
    mapping_residuals: dict
    psd_margins: dict

    def is_valid(self, residual_tol: float = 1e-8, psd_tol: float = 1e-8) -> bool:
        return all(r <= residual_tol for r in self.mapping_residuals.values()) and all(
            m >= -psd_tol for m in self.psd_margins.values()
        )


@dataclass
class FeasibilityReport:
    """Outcome of an alternating-projections feasibility run."""

    status: str  # feasible | infeasible_evidence | undetermined
    gap: float
    iterations: int
    witness: ChoiMatrix


def choi_of_map(apply, in_dim: int, out_dim: int) -> ChoiMatrix:
    """Choi matrix from a callable giving the map's value on any input."""
    p, n = in_dim, out_dim
    mat = np.zeros((p * n, p * n), dtype=np.complex128)
    for i in range(p):
        for j in range(p):
            unit = np.zeros((p, p), dtype=np.complex128)
            unit[i, j] = 1.0
            blk = np.asarray(apply(unit), dtype=np.complex128)
            if blk.shape != (n, n):
                raise DimensionMismatch(
                    f"map returned shape {blk.shape}, expected {(n, n)}"
                )
            mat[i * n : (i + 1) * n, j * n : (j + 1) * n] = blk
    return ChoiMatrix(in_dim=p, out_dim=n, mat=mat)


def apply_choi(choi: ChoiMatrix, x: np.ndarray) -> np.ndarray:
    """Evaluate the encoded map on x."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (choi.in_dim, choi.in_dim):
        raise DimensionMismatch(f"expected {choi.in_dim}x{choi.in_dim} input")
    out = np.zeros((choi.out_dim, choi.out_dim), dtype=np.complex128)
    for i in range(choi.in_dim):
        for j in range(choi.in_dim):
            out += x[i, j] * choi.block(i, j)
    return out


def identity_choi(p: int) -> ChoiMatrix:
    """Choi matrix of the identity map on M_p (rank one, trace p)."""
    return choi_of_map(lambda x: x, p, p)


def is_ucp(choi: ChoiMatrix, tol: ToleranceConfig = DEFAULT) -> dict:
    """Complete positivity and unitality of the encoded map."""
    evals, _ = hermitian_eig(choi.mat, tol)
    min_eig = float(evals[0])
    diag_sum = sum(choi.block(i, i) for i in range(choi.in_dim))
    unitality_residual = frobenius_norm(diag_sum - np.eye(choi.out_dim))
    return {
        "cp": min_eig >= -tol.psd_eps,
        "unital": unitality_residual <= 1e-9 * choi.out_dim,
        "min_eig": min_eig,
        "unitality_residual": float(unitality_residual),
    }


# ---------------------------------------------------------------------------
# semidefinite feasibility
# ---------------------------------------------------------------------------


def _hermitian_basis(dim: int) -> np.ndarray:
    """Columns are vec's of a Frobenius-orthonormal Hermitian basis."""
    cols = []
    s = 1.0 / np.sqrt(2.0)
    for i in range(dim):
        for j in range(dim):
            h = np.zeros((dim, dim), dtype=np.complex128)
            if i == j:
                h[i, i] = 1.0
            elif i < j:
                h[i, j] = s
                h[j, i] = s
            else:
                h[j, i] = 1j * s
                h[i, j] = -1j * s
            cols.append(h.reshape(-1))
    return np.column_stack(cols)


class _AffineSet:
    """Projection onto {Hermitian C : R vec(C) = t} via a pseudo-inverse."""

    def __init__(self, dim, rows, rhs, tol: ToleranceConfig):
        self.dim = dim
        self.basis = _hermitian_basis(dim)
        r = np.asarray(rows, dtype=np.complex128)
        t = np.asarray(rhs, dtype=np.complex128)
        rb = r @ self.basis
        self.m = np.vstack([rb.real, rb.imag])
        self.rhs = np.concatenate([t.real, t.imag])
        try:
            self.pinv = np.linalg.pinv(self.m, rcond=tol.pinv_cutoff)
        except np.linalg.LinAlgError as exc:  # pragma: no cover
            raise ConstraintDegeneracy(str(exc)) from exc

    def coords(self, c: np.ndarray) -> np.ndarray:
        return (self.basis.conj().T @ c.reshape(-1)).real

    def matrix(self, x: np.ndarray) -> np.ndarray:
        return (self.basis @ x).reshape(self.dim, self.dim)

    def project(self, c: np.ndarray) -> np.ndarray:
        x = self.coords(c)
        x = x - self.pinv @ (self.m @ x - self.rhs)
        return self.matrix(x)

    def residual(self, c: np.ndarray) -> float:
        x = self.coords(c)
        return float(np.linalg.norm(self.m @ x - self.rhs))


def _unitality_rows(p: int, n: int):
    """Rows pinning sum_i block(i, i) to the identity."""
    d = p * n
    rows, rhs = [], []
    for l in range(n):
        for m_ in range(n):
            r = np.zeros(d * d, dtype=np.complex128)
            for i in range(p):
                r[(i * n + l) * d + (i * n + m_)] = 1.0
            rows.append(r)
            rhs.append(1.0 if l == m_ else 0.0)
    return rows, rhs


def _map_rows(z: np.ndarray, target: np.ndarray, p: int, n: int, out_range=None):
    """Rows expressing (entries of) Phi(z) = target over the Choi matrix.

    ``out_range`` restricts which output entries are constrained (used for
    compression-only constraints); by default all n x n entries are pinned.
    """
    d = p * n
    if out_range is None:
        out_range = range(n)
    rows, rhs = [], []
    for l in out_range:
        for m_ in out_range:
            r = np.zeros(d * d, dtype=np.complex128)
            for i in range(p):
                for j in range(p):
                    r[(i * n + l) * d + (j * n + m_)] += z[i, j]
            rows.append(r)
            rhs.append(complex(target[l, m_]))
    return rows, rhs


def _start_choi(p: int, n: int, seed: int) -> np.ndarray:
    """Strictly interior starting iterate: depolarizing Choi plus a small
    seeded Hermitian perturbation."""
    d = p * n
    c = np.eye(d, dtype=np.complex128) / p
    gen = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    h = gen.normal(size=(d, d)) + 1j * gen.normal(size=(d, d))
    h = (h + h.conj().T) / 2.0
    return c + 0.01 * h / max(np.linalg.norm(h), 1e-300)


def _dykstra(
    affine: _AffineSet,
    start: np.ndarray,
    max_iters: int,
    tol_val: float,
    tol: ToleranceConfig,
):
    """Dykstra alternating projections between the PSD cone and an affine set."""
    x = start
    p_inc = np.zeros_like(x)
    q_inc = np.zeros_like(x)
    gaps = []
    gap = np.inf
    for it in range(1, max_iters + 1):
        y = psd_project(x + p_inc, tol)
        p_inc = x + p_inc - y
        z = affine.project(y + q_inc)
        q_inc = y + q_inc - z
        gap = frobenius_norm(y - z)
        x = z
        gaps.append(gap)
        if gap <= tol_val:
            evals, _ = hermitian_eig((x + x.conj().T) / 2.0, tol)
            if evals[0] >= -tol_val and affine.residual(x) <= tol_val:
                return "feasible", gap, it, x
        w = tol.stall_window
        if len(gaps) > w and gap > 10.0 * tol_val:
            past = gaps[-w - 1]
            if abs(gap - past) < tol.stall_rel_change * max(past, 1e-300):
                return "infeasible_evidence", gap, it, x
    return "undetermined", gap, max_iters, x


def ucp_interpolation(
    generators,
    targets,
    max_iters: int | None = None,
    tol: float | None = None,
    seed: int = 0,
    config: ToleranceConfig = DEFAULT,
) -> FeasibilityReport:
    """Decide whether a ucp map sends each generator to its target.

    Builds the affine set of Hermitian Choi matrices that are unital and
    reproduce Phi(z_k) = A_k (plus the adjoint equations), then runs
    Dykstra projections against the PSD cone.  ``feasible`` comes with a
    witness satisfying all constraints within the tolerance;
    ``infeasible_evidence`` reports a stalled positive gap.
    """
    generators = [np.asarray(z, dtype=np.complex128) for z in generators]
    targets = [np.asarray(a, dtype=np.complex128) for a in targets]
    if len(generators) != len(targets) or not generators:
        raise DimensionMismatch("need equal-length, non-empty generator/target lists")
    p = generators[0].shape[0]
    n = targets[0].shape[0]
    for z in generators:
        if z.shape != (p, p):
            raise DimensionMismatch("generators must share one dimension")
    for a in targets:
        if a.shape != (n, n):
            raise DimensionMismatch("targets must share one dimension")
    if max_iters is None:
        max_iters = config.max_iters
    if tol is None:
        tol = config.feasibility

    rows, rhs = _unitality_rows(p, n)
    for z, a in zip(generators, targets):
        for zz, aa in ((z, a), (z.conj().T, a.conj().T)):
            r2, t2 = _map_rows(zz, aa, p, n)
            rows.extend(r2)
            rhs.extend(t2)
    affine = _AffineSet(p * n, rows, rhs, config)
    status, gap, iters, witness = _dykstra(
        affine, _start_choi(p, n, seed), max_iters, tol, config
    )
    return FeasibilityReport(
        status=status,
        gap=float(gap),
        iterations=iters,
        witness=ChoiMatrix(in_dim=p, out_dim=n, mat=witness),
    )


def matrix_range_member(
    generators,
    candidate_tuple,
    n: int | None = None,
    max_iters: int | None = None,
    tol: float | None = None,
    seed: int = 0,
    config: ToleranceConfig = DEFAULT,
) -> FeasibilityReport:
    """Membership of an n x n tuple in the matrix range of the generators.

    Feasible exactly when some ucp map sends the generator tuple to the
    candidate tuple.
    """
    candidates = [np.atleast_2d(np.asarray(a, dtype=np.complex128)) for a in candidate_tuple]
    if n is not None and candidates[0].shape[0] != n:
        raise DimensionMismatch("candidate dimension disagrees with n")
    return ucp_interpolation(
        generators, candidates, max_iters=max_iters, tol=tol, seed=seed, config=config
    )


def dilation_rigidity(
    p: int,
    ell: int,
    seeds=(0, 1, 2, 3, 4),
    max_iters: int | None = None,
    tol: float | None = None,
    config: ToleranceConfig = DEFAULT,
) -> dict:
    """Search for ucp dilations of the clock/shift pair and measure their
    off-diagonal blocks.

    Constrains only the top-left p x p compression of the images of the
    clock and shift matrices; every feasible witness found must have
    (numerically) zero off-diagonal blocks, reflecting the extremality of
    the pair in its matrix range.
    """
    from .weyl import clock_matrix, shift_matrix

    u = clock_matrix(p)
    v = shift_matrix(p)
    if ell == 0:
        report = ucp_interpolation([u, v], [u, v], max_iters=max_iters, tol=tol, config=config)
        return {
            "offdiag_norms": [0.0] if report.status == "feasible" else [],
            "witness_found": report.status == "feasible",
            "reports": [report],
        }
    import cvxpy as cp

    n = p + ell
    d = p * n
    if tol is None:
        tol = config.feasibility

    def compress(z, mat):
        # Phi(z) as a block expression over the Choi matrix.
        return sum(
            z[i, j] * mat[i * n : (i + 1) * n, j * n : (j + 1) * n]
            for i in range(p)
            for j in range(p)
        )

    def constraints(mat):
        cons = [sum(mat[i * n : (i + 1) * n, i * n : (i + 1) * n] for i in range(p)) == np.eye(n)]
        for z in (u, v):
            for zz in (z, z.conj().T):
                cons.append(compress(zz, mat)[:p, :p] == zz)
        return cons

    def solve(prob):
        for solver, kwargs in (
            (cp.CLARABEL, {}),
            (cp.SCS, {"eps": 1e-11, "max_iters": 100000}),
        ):
            try:
                prob.solve(solver=solver, **kwargs)
            except cp.error.SolverError:
                continue
            if prob.status in ("optimal", "optimal_inaccurate"):
                return
        raise NoConvergence("semidefinite feasibility solve failed")

    # The constrained set contains only singular Choi matrices (the pinned
    # compression has a rank-one Choi), so generic solves stall near the cone
    # boundary.  Facial reduction restores strict feasibility: a central solve
    # locates the supporting face, then each seeded solve runs inside it.
    big = cp.Variable((d, d), hermitian=True)
    solve(cp.Problem(cp.Minimize(0), [big >> 0] + constraints(big)))
    central = np.asarray(big.value)
    central = (central + central.conj().T) / 2.0
    evals, evecs = np.linalg.eigh(central)
    face = evecs[:, evals > 1e-7 * max(evals[-1], 1e-300)]
    rank = face.shape[1]

    small = cp.Variable((rank, rank), hermitian=True)
    lifted = face @ small @ face.conj().T
    cons = [small >> 0] + constraints(lifted)

    offdiag_norms = []
    reports = []
    found = False
    for seed in seeds:
        gen = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
        g = gen.normal(size=(d, d)) + 1j * gen.normal(size=(d, d))
        g = (g + g.conj().T) / 2.0
        prob = cp.Problem(cp.Maximize(cp.real(cp.trace(g @ lifted))), cons)
        solve(prob)
        witness = face @ np.asarray(small.value) @ face.conj().T
        witness = (witness + witness.conj().T) / 2.0
        choi = ChoiMatrix(in_dim=p, out_dim=n, mat=witness)

        violation = max(
            frobenius_norm(sum(choi.block(i, i) for i in range(p)) - np.eye(n)),
            max(
                frobenius_norm(apply_choi(choi, z)[:p, :p] - z)
                for z in (u, v, u.conj().T, v.conj().T)
            ),
            max(0.0, -float(np.linalg.eigvalsh(witness)[0])),
        )
        status = "feasible" if violation <= tol else "undetermined"
        iters = int(getattr(prob.solver_stats, "num_iters", 0) or 0)
        reports.append(
            FeasibilityReport(status=status, gap=float(violation), iterations=iters, witness=choi)
        )
        if status != "feasible":
            continue
        found = True
        for z in (u, v):
            img = apply_choi(choi, z)
            offdiag_norms.append(frobenius_norm(img[:p, p:]))
            offdiag_norms.append(frobenius_norm(img[p:, :p]))
    return {"offdiag_norms": offdiag_norms, "witness_found": found, "reports": reports}


# ---------------------------------------------------------------------------
# order-equivalence certificates
# ---------------------------------------------------------------------------


def _conditional_map(cf_from, y_from, cf_to, y_to):
    """x -> rho_to(coefficients of x in the word frame of cf_from)."""

    def phi(x):
        lam, _ = rho_inverse(cf_from, y_from.conj().T @ x @ y_from)
        return y_to @ rho_apply(cf_to, lam) @ y_to.conj().T

    return phi


def order_equivalence_certificate(
    pair1: WeylSystem, pair2: WeylSystem, config: ToleranceConfig = DEFAULT
) -> UcpCertificate:
    """Explicit ucp maps in both directions between two Weyl pairs.

    Each pair is canonicalized; the forward map is the composition of the
    Frobenius-orthogonal conditional expectation onto the algebra of the
    first pair with the *-isomorphism onto the algebra of the second.  The
    certificate records the generator mapping residuals and the PSD
    margins of both Choi matrices.
    """
    if pair1.p != pair2.p:
        raise MismatchedOrder(f"p mismatch: {pair1.p} != {pair2.p}")
    if abs(pair1.zeta - pair2.zeta) > 1e-10:
        raise MismatchedOrder("root-of-unity mismatch")
    u1, v1 = pair1.unitaries
    u2, v2 = pair2.unitaries
    cf1 = canonicalize(u1, v1, pair1.p, pair1.zeta, config)
    cf2 = canonicalize(u2, v2, pair2.p, pair2.zeta, config)
    d1, d2 = pair1.d, pair2.d

    forward = _conditional_map(cf1, cf1.y, cf2, cf2.y)
    backward = _conditional_map(cf2, cf2.y, cf1, cf1.y)
    choi_f = choi_of_map(forward, d1, d2)
    choi_b = choi_of_map(backward, d2, d1)

    residuals = {
        "forward_u": frobenius_norm(forward(u1) - u2),
        "forward_v": frobenius_norm(forward(v1) - v2),
        "backward_u": frobenius_norm(backward(u2) - u1),
        "backward_v": frobenius_norm(backward(v2) - v1),
    }
    evf, _ = hermitian_eig(choi_f.mat, config)
    evb, _ = hermitian_eig(choi_b.mat, config)
    margins = {"forward": float(evf[0]), "backward": float(evb[0])}
    return UcpCertificate(
        forward=choi_f,
        backward=choi_b,
        mapping_residuals={k: float(v) for k, v in residuals.items()},
        psd_margins=margins,
    )
