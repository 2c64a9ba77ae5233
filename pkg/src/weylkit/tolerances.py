"""Centralized numerical tolerances.

Every operation that accepts a tolerance pulls its default from a single
ToleranceConfig instance so that suites and the CLI can override them in
one place.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ToleranceConfig:
    # hermitian_eig
    hermitian_check: float = 1e-10
    jacobi_target: float = 1e-13   # off-diagonal mass, relative to ||a||_F
    jacobi_fail: float = 1e-8      # NoConvergence threshold at sweep cap
    jacobi_max_sweeps: int = 100

    # qr_orthonormalize
    rank_sigma_min: float = 1e-10

    # relation checking; scales linearly with matrix dimension
    relation: float = 1e-9
    order: float = 1e-8

    # spectral projections / rank decisions
    projection_rank_cut: float = 0.5

    # commutant / algebra span
    nullspace_cut: float = 1e-8
    span_rank_cut: float = 1e-9

    # feasibility (Dykstra alternating projections)
    psd_eps: float = 1e-8
    feasibility: float = 1e-7
    stall_window: int = 200
    stall_rel_change: float = 1e-3
    max_iters: int = 20000
    pinv_cutoff: float = 1e-10

    # tensor constructions
    dimension_cap: int = 4096

    def with_overrides(self, **kwargs) -> "ToleranceConfig":
        return replace(self, **kwargs)


DEFAULT = ToleranceConfig()
