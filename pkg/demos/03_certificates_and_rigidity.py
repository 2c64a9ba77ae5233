"""Ucp certificates, interpolation feasibility, and dilation rigidity.

Three experiments:
 1. explicit two-sided ucp certificates between the clock/shift pair and a
    random pair of the same order (complete order equivalence),
 2. a scalar-twisted triple that no ucp map can reach (the feasibility
    search stalls at a positive gap),
 3. every ucp dilation of the clock/shift pair is a direct sum: the
    off-diagonal blocks of feasible witnesses vanish.

Run: python3 demos/03_certificates_and_rigidity.py
"""

import numpy as np

from weylkit import (
    counterexample_triple,
    dilation_rigidity,
    order_equivalence_certificate,
    random_pair,
    simple_weyl_triple,
    ucp_interpolation,
    weyl_pair,
)

# 1. order equivalence: ucp maps both ways between pairs of different sizes
pair = weyl_pair(3)
other = random_pair(3, 2, seed=4, scramble=True)
cert = order_equivalence_certificate(pair, other)
print("certificate valid:", cert.is_valid())
print("max mapping residual:", max(cert.mapping_residuals.values()))
print("min PSD margin:", min(cert.psd_margins.values()))

# 2. the twisted triple is out of reach of any ucp map
tri = simple_weyl_triple(3)
cex = counterexample_triple(3)
report = ucp_interpolation(tri.unitaries, cex.unitaries)
print("\ntwisted-triple target:", report.status, f"(gap {report.gap:.4f} ~ 2/sqrt(3))")

control = ucp_interpolation(tri.unitaries, tri.unitaries)
print("self-map control:", control.status, f"(gap {control.gap:.1e})")

# 3. dilation rigidity: witnesses with only the top-left corner pinned
for ell in (1, 2):
    out = dilation_rigidity(3, ell, seeds=(0, 1, 2))
    print(
        f"\nell={ell}: witness found: {out['witness_found']},",
        "max off-diagonal block norm:",
        f"{max(out['offdiag_norms']):.2e}",
    )
