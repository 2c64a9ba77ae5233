"""Every Weyl pair is unitarily equivalent to a block canonical form.

A scrambled pair in M_{pn} is reduced to (clock tensor 1, block-cyclic v);
the same data gives an explicit *-isomorphism of M_p onto the generated
algebra, whose commutant has dimension n^2.

Run: python3 demos/02_canonical_form.py
"""

import numpy as np

from weylkit import (
    algebra_span,
    canonical_u,
    canonical_v,
    canonicalize,
    commutant,
    random_pair,
    rho_apply,
    rho_inverse,
)

p, n = 3, 2
ws = random_pair(p, n, seed=11, scramble=True)
u, v = ws.unitaries
print(f"scrambled pair in M_{p * n}")

cf = canonicalize(u, v, p)
y = cf.y
res_u = np.linalg.norm(y.conj().T @ u @ y - canonical_u(p, n, cf.zeta))
res_v = np.linalg.norm(y.conj().T @ v @ y - canonical_v(p, n, cf.blocks, cf.v1))
print("reconstruction residuals:", res_u, res_v)

# the corner block is forced: v1 = v2* v3* ... vp*
closure = np.eye(n, dtype=complex)
for b in cf.blocks:
    closure = closure @ b.conj().T
print("v1 closure residual:", np.linalg.norm(cf.v1 - closure))

# rho maps M_p *-isomorphically onto Alg(u, v)
rng = np.random.default_rng(0)
a = rng.normal(size=(p, p)) + 1j * rng.normal(size=(p, p))
b = rng.normal(size=(p, p)) + 1j * rng.normal(size=(p, p))
mult = np.linalg.norm(rho_apply(cf, a @ b) - rho_apply(cf, a) @ rho_apply(cf, b))
back, residual = rho_inverse(cf, rho_apply(cf, a))
print("\nrho multiplicativity:", mult)
print("rho round trip:", np.linalg.norm(back - a), " membership residual:", residual)

print("\nAlg(u, v) dimension:", algebra_span([u, v]).dim, f"(p^2 = {p * p})")
print("commutant dimension:", commutant([u, v]).dim, f"(n^2 = {n * n})")
