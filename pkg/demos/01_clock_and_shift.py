"""Clock and shift matrices: the basic commutation relations.

Run: python3 demos/01_clock_and_shift.py
"""

import numpy as np

from weylkit import check_relations, clock_matrix, shift_matrix, weyl_brauer, weyl_pair

p = 3
u = clock_matrix(p)
v = shift_matrix(p)
zeta = np.exp(2j * np.pi / p)

print("clock matrix u =")
print(np.round(u, 3))
print("shift matrix v =")
print(np.round(v, 3))

# u and v have order p and commute up to the root of unity zeta
print("\n||u^p - 1|| =", np.linalg.norm(np.linalg.matrix_power(u, p) - np.eye(p)))
print("||uv - zeta vu|| =", np.linalg.norm(u @ v - zeta * v @ u))

# all three of u, v, uv are traceless
for name, m in (("u", u), ("v", v), ("uv", u @ v)):
    print(f"|tr({name})| = {abs(np.trace(m)):.2e}")

# the same audit, packaged
report = check_relations(weyl_pair(p))
print("\ncheck_relations pass:", report.pass_)
print("max order residual:", report.max_order_residual)

# 2k+1 unitaries in dimension p^k satisfying the simple relations pairwise
ws = weyl_brauer(3, 2)
print(f"\ntensor-iterated family: {ws.g} unitaries in M_{ws.d}")
print("relations pass:", check_relations(ws).pass_)
