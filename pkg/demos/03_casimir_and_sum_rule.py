"""Universal Casimir eigenvalues and the symmetric-square sum rule.

Run: python demos/03_casimir_and_sum_rule.py
"""
# %%
from vogelqdim import (
    adjoint_dim, build_root_system, cartan_power_weights, casimir, s2_sum_rule, universal_casimir, vogel_point,
)

for alg in ("G2", "E7", "A4", "B3"):
    p, rs = vogel_point(alg), build_root_system(alg)
    w = cartan_power_weights(alg, 1, 1)[0]
    print(f"{alg}: universal C_11 = {universal_casimir(1, 1, p)}, root system gives {casimir(rs, w)}")

# %%
# Where X_{k,n} vanishes identically (small ranks) the weight has no
# representation behind it and the two Casimirs need not agree.
p, rs = vogel_point("C4"), build_root_system("C4")
print("C4 k=2:", universal_casimir(2, 0, p), "vs", casimir(rs, cartan_power_weights("C4", 2, 0)[0]))

# %%
# S^2 g splits as 1 + Y2(alpha) + Y2(beta) + Y2(gamma).
for alg in ("E8", "F4", "A5"):
    total, want, singular = s2_sum_rule(vogel_point(alg))
    d = adjoint_dim(vogel_point(alg))
    print(f"{alg}: dim g = {d}, pieces sum to {total}, expected {want}, singular slots {singular}")
