"""Universal formula versus Weyl's formula on the exceptional series.

Run: python demos/01_universal_vs_weyl.py
"""
# %%
from vogelqdim import SinhSum, build_root_system, cartan_power_weights, universal_X, vogel_point, weyl_qdim

# Every exceptional algebra sits at (-2, n+4, 2n+4) for some n.
for alg in ("G2", "F4", "E6", "E7", "E8"):
    print(alg, vogel_point(alg))

# %%
# X_{k,n} is a ratio of sinh products in the Vogel parameters. At E8 it
# must reduce to the quantum dimension of k*adjoint + n*X2.
p = vogel_point("E8")
rs = build_root_system("E8")
for k, n in [(1, 0), (0, 1), (2, 1)]:
    ev = universal_X(k, n, p)
    weyl = SinhSum([weyl_qdim(rs, w) for w in cartan_power_weights("E8", k, n)])
    print(f"X_{k},{n}: {ev.value}")
    print("   equals Weyl side:", SinhSum([ev.value]) == weyl, " dim", ev.value.dimension())

# %%
# Numerically: as x -> 0 the value tends to the dimension.
from vogelqdim import eval_numeric

ev = universal_X(1, 0, p)
for x in (0.01, 0.1, 0.5):
    print(f"x={x}: {eval_numeric(ev.value, x):.6g}")
