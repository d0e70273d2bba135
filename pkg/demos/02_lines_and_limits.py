"""Permuted formulas and limits along Vogel lines, with so(8) as the test bed.

so(8) lies on both the so line and the exceptional line, so a permuted
formula that hits 0/0 there can be resolved in two different ways.

Run: python demos/02_lines_and_limits.py
"""
# %%
from vogelqdim import LINES, LimitCountMismatch, universal_X, vogel_point

d4 = vogel_point("D4")
print("D4 =", d4)
print({name: line.contains(d4.coords) for name, line in LINES.items()})

# %%
# The unpermuted formula is regular at D4.
print(universal_X(1, 1, d4).cls)

# %%
# The "bag" ordering evaluates X(beta, alpha, gamma). At D4 it is 0/0.
raw = universal_X(1, 1, d4, perm="bag")
print("raw:", raw.cls, raw.detail)
for line in ("so", "exc"):
    ev = universal_X(1, 1, d4, perm="bag", line=line)
    print(f"limit along {line}: {ev.value}  (dim {ev.value.dimension()})")

# %%
# Direction along the line does not matter; leaving the line does.
print(universal_X(1, 1, d4, perm="bag", line="exc", direction=(1, -1, 0)).value.dimension())
# Some cells have more vanishing factors upstairs than downstairs.
for k, n in [(2, 0), (0, 2), (1, 2)]:
    try:
        ev = universal_X(k, n, d4, perm="gab", line="so")
        print(f"gab ({k},{n}) on so:", ev.cls.value, ev.value.dimension() if ev.value else ev.detail)
    except LimitCountMismatch as exc:
        print(f"gab ({k},{n}) on so: no finite limit ({exc})")
