"""Sweep the shipped tables and look at what does not match.

Run: python demos/04_table_sweep.py
"""
# %%
from vogelqdim import Status, SweepConfig, verify_sweep

rep = verify_sweep(SweepConfig(tables=(4, 5, 8), max_k=3, max_n=3))
print(rep.counts)

# %%
for r in rep.records:
    if r.status is not Status.MATCH:
        print(r.entry.record_id, r.status.value, r.expected, r.computed.get("dimension"))

# %%
# Pattern tables are checked only at ranks where the pattern is stable.
rep = verify_sweep(SweepConfig(tables=(6,), max_rank=7))
print(rep.counts)
