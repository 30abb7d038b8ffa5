"""
Measuring workspace and time
============================

Every internal buffer goes through a workspace meter. Inputs (text, suffix
array, count table) and the output array are excluded, so the in-place method
reports just its consumed count-table copy regardless of N.
"""

# %%
import numpy as np

from dak import build_concat, suffix_sort
from dak.bench import bench, human_table, markdown_table, warmup

warmup()
rng = np.random.default_rng(5)
reports = []
for n in (10**4, 10**5, 10**6):
    body = rng.choice(np.arange(2, 6, dtype=np.uint8), size=n)
    docs = [part.tobytes() for part in np.array_split(body, 100)]
    ct = build_concat(docs)
    sa = suffix_sort(ct)
    for method in ("inplace", "isa", "rank-plain", "rank-sparse"):
        reports.append(bench(f"random-{n}", ct, sa, method, reps=3)[1])

# %%
print(human_table(reports))
print()
print(markdown_table(reports))
