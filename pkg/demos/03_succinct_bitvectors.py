"""
Rank over separator positions
=============================

The rank method needs ``rank1`` over a bit vector marking separators. A plain
vector costs N bits plus a directory; Elias-Fano costs about
d * (2 + lg(N/d)) bits, which wins when documents are long.
"""

# %%
import math

import numpy as np

from dak import PlainBitvector, SparseBitvector

n = 10**6
rng = np.random.default_rng(0)
for d in (10, 10**2, 10**4, 10**5):
    ones = np.sort(rng.choice(np.arange(1, n), size=d, replace=False))
    plain = PlainBitvector(n, ones)
    sparse = SparseBitvector(n, ones)
    bound = d * (2 + math.ceil(math.log2(n / d)))
    print(f"d={d:>6}  plain={plain.size_in_bits():>9} bits  sparse={sparse.size_in_bits():>8} bits  bound={bound:>8}")

# %%
# Both answer the same queries. rank1(i) counts ones in positions 1..i.
queries = rng.integers(0, n + 1, size=5)
print(queries)
print(plain.rank1_many(queries))
print(sparse.rank1_many(queries))
