"""
Three ways to the same document array
=====================================

The in-place traversal, the inverse-suffix-array fill and the rank-based
lookup all produce identical arrays. Only their extra memory differs.
"""

# %%
import numpy as np

from dak import WorkArray, build_concat, da_inplace, da_via_isa, da_via_rank, separator_bitvector, suffix_sort, verify_da

rng = np.random.default_rng(1)
alphabet = np.frombuffer(b"acgt", dtype=np.uint8)
docs = [rng.choice(alphabet, size=rng.integers(50, 400)).tobytes() for _ in range(40)]
ct = build_concat(docs)
sa = suffix_sort(ct)
print(f"N={ct.N} d={ct.d} sigma={ct.sigma}")

# %%
results = {
    "inplace": da_inplace(WorkArray.from_sa(sa), ct)[0],
    "isa": da_via_isa(sa, ct),
    "rank-plain": da_via_rank(sa, separator_bitvector(ct, "plain")),
    "rank-sparse": da_via_rank(sa, separator_bitvector(ct, "sparse")),
}
for name, da in results.items():
    print(f"{name:<12} {verify_da(da, sa, ct).ok}")

# %%
# Each document contributes one entry per symbol plus its separator, and the
# terminator belongs to document d+1.
hist = results["inplace"].histogram()
assert all(hist[j] == len(docs[j - 1]) + 1 for j in range(1, ct.d + 1))
print("entries for d+1:", hist[ct.d + 1])
