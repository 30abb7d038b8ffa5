"""
Walking through the in-place traversal by hand
==============================================

Two documents, ``ab`` and ``a``, concatenated as ``ab$a$#``. We print every
intermediate state of the work array: suffix array, BWT, counting LF, and the
restored suffix array with its document array.
"""

# %%
# Build the text and its suffix array. Separators sort by document order and
# ``#`` sorts first.
from dak import WorkArray, build_concat, bwt_in_place, count_table, da_inplace, lf_counting_in_place, suffix_sort

ct = build_concat([b"ab", b"a"])
sa = suffix_sort(ct)
print("text :", ct.render())
print("SA   :", sa.tolist())


def show(cells):
    return "".join({0: "#", 1: "$"}.get(c, chr(c)) for c in cells)


# %%
# Overwrite SA with the BWT, then turn the BWT into LF by one counting pass.
# Cells that held a separator now point somewhere in [2, d+1]; the traversal
# recognises them by that range.
A = WorkArray.from_sa(sa)
bwt_in_place(A, ct)
print("BWT  :", show(A.tolist()))
lf_counting_in_place(A, count_table(ct))
print("LF   :", A.tolist())

# %%
# The traversal walks LF backwards from the ``#`` suffix, writing i into each
# visited cell and the current document into DA.
da, A = da_inplace(WorkArray.from_sa(sa), ct)
print("DA   :", da.tolist())
print("SA back in place:", A.tolist() == sa.tolist())
