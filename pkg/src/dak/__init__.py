"""Document array construction for string collections.

Typical use::

    from dak import build_concat, suffix_sort, WorkArray, da_inplace

    ct = build_concat([b"ab", b"a"])
    sa = suffix_sort(ct)
    da, restored = da_inplace(WorkArray.from_sa(sa), ct)
"""

from .bitvector import Backend, PlainBitvector, RankBitvector, SparseBitvector, rank1, separator_bitvector, size_in_bits
from .bwt import Phase, WorkArray, bwt_in_place, bwt_of, invert_bwt, lf_counting_in_place, lf_exact
from .docarray import DocumentArray, VerifyReport, da_inplace, da_via_isa, da_via_rank, oracle_da, verify_da
from .errors import *  # noqa: F401,F403
from .meter import METER, WorkspaceMeter
from .suffix import InversePermutation, SuffixArray, inverse, naive_suffix_sort, rank_key, suffix_sort
from .text import (
    SENT_DOLLAR,
    SENT_HASH,
    ConcatText,
    CountTable,
    build_concat,
    count_table,
    doc_of_position,
    from_raw,
    load_collection,
)

__version__ = "0.1.0"
