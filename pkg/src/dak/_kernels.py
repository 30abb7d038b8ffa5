"""Compiled inner loops.

Kernels never allocate: every buffer is passed in by the caller, which obtains
it from the workspace meter.  All arrays are indexed 0-based; stored text
positions and LF values are 1-based.
"""

import numba
import numpy as np

jit = numba.njit(cache=True, nogil=True)


# -- BWT / LF ---------------------------------------------------------------

@jit
def bwt_in_place(a, text):
    """A[i] <- T[A[i] - 1 mod N]; returns the first bad index or -1."""
    n = a.shape[0]
    for i in range(n):
        p = a[i]
        if p < 1 or p > n:
            return i
        a[i] = text[p - 2] if p > 1 else text[n - 1]
    return -1


@jit
def lf_counting_in_place(a, counts):
    for i in range(a.shape[0]):
        c = a[i]
        counts[c] += 1
        a[i] = counts[c]


@jit
def lf_exact(sa, isa, out):
    n = sa.shape[0]
    for i in range(n):
        p = sa[i] - 1
        if p == 0:
            p = n
        out[i] = isa[p - 1]


@jit
def invert_bwt(bwt, lf, start, out):
    """Walk the LF cycle from ``start``; returns 0, or the step that closed early."""
    n = bwt.shape[0]
    pos = start
    for k in range(n - 2, -2, -1):
        out[k % n] = bwt[pos - 1]
        pos = lf[pos - 1]
        if pos < 1 or pos > n:
            return n - 1 - k
        if pos == start and k != -1:
            return n - 1 - k
    return 0


# -- document array -----------------------------------------------------------

@jit
def da_traverse(a, da, d):
    """Lines 7-18 of the in-place method.

    Cells already rewritten with their SA value are held negated until the
    loop ends, so a revisit (malformed input) is seen as a negative ``tmp``.
    Returns 0 on success, otherwise the value of ``i`` where the walk broke.
    """
    n = a.shape[0]
    pos = 1
    doc = d + 1
    for i in range(n, 0, -1):
        if pos < 1 or pos > n:
            return i
        tmp = a[pos - 1]
        if tmp < 0:
            return i
        a[pos - 1] = -i
        da[pos - 1] = doc
        if tmp <= d + 1:
            tmp = doc
            doc -= 1
        pos = tmp
    for k in range(n):
        a[k] = -a[k]
    return 0


@jit
def fingerprint(a):
    """Order-sensitive 64-bit digest of an integer array (splitmix64 per cell)."""
    h = np.uint64(0)
    for i in range(a.shape[0]):
        x = np.uint64(a[i]) ^ (np.uint64(i) * np.uint64(0x9E3779B97F4A7C15))
        x ^= x >> np.uint64(30)
        x *= np.uint64(0xBF58476D1CE4E5B9)
        x ^= x >> np.uint64(27)
        x *= np.uint64(0x94D049BB133111EB)
        x ^= x >> np.uint64(31)
        h += x
    return h


@jit
def isa_fill(sa, isa):
    for i in range(sa.shape[0]):
        isa[sa[i] - 1] = i + 1


@jit
def da_from_isa(isa, boundaries, da):
    d = boundaries.shape[0] - 1
    for j in range(1, d + 1):
        for p in range(boundaries[j - 1] + 1, boundaries[j] + 1):
            da[isa[p - 1] - 1] = j
    da[isa[isa.shape[0] - 1] - 1] = d + 1


# -- bit tricks ---------------------------------------------------------------

@jit
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@jit
def set_bits(words, positions, offset):
    """Set bit ``positions[k] - offset`` (0-based) for every k."""
    for k in range(positions.shape[0]):
        b = positions[k] - offset
        words[b >> 6] |= np.uint64(1) << np.uint64(b & 63)


# -- plain rank directory -----------------------------------------------------

@jit
def plain_build(words, supers, rels):
    """Absolute counts per 512-bit superblock, 9-bit relative counts per word.

    ``rels[s]`` packs the counts before words 1..7 of superblock ``s`` at bit
    offsets 0, 9, ..., 54.
    """
    total = 0
    nwords = words.shape[0]
    for s in range(supers.shape[0]):
        supers[s] = total
        packed = np.uint64(0)
        inner = 0
        for w in range(8):
            k = s * 8 + w
            if w > 0:
                packed |= np.uint64(inner) << np.uint64(9 * (w - 1))
            if k < nwords:
                inner += popcount64(words[k])
        if s < rels.shape[0]:
            rels[s] = packed
        total += inner
    return total


@jit
def plain_rank(words, supers, rels, i):
    """Set bits among the first ``i`` bits."""
    s = i >> 9
    w = (i >> 6) & 7
    r = np.int64(supers[s])
    if w > 0:
        r += np.int64((rels[s] >> np.uint64(9 * (w - 1))) & np.uint64(511))
    off = i & 63
    if off:
        mask = (np.uint64(1) << np.uint64(off)) - np.uint64(1)
        r += np.int64(popcount64(words[i >> 6] & mask))
    return r


@jit
def plain_rank_many(words, supers, rels, queries, out):
    for k in range(queries.shape[0]):
        out[k] = plain_rank(words, supers, rels, queries[k])


@jit
def da_from_plain(sa, words, supers, rels, da):
    for i in range(sa.shape[0]):
        da[i] = plain_rank(words, supers, rels, sa[i] - 1) + 1


# -- Elias-Fano ---------------------------------------------------------------

@jit
def get_bit(words, b):
    return (words[b >> 6] >> np.uint64(b & 63)) & np.uint64(1)


@jit
def get_low(low, width, k):
    if width == 0:
        return np.int64(0)
    b = k * width
    w = b >> 6
    off = b & 63
    mask = (np.uint64(1) << np.uint64(width)) - np.uint64(1)
    v = low[w] >> np.uint64(off)
    if off + width > 64:
        v |= low[w + 1] << np.uint64(64 - off)
    return np.int64(v & mask)


@jit
def ef_build(positions, width, low, high, samples, sample_rate):
    """Fill an Elias-Fano encoding of 0-based sorted ``positions``.

    ``samples[t]`` is the number of elements whose high part is below
    ``t * sample_rate``.
    """
    m = positions.shape[0]
    lowmask = (np.int64(1) << width) - 1
    for k in range(m):
        p = np.int64(positions[k])
        if width > 0:
            v = np.uint64(p & lowmask)
            b = k * width
            w = b >> 6
            off = b & 63
            low[w] |= v << np.uint64(off)
            if off + width > 64:
                low[w + 1] |= v >> np.uint64(64 - off)
        hb = (p >> width) + k
        high[hb >> 6] |= np.uint64(1) << np.uint64(hb & 63)
    k = 0
    for t in range(samples.shape[0]):
        bucket = t * sample_rate
        while k < m and (np.int64(positions[k]) >> width) < bucket:
            k += 1
        samples[t] = k


@jit
def ef_rank(low, high, samples, sample_rate, width, m, nbuckets, i):
    """Elements strictly below 0-based position ``i``."""
    hi = i >> width
    if hi >= nbuckets:
        return m
    lo = i & ((np.int64(1) << width) - 1)
    t = hi // sample_rate
    r = np.int64(samples[t])
    bucket = t * sample_rate
    b = bucket + r
    while bucket < hi:
        if get_bit(high, b):
            r += 1
        else:
            bucket += 1
        b += 1
    while r < m and get_bit(high, b):
        if get_low(low, width, r) >= lo:
            break
        r += 1
        b += 1
    return r


@jit
def ef_rank_many(low, high, samples, sample_rate, width, m, nbuckets, queries, out):
    for k in range(queries.shape[0]):
        out[k] = ef_rank(low, high, samples, sample_rate, width, m, nbuckets, queries[k])


@jit
def da_from_sparse(sa, low, high, samples, sample_rate, width, m, nbuckets, da):
    for i in range(sa.shape[0]):
        da[i] = ef_rank(low, high, samples, sample_rate, width, m, nbuckets, sa[i] - 1) + 1
