# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled signature kernels.

Tables arrive as rows of little-endian 64-bit words. Cofactor counts use
periodic variable masks plus popcount; sensitivity distances bucket words by
(output, local sensitivity) and histogram ``popcount(X ^ Y)`` over each
bucket's pairs.
"""
from libc.stdint cimport uint64_t, int64_t, uint8_t, uint32_t
from libc.string cimport memset, memcpy
from libcpp.algorithm cimport sort
from libcpp.vector cimport vector

import numpy as np

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil

cdef enum:
    OCV1 = 1
    OCV2 = 2
    OIV = 4
    OSV = 8
    OSDV = 16

cdef uint64_t VAR_MASK[6]
VAR_MASK[:] = [
    0xAAAAAAAAAAAAAAAAULL,
    0xCCCCCCCCCCCCCCCCULL,
    0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL,
    0xFFFF0000FFFF0000ULL,
    0xFFFFFFFF00000000ULL,
]


cdef struct Work:
    int n
    int nwords
    int size
    uint8_t* bits
    uint8_t* sens
    uint32_t* order
    int64_t* start
    int64_t* infl
    int64_t* c1
    int64_t* c2


cdef class _Workspace:
    cdef vector[uint8_t] bits, sens
    cdef vector[uint32_t] order
    cdef vector[int64_t] start, infl, c1, c2
    cdef Work w

    def __cinit__(self, int n):
        cdef int size = 1 << n
        self.bits.resize(size)
        self.sens.resize(size)
        self.order.resize(size)
        self.start.resize(2 * (n + 1) + 1)
        self.infl.resize(n)
        self.c1.resize(n)
        self.c2.resize(n * n)
        self.w.n = n
        self.w.nwords = (1 << (n - 6)) if n >= 6 else 1
        self.w.size = size
        self.w.bits = self.bits.data()
        self.w.sens = self.sens.data()
        self.w.order = self.order.data()
        self.w.start = self.start.data()
        self.w.infl = self.infl.data()
        self.w.c1 = self.c1.data()
        self.w.c2 = self.c2.data()


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 6:
        return <uint64_t>0xFFFFFFFFFFFFFFFFULL
    return ((<uint64_t>1) << (1 << n)) - 1


cdef int64_t _satisfy(const uint64_t* words, int nwords) noexcept nogil:
    cdef int64_t s = 0
    cdef int k
    for k in range(nwords):
        s += popcount64(words[k])
    return s


cdef void _cofactors(const uint64_t* words, Work* w, bint pairs) noexcept nogil:
    """Positive-literal counts ``c1[i]`` and, if ``pairs``, ``c2[i*n+j]`` for ``i < j``."""
    cdef int n = w.n
    cdef int lo = n if n < 6 else 6
    cdef int k, i, j
    cdef int64_t pw
    cdef int64_t pm[6]
    cdef int64_t pmm[36]
    cdef uint64_t x
    memset(w.c1, 0, n * sizeof(int64_t))
    if pairs:
        memset(w.c2, 0, n * n * sizeof(int64_t))
    for k in range(w.nwords):
        x = words[k]
        pw = popcount64(x)
        for i in range(lo):
            pm[i] = popcount64(x & VAR_MASK[i])
        for i in range(n):
            if i < 6:
                w.c1[i] += pm[i]
            elif (k >> (i - 6)) & 1:
                w.c1[i] += pw
        if not pairs:
            continue
        for i in range(lo):
            for j in range(i + 1, lo):
                pmm[i * 6 + j] = popcount64(x & VAR_MASK[i] & VAR_MASK[j])
        for i in range(n):
            for j in range(i + 1, n):
                if j < 6:
                    w.c2[i * n + j] += pmm[i * 6 + j]
                elif i < 6:
                    if (k >> (j - 6)) & 1:
                        w.c2[i * n + j] += pm[i]
                elif ((k >> (i - 6)) & 1) and ((k >> (j - 6)) & 1):
                    w.c2[i * n + j] += pw


cdef void _sensitivities(const uint64_t* words, Work* w) noexcept nogil:
    """Local sensitivity of every word and (doubled) influence of every variable."""
    cdef int n = w.n
    cdef int size = w.size
    cdef int x, i, cnt
    cdef uint8_t bx, d
    for x in range(size):
        w.bits[x] = (words[x >> 6] >> (x & 63)) & 1
    memset(w.infl, 0, n * sizeof(int64_t))
    for x in range(size):
        bx = w.bits[x]
        cnt = 0
        for i in range(n):
            d = bx ^ w.bits[x ^ (1 << i)]
            cnt += d
            w.infl[i] += d
        w.sens[x] = cnt


cdef void _bucket(Work* w) noexcept nogil:
    """Counting sort of words by key ``value * (n+1) + sensitivity`` into ``order``.

    Afterwards bucket ``b`` occupies ``order[start[b]:start[b+1]]``.
    """
    cdef int n = w.n
    cdef int nb = 2 * (n + 1)
    cdef int x, key, b
    memset(w.start, 0, (nb + 1) * sizeof(int64_t))
    for x in range(w.size):
        w.start[w.bits[x] * (n + 1) + w.sens[x] + 1] += 1
    for b in range(1, nb + 1):
        w.start[b] += w.start[b - 1]
    for x in range(w.size):
        key = w.bits[x] * (n + 1) + w.sens[x]
        w.order[w.start[key]] = x
        w.start[key] += 1
    for b in range(nb, 0, -1):
        w.start[b] = w.start[b - 1]
    w.start[0] = 0


cdef void _pair_histogram(Work* w, int first, int last, int64_t* row) noexcept nogil:
    """Add ``popcount(X ^ Y)`` histogram over pairs in ``order[first:last]`` to ``row[0..n-1]``."""
    cdef int a, b
    cdef uint32_t xa
    for a in range(first, last):
        xa = w.order[a]
        for b in range(a + 1, last):
            row[popcount64(xa ^ w.order[b]) - 1] += 1


cdef void _osdv(Work* w, int value, int64_t* grid) noexcept nogil:
    """Grid over words with output ``value`` (``value = -1``: all words). Needs ``_bucket``."""
    cdef int n = w.n
    cdef int k, a, b, v
    cdef uint32_t xa
    memset(grid, 0, (n + 1) * n * sizeof(int64_t))
    for k in range(n + 1):
        if value >= 0:
            _pair_histogram(w, w.start[value * (n + 1) + k],
                            w.start[value * (n + 1) + k + 1], grid + k * n)
            continue
        for v in range(2):
            _pair_histogram(w, w.start[v * (n + 1) + k],
                            w.start[v * (n + 1) + k + 1], grid + k * n)
        for a in range(w.start[k], w.start[k + 1]):
            xa = w.order[a]
            for b in range(w.start[(n + 1) + k], w.start[(n + 1) + k + 1]):
                grid[k * n + popcount64(xa ^ w.order[b]) - 1] += 1


cdef int _row(const uint64_t* words, Work* w, int flags, int64_t* out) noexcept nogil:
    """Write the raw (not polarity-normalized) MSV row of ``words``; return its length."""
    cdef int n = w.n
    cdef int64_t s = _satisfy(words, w.nwords)
    cdef int pos = 2
    cdef int i, j, k, v, start
    cdef int64_t a, b, ab
    out[0] = n
    out[1] = s
    if flags & (OCV1 | OCV2):
        _cofactors(words, w, (flags & OCV2) != 0)
    if flags & OCV1:
        start = pos
        for i in range(n):
            out[pos] = w.c1[i]
            out[pos + 1] = s - w.c1[i]
            pos += 2
        sort(out + start, out + pos)
    if flags & OCV2:
        start = pos
        for i in range(n):
            a = w.c1[i]
            for j in range(i + 1, n):
                b = w.c1[j]
                ab = w.c2[i * n + j]
                out[pos] = ab
                out[pos + 1] = a - ab
                out[pos + 2] = b - ab
                out[pos + 3] = s - a - b + ab
                pos += 4
        sort(out + start, out + pos)
    if flags & (OIV | OSV | OSDV):
        _sensitivities(words, w)
    if flags & OIV:
        start = pos
        for i in range(n):
            out[pos] = w.infl[i] // 2
            pos += 1
        sort(out + start, out + pos)
    if flags & (OSV | OSDV):
        _bucket(w)
    if flags & OSV:
        for v in range(1, -1, -1):
            for k in range(n + 1):
                for i in range(w.start[v * (n + 1) + k + 1] - w.start[v * (n + 1) + k]):
                    out[pos] = k
                    pos += 1
    if flags & OSDV:
        _osdv(w, 1, out + pos)
        pos += (n + 1) * n
        _osdv(w, 0, out + pos)
        pos += (n + 1) * n
    return pos


cdef bint _less(const int64_t* a, const int64_t* b, int length) noexcept nogil:
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


def msv_rows(words, int n, int flags):
    """Polarity-normalized MSV rows for a ``(N, nwords)`` uint64 array of tables."""
    cdef const uint64_t[:, ::1] tw = np.ascontiguousarray(words, dtype=np.uint64)
    cdef _Workspace ws = _Workspace(n)
    cdef Work* w = &ws.w
    cdef int nrows = tw.shape[0]
    cdef int nwords = w.nwords
    if tw.shape[1] != nwords:
        raise ValueError(f"expected {nwords} words per table, got {tw.shape[1]}")
    cdef int length = _row_length(n, flags)
    result = np.empty((nrows, length), dtype=np.int64)
    cdef int64_t[:, ::1] out = result
    cdef vector[uint64_t] flipped = vector[uint64_t](nwords)
    cdef vector[int64_t] alt = vector[int64_t](length)
    cdef uint64_t full = _full(n)
    cdef int64_t half = (<int64_t>1) << (n - 1)
    cdef int r, k
    cdef int64_t s
    with nogil:
        for r in range(nrows):
            s = _satisfy(&tw[r, 0], nwords)
            if s < half:
                _row(&tw[r, 0], w, flags, &out[r, 0])
                continue
            for k in range(nwords):
                flipped[k] = tw[r, k] ^ full
            _row(flipped.data(), w, flags, &out[r, 0])
            if s == half:
                _row(&tw[r, 0], w, flags, alt.data())
                if _less(alt.data(), &out[r, 0], length):
                    memcpy(&out[r, 0], alt.data(), length * sizeof(int64_t))
    return result


cdef int _row_length(int n, int flags):
    cdef int length = 2
    if flags & OCV1:
        length += 2 * n
    if flags & OCV2:
        length += 2 * n * (n - 1)
    if flags & OIV:
        length += n
    if flags & OSV:
        length += 1 << n
    if flags & OSDV:
        length += 2 * (n + 1) * n
    return length


def local_sensitivities(words, int n):
    """``sen(f, X)`` for every word ``X`` of one table."""
    cdef const uint64_t[::1] tw = np.ascontiguousarray(words, dtype=np.uint64)
    cdef _Workspace ws = _Workspace(n)
    _sensitivities(&tw[0], &ws.w)
    return np.asarray(<uint8_t[:ws.w.size]> ws.w.sens).astype(np.int64)


def osdv_grids(words, int n):
    """``(3, n+1, n)`` array: sensitivity-distance grids over all, 0-, and 1-words."""
    cdef const uint64_t[::1] tw = np.ascontiguousarray(words, dtype=np.uint64)
    cdef _Workspace ws = _Workspace(n)
    result = np.zeros((3, n + 1, n), dtype=np.int64)
    cdef int64_t[:, :, ::1] out = result
    _sensitivities(&tw[0], &ws.w)
    _bucket(&ws.w)
    _osdv(&ws.w, -1, &out[0, 0, 0])
    _osdv(&ws.w, 0, &out[1, 0, 0])
    _osdv(&ws.w, 1, &out[2, 0, 0])
    return result
