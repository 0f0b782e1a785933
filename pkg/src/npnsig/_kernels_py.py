"""Pure numpy backend with the same surface as the compiled ``_kernels`` module.

Works on unpacked bit arrays, vectorized over a batch of tables. Sensitivity
distance grids come from the XOR autocorrelation of each (output,
sensitivity) bucket's indicator vector, computed with a fast Walsh-Hadamard
transform, instead of explicit pair enumeration.
"""
from functools import lru_cache
from itertools import combinations

import numpy as np

from .layout import OCV1, OCV2, OIV, OSDV, OSV, msv_length

# cap on elements of the (batch, bucket, word) indicator cube per chunk
_CUBE_BUDGET = 1 << 22


def _unpack(words: np.ndarray, n: int) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype="<u8")
    raw = words.view(np.uint8).reshape(words.shape[0], -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, : 1 << n]


@lru_cache(maxsize=None)
def _literal_matrices(n: int):
    x = np.arange(1 << n)
    lit = ((x[:, None] >> np.arange(n)) & 1).astype(np.int64)
    pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
    lit2 = lit[:, pairs[:, 0]] & lit[:, pairs[:, 1]]
    return lit, lit2, pairs


@lru_cache(maxsize=None)
def _distance_matrix(n: int) -> np.ndarray:
    """``[2**n, n]`` indicator of ``popcount(d) == j + 1``."""
    d = np.arange(1 << n)
    pc = np.zeros_like(d)
    for i in range(n):
        pc += (d >> i) & 1
    return (pc[:, None] == np.arange(1, n + 1)).astype(np.int64)


def _fwht(a: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the last axis."""
    size = a.shape[-1]
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(*lead, size // (2 * h), 2, h)
        a = np.stack((v[..., 0, :] + v[..., 1, :], v[..., 0, :] - v[..., 1, :]), axis=-2)
        h *= 2
    return a.reshape(*lead, size)


def _sens(bits: np.ndarray, n: int):
    x = np.arange(1 << n)
    sens = np.zeros(bits.shape, dtype=np.int64)
    infl = np.empty((bits.shape[0], n), dtype=np.int64)
    for i in range(n):
        d = bits ^ bits[:, x ^ (1 << i)]
        sens += d
        infl[:, i] = d.sum(axis=1) // 2
    return sens, infl


def _grids(indicators: np.ndarray, n: int) -> np.ndarray:
    """Pair-distance histograms for stacked 0/1 indicator vectors ``[..., 2**n]``."""
    walsh = _fwht(indicators.astype(np.int64))
    auto = _fwht(walsh * walsh) >> n  # ordered pairs (X, Y) with X ^ Y = d
    return (auto @ _distance_matrix(n)) // 2


def _osdv_by_output(bits: np.ndarray, sens: np.ndarray, n: int) -> np.ndarray:
    """``[N, 2, n+1, n]`` grids over 0-words (index 0) and 1-words (index 1)."""
    levels = np.arange(n + 1)
    out = np.empty((bits.shape[0], 2, n + 1, n), dtype=np.int64)
    step = max(1, _CUBE_BUDGET // (2 * (n + 1) << n))
    for lo in range(0, bits.shape[0], step):
        b = bits[lo : lo + step, None, None, :]
        s = sens[lo : lo + step, None, None, :]
        val = np.array([0, 1])[None, :, None, None]
        ind = (b == val) & (s == levels[None, None, :, None])
        out[lo : lo + step] = _grids(ind, n)
    return out


def _raw_rows(bits: np.ndarray, n: int, flags: int) -> np.ndarray:
    nrows = bits.shape[0]
    out = np.empty((nrows, msv_length(n, flags)), dtype=np.int64)
    s = bits.sum(axis=1, dtype=np.int64)
    out[:, 0] = n
    out[:, 1] = s
    pos = 2
    lit, lit2, pairs = _literal_matrices(n)
    wide = bits.astype(np.int64)
    if flags & (OCV1 | OCV2):
        c1 = wide @ lit
    if flags & OCV1:
        seg = np.concatenate([c1, s[:, None] - c1], axis=1)
        out[:, pos : pos + 2 * n] = np.sort(seg, axis=1)
        pos += 2 * n
    if flags & OCV2:
        c11 = wide @ lit2
        a, b = c1[:, pairs[:, 0]], c1[:, pairs[:, 1]]
        seg = np.concatenate([c11, a - c11, b - c11, s[:, None] - a - b + c11], axis=1)
        out[:, pos : pos + seg.shape[1]] = np.sort(seg, axis=1)
        pos += seg.shape[1]
    if flags & (OIV | OSV | OSDV):
        sens, infl = _sens(bits, n)
    if flags & OIV:
        out[:, pos : pos + n] = np.sort(infl, axis=1)
        pos += n
    if flags & OSV:
        # 1-words sort first, then 0-words shifted past every sensitivity value
        key = np.sort((1 - bits.astype(np.int64)) * (n + 1) + sens, axis=1)
        out[:, pos : pos + (1 << n)] = np.where(key > n, key - (n + 1), key)
        pos += 1 << n
    if flags & OSDV:
        g = _osdv_by_output(bits, sens, n)
        k = (n + 1) * n
        out[:, pos : pos + k] = g[:, 1].reshape(nrows, k)
        out[:, pos + k : pos + 2 * k] = g[:, 0].reshape(nrows, k)
        pos += 2 * k
    return out


def msv_rows(words, n: int, flags: int) -> np.ndarray:
    """Polarity-normalized MSV rows for a ``(N, nwords)`` uint64 array of tables."""
    bits = _unpack(words, n)
    half = 1 << (n - 1)
    s = bits.sum(axis=1)
    star = np.where((s > half)[:, None], 1 - bits, bits).astype(np.uint8)
    rows = _raw_rows(star, n, flags)
    balanced = np.flatnonzero(s == half)
    if balanced.size:
        a = rows[balanced]
        b = _raw_rows(1 - bits[balanced], n, flags)
        diff = a != b
        first = diff.argmax(axis=1)
        idx = np.arange(balanced.size)
        take = diff.any(axis=1) & (b[idx, first] < a[idx, first])
        rows[balanced[take]] = b[take]
    return rows


def local_sensitivities(words, n: int) -> np.ndarray:
    bits = _unpack(np.asarray(words).reshape(1, -1), n)
    return _sens(bits, n)[0][0]


def osdv_grids(words, n: int) -> np.ndarray:
    """``(3, n+1, n)`` array: sensitivity-distance grids over all, 0-, and 1-words."""
    bits = _unpack(np.asarray(words).reshape(1, -1), n)
    sens = _sens(bits, n)[0]
    by_out = _osdv_by_output(bits, sens, n)[0]
    levels = np.arange(n + 1)
    every = _grids((sens[0][None, :] == levels[:, None]), n)
    return np.stack([every, by_out[0], by_out[1]])
