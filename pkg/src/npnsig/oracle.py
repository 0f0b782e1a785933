"""Exact NPN canonicalization by applying every one of the ``n! * 2**(n+1)`` transforms.

Deliberately naive: no symmetry pruning, so it can serve as ground truth.
The representative of a function is the smallest table integer in its orbit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .classifier import Classification, dedupe
from .errors import OracleArityLimit
from .truthtable import NPTransform, TruthTable, full_mask

MAX_ORACLE_ARITY = 6

# rows of the (functions, words) gather per step
_BATCH = 1 << 14


def _check(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_ARITY:
        raise OracleArityLimit(f"exact oracle supports 1 <= n <= {MAX_ORACLE_ARITY}, got n={n}")


def enumerate_transforms(n: int) -> Iterator[NPTransform]:
    """Every ``(perm, neg_mask, out_neg)`` once, permutation-major."""
    _check(n)
    for perm in itertools.permutations(range(n)):
        for neg in range(1 << n):
            for out in (0, 1):
                yield NPTransform(perm, neg, out)


@lru_cache(maxsize=None)
def _index_maps(n: int) -> np.ndarray:
    """``[n! * 2**n, 2**n]`` word maps of the input transforms, in enumeration order."""
    maps = [
        NPTransform(perm, neg).index_map()
        for perm in itertools.permutations(range(n))
        for neg in range(1 << n)
    ]
    return np.stack(maps)


def _weights(n: int) -> np.ndarray:
    return np.left_shift(np.uint64(1), np.arange(1 << n, dtype=np.uint64))


def _transform_at(n: int, k: int) -> NPTransform:
    """Transform number ``k`` of :func:`enumerate_transforms`."""
    k, out = divmod(k, 2)
    p, neg = divmod(k, 1 << n)
    perm = next(itertools.islice(itertools.permutations(range(n)), p, None))
    return NPTransform(perm, neg, out)


@dataclass(frozen=True)
class CanonicalForm:
    representative: TruthTable
    transform: NPTransform


def npn_canonical(t: TruthTable) -> CanonicalForm:
    _check(t.n)
    images = t.to_array()[_index_maps(t.n)].astype(np.uint64) @ _weights(t.n)
    full = np.uint64(full_mask(t.n))
    orbit = np.stack([images, images ^ full], axis=1).ravel()
    k = int(np.argmin(orbit))
    return CanonicalForm(TruthTable(t.n, int(orbit[k])), _transform_at(t.n, k))


def canonical_values(tables: Iterable[TruthTable], n: int) -> np.ndarray:
    """Orbit-minimum integer of each table, vectorized over the tables."""
    _check(n)
    tables = list(tables)
    maps = _index_maps(n)
    weights = _weights(n)
    full = np.uint64(full_mask(n))
    out = np.empty(len(tables), dtype=np.uint64)
    for lo in range(0, len(tables), _BATCH):
        bits = np.stack([t.to_array() for t in tables[lo : lo + _BATCH]])
        best = np.full(bits.shape[0], np.iinfo(np.uint64).max, dtype=np.uint64)
        for m in maps:
            img = bits[:, m].astype(np.uint64) @ weights
            np.minimum(best, np.minimum(img, img ^ full), out=best)
        out[lo : lo + _BATCH] = best
    return out


def exact_classify(functions: Iterable[TruthTable]) -> Classification:
    tables, raw, n = dedupe(functions)
    _check(n)
    reps = canonical_values(tables, n)
    return Classification.from_keys(tables, reps.tolist(), n, selection=None, functions=raw)
