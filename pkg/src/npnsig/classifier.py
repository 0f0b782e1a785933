"""Signature-based NPN classification: group tables by exact MSV equality."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import layout
from .errors import EmptyInput, InputMismatch, UnsupportedArity
from .signatures import ALL_SIGNATURES, SignatureSelection, msv_rows, words_matrix
from .truthtable import TruthTable

# int64 cells per kernel call; bounds the transient MSV buffer
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class Classification:
    """Partition of distinct truth tables into numbered classes.

    ``tables`` holds the distinct inputs in first-appearance order and
    ``labels[k]`` is the class of ``tables[k]``. Class ids are dense and
    numbered by first appearance.
    """

    n: int
    tables: tuple[TruthTable, ...]
    labels: tuple[int, ...]
    selection: SignatureSelection | None = None
    functions: int = 0
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", dict(zip(self.tables, self.labels)))

    @classmethod
    def from_keys(cls, tables: Sequence[TruthTable], keys: Iterable[Hashable], n: int, **meta) -> "Classification":
        ids: dict = {}
        labels = tuple(ids.setdefault(k, len(ids)) for k in keys)
        return cls(n, tuple(tables), labels, **meta)

    @property
    def assignment(self) -> dict[TruthTable, int]:
        return dict(self._index)

    def class_of(self, t: TruthTable) -> int:
        return self._index[t]

    @property
    def unique(self) -> int:
        return len(self.tables)

    @property
    def class_count(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    @property
    def classes(self) -> list[tuple[TruthTable, ...]]:
        members: list[list[TruthTable]] = [[] for _ in range(self.class_count)]
        for t, c in zip(self.tables, self.labels):
            members[c].append(t)
        return [tuple(m) for m in members]


@dataclass(frozen=True)
class ComparisonReport:
    sig_class_count: int
    exact_class_count: int
    accuracy: float
    violations: tuple[tuple[TruthTable, TruthTable], ...]

    @property
    def sound(self) -> bool:
        return not self.violations


def dedupe(functions: Iterable[TruthTable]) -> tuple[list[TruthTable], int, int]:
    """Distinct tables in first-appearance order, plus the raw count and common arity."""
    functions = list(functions)
    if not functions:
        raise EmptyInput("no truth tables to classify")
    n = functions[0].n
    if any(t.n != n for t in functions):
        raise UnsupportedArity("all truth tables must have the same number of variables")
    return list(dict.fromkeys(functions)), len(functions), n


def compact_keys(rows: np.ndarray, n: int, flags: int) -> list[bytes]:
    """Injective byte encoding of MSV rows.

    The sorted sensitivity segment is replaced by its value histogram (split
    at ``|f*|``), which loses nothing because the segment is sorted and
    ``|f*|`` sits in the header. All entries fit in ``uint32`` for ``n <= 16``.
    """
    if flags & layout.OSV:
        sl = layout.segment_slices(n, flags)["osv"]
        seg = rows[:, sl]
        nrows, size = seg.shape
        tagged = seg + (n + 1) * (np.arange(size)[None, :] >= rows[:, 1:2])
        width = 2 * (n + 1)
        offsets = (np.arange(nrows) * width)[:, None]
        hist = np.bincount((tagged + offsets).ravel(), minlength=nrows * width).reshape(nrows, width)
        rows = np.concatenate([rows[:, : sl.start], hist, rows[:, sl.stop :]], axis=1)
    packed = np.ascontiguousarray(rows, dtype=np.uint32)
    return [r.tobytes() for r in packed]


def signature_keys(tables: Sequence[TruthTable], n: int, sel: SignatureSelection) -> list[bytes]:
    words = words_matrix(tables, n)
    step = max(1, _CHUNK_CELLS // layout.msv_length(n, sel.flags))
    keys: list[bytes] = []
    for lo in range(0, len(tables), step):
        rows = msv_rows(words[lo : lo + step], n, sel)
        keys.extend(compact_keys(rows, n, sel.flags))
    return keys


def classify(functions: Iterable[TruthTable], sel: SignatureSelection = ALL_SIGNATURES) -> Classification:
    """Deduplicate ``functions`` and group them by identical MSV."""
    tables, raw, n = dedupe(functions)
    keys = signature_keys(tables, n, sel)
    return Classification.from_keys(tables, keys, n, selection=sel, functions=raw)


def compare(sig: Classification, exact: Classification) -> ComparisonReport:
    """Check a signature partition against an exact one over the same tables."""
    if set(sig.tables) != set(exact.tables):
        raise InputMismatch("classifications cover different truth-table sets")
    seen: dict[int, dict[int, TruthTable]] = {}
    violations = []
    for t, e in zip(exact.tables, exact.labels):
        by_sig = seen.setdefault(e, {})
        s = sig.class_of(t)
        if s not in by_sig:
            if by_sig:
                violations.append((next(iter(by_sig.values())), t))
            by_sig[s] = t
    return ComparisonReport(
        sig_class_count=sig.class_count,
        exact_class_count=exact.class_count,
        accuracy=sig.class_count / exact.class_count,
        violations=tuple(violations),
    )
