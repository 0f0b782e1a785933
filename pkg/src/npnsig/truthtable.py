"""Truth tables of Boolean functions and NP transforms on them.

A function of ``n`` variables is stored as a Python integer holding its
``2**n`` output bits. Bit ``X`` of the integer is ``f(X)`` where variable
``x_i`` (1-based) is bit ``i - 1`` of the index ``X`` (little-endian words).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

import numpy as np

from .errors import (
    InvalidAssignment,
    InvalidDigit,
    InvalidLength,
    InvalidVariable,
    InvalidWord,
    UnsupportedArity,
)

MAX_ARITY = 16
_HEX_DIGIT = re.compile(r"[0-9a-fA-F]*")


def _check_arity(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_ARITY:
        raise UnsupportedArity(f"arity must be in [1, {MAX_ARITY}], got {n!r}")


def hex_width(n: int) -> int:
    """Number of hex digits used to serialize an ``n``-variable table."""
    return max(1, (1 << n) // 4)


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(n: int, i: int) -> int:
    """Bits ``X`` of an ``n``-variable table where ``x_i = 1`` (``i`` is 1-based)."""
    half = 1 << (i - 1)
    block = ((1 << half) - 1) << half
    repunit = full_mask(n) // ((1 << (2 * half)) - 1)
    return block * repunit


@dataclass(frozen=True, order=True)
class TruthTable:
    """Immutable truth table: ``n`` variables, ``2**n`` bits packed into ``bits``."""

    n: int
    bits: int

    def __post_init__(self):
        _check_arity(self.n)
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise InvalidLength(f"bits do not fit a {self.n}-variable truth table")

    @property
    def size(self) -> int:
        return 1 << self.n

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> x) & 1 for x in range(self.size))

    def __str__(self) -> str:
        return format_hex(self)

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, 0x{format_hex(self)})"

    @classmethod
    def constant(cls, n: int, value: int) -> "TruthTable":
        return cls(n, full_mask(n) if value else 0)

    @classmethod
    def projection(cls, n: int, i: int) -> "TruthTable":
        _check_var(n, i)
        return cls(n, var_mask(n, i))

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        """Tabulate ``fn(x_1, ..., x_n)`` over all words."""
        bits = 0
        for x in range(1 << n):
            if fn(*((x >> k) & 1 for k in range(n))):
                bits |= 1 << x
        return cls(n, bits)

    @classmethod
    def from_array(cls, arr, n: int | None = None) -> "TruthTable":
        """Build from a 0/1 sequence of length ``2**n`` (element ``X`` is ``f(X)``)."""
        arr = np.asarray(arr, dtype=np.uint8)
        if n is None:
            n = int(arr.size).bit_length() - 1
        if arr.size != 1 << n:
            raise InvalidLength(f"expected {1 << n} bits, got {arr.size}")
        packed = np.packbits(arr, bitorder="little")
        return cls(n, int.from_bytes(packed.tobytes(), "little"))

    def to_array(self) -> np.ndarray:
        """Unpacked ``uint8`` array of the ``2**n`` output bits."""
        nbytes = max(1, self.size // 8)
        raw = np.frombuffer(self.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.size]

    def words(self) -> np.ndarray:
        """The table as little-endian 64-bit words (one word when ``n <= 6``)."""
        nwords = max(1, self.size // 64)
        return np.frombuffer(self.bits.to_bytes(nwords * 8, "little"), dtype="<u8").copy()

    # Convenience forwarding to the module-level operations.
    def evaluate(self, x: int) -> int:
        return evaluate(self, x)

    def satisfy_count(self) -> int:
        return satisfy_count(self)

    def is_balanced(self) -> bool:
        return is_balanced(self)

    def __invert__(self) -> "TruthTable":
        return negate_output(self)


def parse_truth_table(text: str, n: int) -> TruthTable:
    """Parse a hex string, most significant digit first (bit ``2**n - 1`` leftmost)."""
    _check_arity(n)
    s = text.strip()
    if s[:2] in ("0x", "0X"):
        s = s[2:]
    if not _HEX_DIGIT.fullmatch(s):
        bad = next(c for c in s if c not in "0123456789abcdefABCDEF")
        raise InvalidDigit(f"invalid hex digit {bad!r} in {text!r}")
    width = hex_width(n)
    if len(s) != width:
        raise InvalidLength(f"{n}-variable table needs {width} hex digits, got {len(s)} in {text!r}")
    value = int(s, 16)
    if value >> (1 << n):
        raise InvalidLength(f"{text!r} sets bits beyond the {1 << n} bits of a {n}-variable table")
    return TruthTable(n, value)


def format_hex(t: TruthTable) -> str:
    return format(t.bits, f"0{hex_width(t.n)}X")


def evaluate(t: TruthTable, x: int) -> int:
    if not 0 <= x < t.size:
        raise InvalidWord(f"word {x} out of range for n={t.n}")
    return (t.bits >> x) & 1


def satisfy_count(t: TruthTable) -> int:
    return t.bits.bit_count()


def is_balanced(t: TruthTable) -> bool:
    return satisfy_count(t) == 1 << (t.n - 1)


def negate_output(t: TruthTable) -> TruthTable:
    return TruthTable(t.n, t.bits ^ full_mask(t.n))


def _check_var(n: int, i: int) -> None:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= n:
        raise InvalidVariable(f"variable index {i!r} outside [1, {n}]")


def cofactor_count(t: TruthTable, assignment: Mapping[int, int]) -> int:
    """Satisfy count of the cofactor fixing ``x_i = v`` for every ``(i, v)`` in ``assignment``.

    ``assignment`` may also be a sequence of ``(i, v)`` pairs, in which case a
    repeated variable raises ``InvalidAssignment``.
    """
    items = list(assignment.items()) if isinstance(assignment, Mapping) else list(assignment)
    seen = set()
    sel = full_mask(t.n)
    for i, v in items:
        _check_var(t.n, i)
        if i in seen:
            raise InvalidAssignment(f"variable x{i} assigned twice")
        seen.add(i)
        m = var_mask(t.n, i)
        sel &= m if v else ~m
    return (t.bits & sel).bit_count()


def swap_variable(t: TruthTable, i: int) -> int:
    """Bits of ``f(X^i)``: the table with variable ``x_i`` complemented."""
    _check_var(t.n, i)
    s = 1 << (i - 1)
    m = var_mask(t.n, i)
    return ((t.bits & m) >> s) | ((t.bits & ~m & full_mask(t.n)) << s)


def diff_vector(t: TruthTable, i: int) -> TruthTable:
    """Words ``X`` where ``f`` is sensitive to ``x_i``, i.e. ``f(X) != f(X^i)``."""
    return TruthTable(t.n, t.bits ^ swap_variable(t, i))


@dataclass(frozen=True)
class NPTransform:
    """Input permutation, input negation and output negation.

    The transformed function is ``g(X) = out_neg XOR f(Z)`` where argument
    ``j`` of ``f`` receives ``x[perm[j]] XOR neg[perm[j]]``. Indices are
    0-based here; ``neg_mask`` bit ``k`` complements input ``x_{k+1}``.
    """

    perm: tuple[int, ...]
    neg_mask: int = 0
    out_neg: int = 0
    _n: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, "perm", perm)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise UnsupportedArity(f"perm {perm} is not a permutation of range({n})")
        if not 0 <= self.neg_mask < 1 << n:
            raise UnsupportedArity(f"neg_mask {self.neg_mask:#x} wider than {n} inputs")
        object.__setattr__(self, "out_neg", int(bool(self.out_neg)))
        object.__setattr__(self, "_n", n)

    @property
    def n(self) -> int:
        return self._n

    @classmethod
    def identity(cls, n: int) -> "NPTransform":
        return cls(tuple(range(n)))

    def then(self, other: "NPTransform") -> "NPTransform":
        """The transform equal to applying ``self`` first and ``other`` second."""
        if other.n != self.n:
            raise UnsupportedArity("cannot compose transforms of different arity")
        perm = tuple(other.perm[p] for p in self.perm)
        neg = other.neg_mask
        for a in range(self.n):
            if (self.neg_mask >> a) & 1:
                neg ^= 1 << other.perm[a]
        return NPTransform(perm, neg, self.out_neg ^ other.out_neg)

    def inverse(self) -> "NPTransform":
        inv = [0] * self.n
        for j, p in enumerate(self.perm):
            inv[p] = j
        neg = 0
        for a in range(self.n):
            if (self.neg_mask >> a) & 1:
                neg |= 1 << inv[a]
        return NPTransform(tuple(inv), neg, self.out_neg)

    def index_map(self) -> np.ndarray:
        """``Z(X)`` for every word ``X``: ``g(X) = out_neg ^ f(Z(X))``."""
        x = np.arange(1 << self.n, dtype=np.int64) ^ self.neg_mask
        z = np.zeros_like(x)
        for j, p in enumerate(self.perm):
            z |= ((x >> p) & 1) << j
        return z


def apply_np_transform(t: TruthTable, tr: NPTransform) -> TruthTable:
    if tr.n != t.n:
        raise UnsupportedArity(f"transform has arity {tr.n}, table has {t.n}")
    out = TruthTable.from_array(t.to_array()[tr.index_map()], t.n)
    return negate_output(out) if tr.out_neg else out


def all_truth_tables(n: int) -> Iterator[TruthTable]:
    """Every ``n``-variable function in increasing integer order (``n <= 4`` is sane)."""
    _check_arity(n)
    return (TruthTable(n, b) for b in range(1 << (1 << n)))


def variable_subsets(n: int, size: int):
    return itertools.combinations(range(1, n + 1), size)
