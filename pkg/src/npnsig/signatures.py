"""Ordered signature vectors and the mixed signature vector (MSV).

Every vector here is NPN-invariant once output polarity is fixed, so equal
MSVs are a necessary condition for NPN equivalence.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from . import kernels, layout
from .errors import InvalidArity, InvalidSelection
from .truthtable import TruthTable, cofactor_count, diff_vector, negate_output, satisfy_count

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SignatureSelection:
    """Which vector families enter the MSV."""

    ocv1: bool = True
    ocv2: bool = True
    oiv: bool = True
    osv: bool = True
    osdv: bool = True

    def __post_init__(self):
        if not any((self.ocv1, self.ocv2, self.oiv, self.osv, self.osdv)):
            raise InvalidSelection("at least one signature family must be selected")

    @property
    def flags(self) -> int:
        return sum(flag for name, flag in layout.FAMILIES if getattr(self, name))

    @classmethod
    def from_flags(cls, flags: int) -> "SignatureSelection":
        return cls(**{name: bool(flags & flag) for name, flag in layout.FAMILIES})

    @classmethod
    def parse(cls, text: str) -> "SignatureSelection":
        """From a comma-separated list such as ``"ocv1,oiv"`` or ``"all"``."""
        names = [t.strip().lower() for t in text.split(",") if t.strip()]
        known = dict(layout.FAMILIES)
        flags = 0
        for name in names:
            if name == "all":
                flags |= layout.ALL
            elif name in known:
                flags |= known[name]
            else:
                raise InvalidSelection(f"unknown signature family {name!r}; choose from {sorted(known)} or 'all'")
        return cls.from_flags(flags)

    @classmethod
    def subsets(cls) -> Iterable["SignatureSelection"]:
        """All 31 non-empty selections."""
        return (cls.from_flags(f) for f in range(1, layout.ALL + 1))

    def names(self) -> list[str]:
        return [name for name, _ in layout.FAMILIES if getattr(self, name)]

    def __str__(self) -> str:
        return "all" if self.flags == layout.ALL else ",".join(self.names())


ALL_SIGNATURES = SignatureSelection()


@dataclass(frozen=True)
class SignatureVectors:
    n: int
    satisfy_count: int
    ocv1: Vector
    ocv2: Vector
    oiv: Vector
    osv: Vector
    osv0: Vector
    osv1: Vector
    osdv: Vector
    osdv0: Vector
    osdv1: Vector
    total_influence: int
    sen: int
    sen0: int
    sen1: int


@dataclass(frozen=True)
class MixedSignatureVector:
    values: Vector
    selection: SignatureSelection

    def __len__(self) -> int:
        return len(self.values)

    def segments(self) -> dict[str, Vector]:
        """The MSV split into its named parts (``header``, ``ocv1``, ..., ``osdv0``)."""
        n = self.values[0]
        out = {name: self.values[sl] for name, sl in layout.segment_slices(n, self.selection.flags).items()}
        if "osv" in out:
            s = self.values[1]
            out["osv1"], out["osv0"] = out["osv"][:s], out["osv"][s:]
            del out["osv"]
        return out


def ocv(t: TruthTable, arity: int) -> Vector:
    """Sorted satisfy counts of every cofactor fixing ``arity`` variables."""
    if not 0 <= arity <= t.n:
        raise InvalidArity(f"cofactor arity {arity} outside [0, {t.n}]")
    counts = [
        cofactor_count(t, dict(zip(subset, values)))
        for subset in itertools.combinations(range(1, t.n + 1), arity)
        for values in itertools.product((0, 1), repeat=arity)
    ]
    return tuple(sorted(counts))


def influences(t: TruthTable) -> Vector:
    """Per-variable influence ``inf(f, i)`` for ``i = 1..n`` (integer convention, unsorted)."""
    return tuple(satisfy_count(diff_vector(t, i)) // 2 for i in range(1, t.n + 1))


def oiv(t: TruthTable) -> Vector:
    return tuple(sorted(influences(t)))


def total_influence(t: TruthTable) -> int:
    return sum(influences(t))


def local_sensitivities(t: TruthTable) -> np.ndarray:
    """``sen(f, X)`` for every word ``X``."""
    return kernels.local_sensitivities(t.words(), t.n)


def osv_split(t: TruthTable) -> tuple[Vector, Vector, Vector]:
    """``(OSV, OSV0, OSV1)``: sorted local sensitivities over all, 0- and 1-words."""
    sens = local_sensitivities(t)
    bits = t.to_array().astype(bool)
    return (
        tuple(np.sort(sens).tolist()),
        tuple(np.sort(sens[~bits]).tolist()),
        tuple(np.sort(sens[bits]).tolist()),
    )


def osdv_split(t: TruthTable) -> tuple[Vector, Vector, Vector]:
    """``(OSDV, OSDV0, OSDV1)`` flattened row-major; entry ``(i, j)`` counts pairs
    ``X < Y`` with local sensitivity ``i`` at both ends and Hamming distance ``j + 1``."""
    grids = kernels.osdv_grids(t.words(), t.n)
    return tuple(tuple(g.ravel().tolist()) for g in grids)


def max_sensitivity(t: TruthTable) -> tuple[int, int, int]:
    """``(sen, sen0, sen1)``; a maximum over no words is 0."""
    sens = local_sensitivities(t)
    bits = t.to_array().astype(bool)
    zero, one = sens[~bits], sens[bits]
    return (
        int(sens.max()),
        int(zero.max()) if zero.size else 0,
        int(one.max()) if one.size else 0,
    )


def compute_signatures(t: TruthTable) -> SignatureVectors:
    osv, osv0, osv1 = osv_split(t)
    osdv, osdv0, osdv1 = osdv_split(t)
    infl = influences(t)
    sen, sen0, sen1 = max_sensitivity(t)
    return SignatureVectors(
        n=t.n,
        satisfy_count=satisfy_count(t),
        ocv1=ocv(t, 1),
        ocv2=ocv(t, 2) if t.n >= 2 else (),
        oiv=tuple(sorted(infl)),
        osv=osv,
        osv0=osv0,
        osv1=osv1,
        osdv=osdv,
        osdv0=osdv0,
        osdv1=osdv1,
        total_influence=sum(infl),
        sen=sen,
        sen0=sen0,
        sen1=sen1,
    )


def _concat(v: SignatureVectors, sel: SignatureSelection) -> Vector:
    out = [v.n, v.satisfy_count]
    if sel.ocv1:
        out += v.ocv1
    if sel.ocv2:
        out += v.ocv2
    if sel.oiv:
        out += v.oiv
    if sel.osv:
        out += v.osv1 + v.osv0
    if sel.osdv:
        out += v.osdv1 + v.osdv0
    return tuple(out)


def assemble_msv(t: TruthTable, sel: SignatureSelection = ALL_SIGNATURES) -> MixedSignatureVector:
    """MSV built from :func:`compute_signatures`, one function at a time.

    Slower twin of :func:`build_msv`, kept as an independent route to the same key.
    """
    half = 1 << (t.n - 1)
    s = satisfy_count(t)
    if s < half:
        values = _concat(compute_signatures(t), sel)
    elif s > half:
        values = _concat(compute_signatures(negate_output(t)), sel)
    else:
        values = min(_concat(compute_signatures(t), sel), _concat(compute_signatures(negate_output(t)), sel))
    return MixedSignatureVector(values, sel)


def build_msv(t: TruthTable, sel: SignatureSelection = ALL_SIGNATURES) -> MixedSignatureVector:
    """Polarity-normalized MSV of ``t``.

    Tables with more ones than zeros are complemented first; for balanced
    tables the lexicographically smaller MSV of ``f`` and ``~f`` is kept.
    """
    if not isinstance(sel, SignatureSelection):
        raise InvalidSelection(f"expected a SignatureSelection, got {sel!r}")
    row = kernels.msv_rows(t.words()[None, :], t.n, sel.flags)[0]
    return MixedSignatureVector(tuple(row.tolist()), sel)


def msv_rows(tables: list[TruthTable] | np.ndarray, n: int, sel: SignatureSelection = ALL_SIGNATURES) -> np.ndarray:
    """Batch MSVs as an ``(N, L)`` int64 array; ``tables`` may be a word array already."""
    if not isinstance(tables, np.ndarray):
        tables = words_matrix(tables, n)
    return kernels.msv_rows(tables, n, sel.flags)


def words_matrix(tables: Iterable[TruthTable], n: int) -> np.ndarray:
    nwords = max(1, (1 << n) // 64)
    raw = b"".join(t.bits.to_bytes(nwords * 8, "little") for t in tables)
    return np.frombuffer(raw, dtype="<u8").reshape(-1, nwords)


def ocv_length(n: int, arity: int) -> int:
    return comb(n, arity) << arity
