"""Corpus files: one hex truth table per line.

An optional ``n=<k>`` header (first non-comment line) fixes the arity;
``#`` starts a comment and blank lines are skipped.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .errors import NpnError, UnsupportedArity
from .truthtable import TruthTable, format_hex, full_mask, parse_truth_table

PRNG_NAME = "numpy.random.PCG64"
_HEADER = re.compile(r"n\s*=\s*(\d+)$")


class CorpusError(NpnError):
    """A corpus line failed to parse; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None, cause: Exception | None = None):
        self.line = line
        self.cause = cause
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def parse_corpus(lines: Iterable[str], n: int | None = None) -> tuple[int, list[TruthTable]]:
    """Parse corpus text. ``n`` is required when the corpus has no header."""
    tables = []
    header_ok = True
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        m = _HEADER.fullmatch(text)
        if m and header_ok:
            header_n = int(m.group(1))
            if n is not None and n != header_n:
                raise CorpusError(f"header declares n={header_n} but n={n} was requested", lineno)
            n = header_n
            header_ok = False
            continue
        header_ok = False
        if n is None:
            raise CorpusError("no 'n=<k>' header and no arity given", lineno)
        try:
            tables.append(parse_truth_table(text, n))
        except NpnError as exc:
            raise CorpusError(f"{type(exc).__name__}: {exc}", lineno, exc) from exc
    if n is None:
        raise CorpusError("empty corpus without 'n=<k>' header")
    return n, tables


def read_corpus(path: str | Path, n: int | None = None) -> tuple[int, list[TruthTable]]:
    with open(path, encoding="utf-8") as fh:
        return parse_corpus(fh, n)


def write_corpus(fh: TextIO, n: int, tables: Iterable[TruthTable], comments: Iterable[str] = ()) -> None:
    for c in comments:
        fh.write(f"# {c}\n")
    fh.write(f"n={n}\n")
    for t in tables:
        fh.write(format_hex(t) + "\n")


def random_tables(n: int, count: int, seed: int) -> list[TruthTable]:
    """``count`` tables drawn uniformly with replacement, reproducible from ``seed``."""
    if not 1 <= n <= 16:
        raise UnsupportedArity(f"arity must be in [1, 16], got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    nwords = max(1, (1 << n) // 64)
    words = rng.integers(0, np.iinfo(np.uint64).max, size=(count, nwords), dtype=np.uint64, endpoint=True)
    if n < 6:
        words &= np.uint64(full_mask(n))
    raw = words.astype("<u8").tobytes()
    step = nwords * 8
    return [TruthTable(n, int.from_bytes(raw[k : k + step], "little")) for k in range(0, len(raw), step)]


def consecutive_tables(n: int, count: int, start: int) -> list[TruthTable]:
    """Tables with consecutive integer encodings ``start, start+1, ...`` (wrapping)."""
    if not 1 <= n <= 16:
        raise UnsupportedArity(f"arity must be in [1, 16], got {n}")
    modulus = 1 << (1 << n)
    return [TruthTable(n, (start + k) % modulus) for k in range(count)]
