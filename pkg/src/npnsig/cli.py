"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 I/O failure, 4 soundness violation.
"""
from __future__ import annotations

import functools
import json
import sys
import time

import click
import numpy as np

from . import __version__, kernels
from .classifier import classify, compare
from .corpus import PRNG_NAME, CorpusError, consecutive_tables, random_tables, read_corpus, write_corpus
from .errors import EmptyInput, NpnError, OracleArityLimit
from .oracle import MAX_ORACLE_ARITY, exact_classify
from .signatures import SignatureSelection, build_msv, compute_signatures
from .truthtable import format_hex, parse_truth_table

EXIT_INPUT = 2
EXIT_IO = 3
EXIT_UNSOUND = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NpnError as exc:
            _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")
        except OSError as exc:
            _fail(EXIT_IO, str(exc))

    return wrapper


def _selection(text: str) -> SignatureSelection:
    try:
        return SignatureSelection.parse(text)
    except NpnError as exc:
        raise click.BadParameter(str(exc), param_hint="--sigs") from exc


def _fmt(values) -> str:
    return " ".join(str(int(v)) for v in values)


@click.group()
@click.version_option(__version__, prog_name="npnsig")
def cli():
    """NPN classification of Boolean functions by signature vectors."""


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Number of variables.")
@click.option("--tt", required=True, help="Truth table in hex, most significant digit first.")
@click.option("--sigs", default="all", show_default=True, help="Comma-separated families: ocv1,ocv2,oiv,osv,osdv.")
def sigs(n, tt, sigs):
    """Print the signature vectors of one truth table."""
    sel = _selection(sigs)
    try:
        t = parse_truth_table(tt, n)
    except NpnError as exc:
        _fail(EXIT_INPUT, f"--tt: {type(exc).__name__}: {exc}")
    v = compute_signatures(t)
    lines = [("N", [v.n]), ("SAT", [v.satisfy_count])]
    if sel.ocv1:
        lines.append(("OCV1", v.ocv1))
    if sel.ocv2:
        lines.append(("OCV2", v.ocv2))
    if sel.oiv:
        lines += [("OIV", v.oiv), ("INF", [v.total_influence])]
    if sel.osv:
        lines += [("OSV1", v.osv1), ("OSV0", v.osv0), ("OSV", v.osv), ("SEN", [v.sen, v.sen0, v.sen1])]
    if sel.osdv:
        lines += [("OSDV1", v.osdv1), ("OSDV0", v.osdv0), ("OSDV", v.osdv)]
    lines.append(("MSV", build_msv(t, sel).values))
    for label, values in lines:
        click.echo(f"{label}: {_fmt(values)}".rstrip())


def _load(path, n):
    try:
        return read_corpus(path, n)
    except CorpusError as exc:
        _fail(EXIT_INPUT, f"{path}: {exc}")


@cli.command("classify")
@click.option("--input", "input_path", required=True, help="Corpus file.")
@click.option("--n", "n", type=int, default=None, help="Arity, if the corpus has no 'n=' header.")
@click.option("--sigs", default="all", show_default=True)
@click.option("--output", "output_path", required=True, help="JSON-lines output file.")
@_guarded
def classify_cmd(input_path, n, sigs, output_path):
    """Classify a corpus; write one {tt, class} record per distinct table plus a summary."""
    sel = _selection(sigs)
    n, tables = _load(input_path, n)
    if not tables:
        raise EmptyInput(f"{input_path}: corpus has no truth tables")
    start = time.perf_counter()
    result = classify(tables, sel)
    elapsed_ms = (time.perf_counter() - start) * 1e3
    summary = {
        "n": n,
        "functions": result.functions,
        "unique": result.unique,
        "classes": result.class_count,
        "selection": str(sel),
        "elapsed_ms": round(elapsed_ms, 3),
    }
    with open(output_path, "w", encoding="utf-8") as fh:
        for t, c in zip(result.tables, result.labels):
            fh.write(json.dumps({"tt": format_hex(t), "class": c}) + "\n")
        fh.write(json.dumps(summary) + "\n")
    click.echo(json.dumps(summary))


@cli.command("compare")
@click.option("--input", "input_path", required=True)
@click.option("--n", "n", type=int, default=None)
@click.option("--sigs", default="all", show_default=True)
@_guarded
def compare_cmd(input_path, n, sigs):
    """Compare signature classes against the exact oracle (n <= 6)."""
    sel = _selection(sigs)
    if n is not None and n > MAX_ORACLE_ARITY:
        raise OracleArityLimit(f"--n {n} exceeds the oracle bound {MAX_ORACLE_ARITY}")
    n, tables = _load(input_path, n)
    if n > MAX_ORACLE_ARITY:
        raise OracleArityLimit(f"corpus arity {n} exceeds the oracle bound {MAX_ORACLE_ARITY}")
    if not tables:
        raise EmptyInput(f"{input_path}: corpus has no truth tables")
    report = compare(classify(tables, sel), exact_classify(tables))
    click.echo(f"selection: {sel}")
    click.echo(f"signature_classes: {report.sig_class_count}")
    click.echo(f"exact_classes: {report.exact_class_count}")
    click.echo(f"accuracy: {report.accuracy:.6f}")
    click.echo(f"violations: {len(report.violations)}")
    for a, b in report.violations[:10]:
        click.echo(f"  violation: {format_hex(a)} {format_hex(b)}")
    if report.violations:
        sys.exit(EXIT_UNSOUND)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--count", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "output_path", required=True)
@click.option("--consecutive", is_flag=True, help="Emit consecutive encodings starting at --seed.")
@_guarded
def gen(n, count, seed, output_path, consecutive):
    """Write a reproducible corpus of random (or consecutive) truth tables."""
    if count < 1:
        _fail(EXIT_INPUT, f"--count must be >= 1, got {count}")
    if consecutive:
        tables = consecutive_tables(n, count, seed)
        note = f"consecutive encodings from {seed} count={count}"
    else:
        tables = random_tables(n, count, seed)
        note = f"uniform prng={PRNG_NAME} numpy={np.__version__} seed={seed} count={count}"
    with open(output_path, "w", encoding="utf-8") as fh:
        write_corpus(fh, n, tables, comments=[f"npnsig {__version__} gen: {note}"])


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise click.BadParameter(f"not a list of integers: {text!r}", param_hint="--sizes") from exc
    if not sizes or any(s < 1 for s in sizes):
        raise click.BadParameter("sizes must be positive", param_hint="--sizes")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise click.BadParameter("sizes must be strictly ascending", param_hint="--sizes")
    return sizes


def run_bench(n: int, sizes: list[int], seed: int, sel: SignatureSelection) -> list[dict]:
    """Time end-to-end classification (hex parse + classify) of random corpora."""
    rows = []
    for size in sizes:
        lines = [format_hex(t) for t in random_tables(n, size, seed)]
        start = time.perf_counter()
        result = classify([parse_truth_table(h, n) for h in lines], sel)
        elapsed = time.perf_counter() - start
        row = {"size": size, "elapsed_s": elapsed, "per_s": size / elapsed, "classes": result.class_count}
        if rows:
            row["ratio"] = elapsed / rows[-1]["elapsed_s"]
        rows.append(row)
    return rows


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--sizes", required=True, help="Comma-separated ascending corpus sizes.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--sigs", default="all", show_default=True)
@click.option("--backend", type=click.Choice(["auto", "compiled", "python"]), default="auto", show_default=True)
@_guarded
def bench(n, sizes, seed, sigs, backend):
    """Runtime versus corpus size."""
    sel = _selection(sigs)
    size_list = _parse_sizes(sizes)
    if backend != "auto":
        try:
            kernels.set_backend(backend)
        except ValueError as exc:
            _fail(EXIT_INPUT, str(exc))
    click.echo(f"# n={n} seed={seed} sigs={sel} backend={kernels.BACKEND}")
    click.echo(f"{'size':>10} {'elapsed_s':>10} {'funcs_per_s':>12} {'classes':>9} {'ratio':>7}")
    for row in run_bench(n, size_list, seed, sel):
        ratio = f"{row['ratio']:.2f}" if "ratio" in row else "-"
        click.echo(f"{row['size']:>10} {row['elapsed_s']:>10.3f} {row['per_s']:>12.0f} {row['classes']:>9} {ratio:>7}")


def main(argv=None):
    cli.main(args=argv, prog_name="npnsig")


if __name__ == "__main__":
    main()
