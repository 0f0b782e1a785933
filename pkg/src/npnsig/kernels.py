"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy
implementation. Set ``NPNSIG_BACKEND=python`` to force the fallback.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("NPNSIG_BACKEND", "").lower() != "python":
    try:
        from . import _kernels as _impl  # noqa: F811

        BACKEND = "compiled"
    except ImportError:
        pass


def available_backends() -> dict:
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out


def get_backend(name: str | None = None):
    """Kernel module by name (``"compiled"`` or ``"python"``); default is the active one."""
    if name is None:
        return _impl
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"kernel backend {name!r} is not available (have {sorted(backends)})")
    return backends[name]


def set_backend(name: str) -> str:
    """Switch the active backend; returns the name of the previous one."""
    global _impl, BACKEND
    previous = BACKEND
    _impl = get_backend(name)
    BACKEND = name
    return previous


def msv_rows(words, n, flags):
    return _impl.msv_rows(words, n, flags)


def local_sensitivities(words, n):
    return _impl.local_sensitivities(words, n)


def osdv_grids(words, n):
    return _impl.osdv_grids(words, n)
