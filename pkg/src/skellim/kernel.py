"""Backend selection for the homomorphism-search kernel.

The compiled extension is used when importable; ``SKELLIM_PURE=1`` forces the
pure-Python fallback.
"""
import os

from . import _kernel_py

BACKEND = "python"
search = _kernel_py.search

if os.environ.get("SKELLIM_PURE") != "1":
    try:
        from . import _kernel as _compiled
    except ImportError:  # extension not built
        pass
    else:
        search = _compiled.search
        BACKEND = "cython"


def use(backend: str):
    """Switch backend at runtime (used by the benchmark and parity tests)."""
    global search, BACKEND
    if backend == "python":
        search, BACKEND = _kernel_py.search, "python"
    elif backend == "cython":
        from . import _kernel as _compiled

        search, BACKEND = _compiled.search, "cython"
    else:
        raise ValueError(backend)
