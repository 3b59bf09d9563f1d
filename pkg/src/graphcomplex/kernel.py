"""Backend selection for the canonical-form kernel.

The compiled extension is preferred when it importable; the pure-Python
twin is the fallback and the reference.  Set ``GRAPHCOMPLEX_PURE=1`` to
force the pure backend (used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

from graphcomplex import _kernel_py

BACKEND = "python"
_impl = _kernel_py

if not os.environ.get("GRAPHCOMPLEX_PURE"):
    try:
        from graphcomplex import _kernel_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        pass

_COMPILED_MAX_N = 32


def search_canonical(n, edges):
    if BACKEND == "c" and n > _COMPILED_MAX_N:
        return _kernel_py.search_canonical(n, edges)
    return _impl.search_canonical(n, edges)


def automorphism_images(n, edges):
    if BACKEND == "c" and n > _COMPILED_MAX_N:
        return _kernel_py.automorphism_images(n, edges)
    return _impl.automorphism_images(n, edges)
