"""Kernel backend selection.

Hot search loops (exhaustive cut/pair scans, max-flow) have two
implementations: a numba-compiled one and a pure-Python twin. The active
backend is chosen once at import time from the KRONCONN_BACKEND environment
variable:

    auto    prefer numba, fall back to pure Python (default)
    numba   require the compiled kernels, fail loudly if unavailable
    python  force the pure-Python kernels

Both backends return bit-identical results; ``benchmarks/bench_backends.py``
compares their speed.
"""

from __future__ import annotations

import os

_ENV_VAR = "KRONCONN_BACKEND"
_CHOICES = ("auto", "numba", "python")


def _select():
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if choice not in _CHOICES:
        raise RuntimeError(
            f"{_ENV_VAR} must be one of {_CHOICES}, got {choice!r}"
        )
    if choice in ("auto", "numba"):
        try:
            from . import _kernels_numba as impl

            return impl, "numba"
        except ImportError as exc:
            if choice == "numba":
                raise RuntimeError(
                    f"{_ENV_VAR}=numba but the compiled backend is "
                    f"unavailable: {exc}"
                ) from exc
    from . import _kernels_py as impl

    return impl, "python"


kernels, backend_name = _select()
