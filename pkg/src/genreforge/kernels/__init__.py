"""Numeric hot loops with two interchangeable backends.

The compiled Cython extension (``_kernels``) is used when available; the
numpy implementations (``_kernels_py``) are the fallback and the reference.
Selection happens once at import. Set ``GENREFORGE_PURE_PYTHON=1`` to force
the numpy path (useful for debugging and for benchmarking the two sides,
see benchmarks/bench_kernels.py).

Both backends consume the same precomputed FFT plans (bit-reversal
permutation plus twiddle table), so they perform the identical sequence of
floating-point operations.
"""

import os
from functools import lru_cache

import numpy as np

from . import _kernels_py

_FORCE_PY = os.environ.get("GENREFORGE_PURE_PYTHON", "") in ("1", "true", "yes")

_impl = _kernels_py
_BACKEND = "python"
if not _FORCE_PY:
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        _BACKEND = "compiled"


def backend_name():
    """Which kernel backend is active: 'compiled' or 'python'."""
    return _BACKEND


def backends():
    """All importable backends, keyed by name. Used by tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as _compiled
    except ImportError:
        return out
    out["compiled"] = _compiled
    return out


@lru_cache(maxsize=32)
def fft_plan(n):
    """Bit-reversal permutation and twiddle table for a length-n FFT.

    n must be a power of two. Plans are cached and shared read-only.
    """
    bits = n.bit_length() - 1
    idx = np.arange(n, dtype=np.int64)
    rev = np.zeros(n, dtype=np.int64)
    work = idx.copy()
    for _ in range(bits):
        rev = (rev << 1) | (work & 1)
        work >>= 1
    twiddles = np.exp(-2j * np.pi * np.arange(n // 2) / n)
    rev.flags.writeable = False
    twiddles.flags.writeable = False
    return rev, twiddles


def fft_batch(data, bitrev, twiddles):
    return _impl.fft_batch(data, bitrev, twiddles)


def best_split_gini(values, classes, n_classes, min_leaf):
    return _impl.best_split_gini(values, classes, n_classes, min_leaf)


def best_split_sse(values, targets, min_leaf):
    return _impl.best_split_sse(values, targets, min_leaf)
