"""Kernel selection.

The compiled extension is used when it imports and the environment
variable ``TORICFLOW_PURE_PYTHON`` is unset (or "0").  Inputs that do not
fit the compiled kernels' 64-bit representation are routed to the
pure-Python versions automatically.
"""

import os

from . import _pykernels

_compiled = None
if os.environ.get("TORICFLOW_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_LIMIT = 1 << 62


def _small(values):
    return all(-_LIMIT < v < _LIMIT for v in values)


def phase_one(A, b, backend=None):
    impl = _pick(backend)
    if impl is _pykernels:
        return impl.phase_one(A, b)
    if not (_small(b) and all(_small(row) for row in A)):
        return _pykernels.phase_one(A, b)
    try:
        return impl.phase_one(A, b)
    except OverflowError:
        return _pykernels.phase_one(A, b)


def extract_sqfree(vecs, chain, plus, minus, revlex=False, backend=None):
    impl = _pick(backend)
    if impl is not _pykernels:
        wide = any(p >> 64 for p in plus) or any(q >> 64 for q in minus)
        # each dot product stays far below 2**127 when entries fit 2**40
        small = all(abs(x) < (1 << 40) for row in chain for x in row) and all(
            abs(x) < (1 << 40) for row in vecs for x in row
        )
        if wide or not small:
            impl = _pykernels
    return impl.extract_sqfree(vecs, chain, plus, minus, revlex)


def _pick(backend):
    if backend is None:
        return _compiled if _compiled is not None else _pykernels
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")
