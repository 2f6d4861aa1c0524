"""Backend selection for the signature search kernel.

The compiled kernel is used when it imported and every intermediate value
provably fits in 63 bits; otherwise the pure-Python kernel runs on Python
integers.  Set ``THETADP_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from math import prod
from typing import Sequence

from thetadp import _pykernels

try:
    if os.environ.get("THETADP_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python forced by THETADP_PURE_PYTHON")
    from thetadp import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
INT64_SAFE = 1 << 62


def fits_int64(aligned: Sequence[int], split: Sequence[int], m: int) -> bool:
    # every partial product and the final sum are bounded by this
    return m * m * prod(max(a, o, 1) for a, o in zip(aligned, split)) < INT64_SAFE


def search_block(aligned, split, m, perms, tau2, start, stop, maximize, backend=None):
    """Best value on ``[start, stop)`` and the first index attaining it.

    ``backend`` may force ``"cython"`` or ``"python"``.
    """
    if backend is None:
        use_c = _ckernels is not None and fits_int64(aligned, split, m)
    elif backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernel is not available")
        if not fits_int64(aligned, split, m):
            raise OverflowError("values exceed the 64-bit kernel range")
        use_c = True
    elif backend == "python":
        use_c = False
    else:
        raise ValueError(f"unknown backend {backend!r}")
    impl = _ckernels if use_c else _pykernels
    best, where = impl.search_block(
        list(aligned), list(split), m, list(perms), list(tau2), start, stop, maximize
    )
    return int(best), int(where)
