"""Kernel backend selection.

The hot search loops exist twice: numba-compiled (default when numba is
importable) and pure numpy.  Both expose

    stratum_block, exhaustive_candidates, sieve_zp, crt_join,
    rational_points

with identical semantics; the exact layer sorts and re-verifies whatever
they emit, so the choice only affects speed.  Select explicitly with the
environment variable QUARTICLINES_BACKEND=numba|numpy.
"""

import os

_FORCED = os.environ.get("QUARTICLINES_BACKEND", "").strip().lower()

if _FORCED not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"QUARTICLINES_BACKEND={_FORCED!r}; expected 'numba' or 'numpy'"
    )

if _FORCED == "numpy":
    from . import _kernels_numpy as kernels

    BACKEND = "numpy"
elif _FORCED == "numba":
    from . import _kernels_numba as kernels

    BACKEND = "numba"
else:
    try:
        from . import _kernels_numba as kernels

        BACKEND = "numba"
    except ImportError:
        from . import _kernels_numpy as kernels

        BACKEND = "numpy"


def set_worker_threads(n):
    """Bound the kernel thread count (numba backend only; numpy kernels
    are single-threaded)."""
    if BACKEND != "numba":
        return
    import numba

    n = max(1, min(int(n), numba.config.NUMBA_NUM_THREADS))
    numba.set_num_threads(n)
