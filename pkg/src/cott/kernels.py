"""Backend selection for the search kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Setting ``COTT_PURE_PYTHON=1`` forces the
fallback.
"""

from __future__ import annotations

import os

if os.environ.get("COTT_PURE_PYTHON", "") not in ("", "0"):
    from cott import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from cott import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from cott import _pykernels as _impl

        BACKEND = "python"

sim_staircase_search = _impl.sim_staircase_search
ind_staircase_search = _impl.ind_staircase_search
sim_staircase_brute = _impl.sim_staircase_brute
induced_embedding = _impl.induced_embedding

__all__ = [
    "BACKEND",
    "sim_staircase_search",
    "ind_staircase_search",
    "sim_staircase_brute",
    "induced_embedding",
]
