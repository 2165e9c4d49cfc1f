"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``GREENHV_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels
from ._pykernels import rank_bareiss

if os.environ.get("GREENHV_PURE_PYTHON", "") not in ("", "0"):
    rank_mod_p = _pykernels.rank_mod_p
    BACKEND = "python"
else:
    try:
        from ._ckernels import rank_mod_p  # type: ignore[import-not-found]

        BACKEND = "compiled"
    except ImportError:
        rank_mod_p = _pykernels.rank_mod_p
        BACKEND = "python"

__all__ = ["rank_mod_p", "rank_bareiss", "BACKEND"]
