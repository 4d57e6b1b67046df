"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_pykernels``. Setting ``QSCHUBERT_PURE_PYTHON=1`` forces the
fallback. Both expose ``lr_coef``, ``lr_mult`` and ``core_sign``.
"""

from __future__ import annotations

import os

from qschubert import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("QSCHUBERT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from qschubert import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

lr_coef = _impl.lr_coef
lr_mult = _impl.lr_mult
core_sign = _impl.core_sign

__all__ = ["BACKEND", "lr_coef", "lr_mult", "core_sign"]
