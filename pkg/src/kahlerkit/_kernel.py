"""Selects the blade-product kernel at import time.

Prefers the compiled extension, falls back to the pure-Python twin.
Set ``KAHLERKIT_PURE_PYTHON=1`` to force the fallback (used by the
benchmark and the backend-parity tests).
"""

import os

if os.environ.get("KAHLERKIT_PURE_PYTHON"):
    from kahlerkit import _core_py as _impl
else:
    try:
        from kahlerkit import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from kahlerkit import _core_py as _impl

BACKEND: str = _impl.BACKEND
mul_terms = _impl.mul_terms
blade_product = _impl.blade_product
reorder_sign = _impl.reorder_sign
