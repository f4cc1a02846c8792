"""Kernel backend selection.

Prefers the compiled extension ``bordersub._kernels`` when it imported
cleanly; otherwise falls back to the pure-Python twin.  Setting
BORDERSUB_PURE=1 forces the fallback (useful for the benchmark and for
debugging the compiled path).
"""

import os

from . import _kernels_py

if os.environ.get("BORDERSUB_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

echelon_rows = _impl.echelon_rows
tight_search = _impl.tight_search
balanced_exists = _impl.balanced_exists


def backend_name():
    return _impl.BACKEND_NAME
