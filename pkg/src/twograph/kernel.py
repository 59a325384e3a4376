"""Kernel backend selection.

The word operations (canonical forms, factorization, common extensions) sit
in the inner loop of every algebra product, so they exist twice: a compiled
Cython module and a pure-Python fallback with the same interface. The
compiled one is preferred when importable.

Set TWOGRAPH_KERNEL=pure or TWOGRAPH_KERNEL=cython to force a backend
(``cython`` raises if the extension was not built).
"""

import os

_choice = os.environ.get("TWOGRAPH_KERNEL", "auto")

if _choice == "pure":
    from . import _kernel_py as _impl
elif _choice == "cython":
    from . import _kernel_cy as _impl  # type: ignore[no-redef]
elif _choice == "auto":
    try:
        from . import _kernel_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]
else:
    raise RuntimeError(f"TWOGRAPH_KERNEL must be auto, pure or cython, got {_choice!r}")

BACKEND = _impl.BACKEND

prepare = _impl.prepare
normalize = _impl.normalize
concat = _impl.concat
to_f_first = _impl.to_f_first
factor = _impl.factor
common_ext = _impl.common_ext
