"""Arithmetic kernels with a compiled fast path.

Importing this package binds ``blade_sign``, ``sign_table``, ``gp_dense``
and ``int_rank`` either to the optional Cython extension ``_fast`` or to
the pure-Python module ``_pure``.  Both implement the same contract and
produce identical exact results; only speed differs.

Set ``CLIFFIDEM_BACKEND=pure`` or ``=fast`` to force the choice (``fast``
raises ImportError if the extension was not built).
"""

import os

from . import _pure

_requested = os.environ.get("CLIFFIDEM_BACKEND", "").strip().lower()

if _requested == "pure":
    _impl = _pure
elif _requested == "fast":
    from . import _fast as _impl
elif _requested:
    raise ImportError(f"unknown CLIFFIDEM_BACKEND value: {_requested!r}")
else:
    try:
        from . import _fast as _impl
    except ImportError:
        _impl = _pure

blade_sign = _impl.blade_sign
sign_table = _impl.sign_table
gp_dense = _impl.gp_dense
int_rank = _impl.int_rank


def backend_name() -> str:
    """'compiled' when the extension is active, else 'python'."""
    return "python" if _impl is _pure else "compiled"
