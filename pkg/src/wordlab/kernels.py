"""Backend selection for the string kernels.

The compiled extension is preferred; set WORDLAB_PURE=1 to force the
pure-Python fallback (used by the benchmark and the parity tests).
"""

import os

if os.environ.get("WORDLAB_PURE"):
    from wordlab import _fallback as _impl

    BACKEND = "pure"
else:
    try:
        from wordlab import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from wordlab import _fallback as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

border_table = _impl.border_table
occurrences = _impl.occurrences
frontier_length = _impl.frontier_length
