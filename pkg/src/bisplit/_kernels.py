"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set ``BISPLIT_PURE=1`` to force the pure-Python implementation (useful for
comparing the two backends; see ``benchmarks/kernel_bench.py``).
"""

from __future__ import annotations

import os

from bisplit._inversions_py import count_inversions as count_inversions_py

if os.environ.get("BISPLIT_PURE"):
    count_inversions = count_inversions_py
    BACKEND = "python"
else:
    try:
        from bisplit._inversions_c import count_inversions  # type: ignore[no-redef]
        BACKEND = "c"
    except ImportError:  # extension not built
        count_inversions = count_inversions_py
        BACKEND = "python"
