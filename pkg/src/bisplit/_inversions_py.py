"""Pure-Python inversion counting (merge sort).

This is the fallback for the compiled kernel in ``_inversions_c.pyx``; both
count pairs i < j with values[i] > values[j].  Keep the two in sync.
"""

from __future__ import annotations

from typing import Sequence


def count_inversions(values: Sequence[int]) -> int:
    """Number of strictly decreasing pairs in ``values``."""
    n = len(values)
    if n < 2:
        return 0
    a = list(values)
    buf = [0] * n

    def merge_count(lo: int, hi: int) -> int:
        if hi - lo < 2:
            return 0
        mid = (lo + hi) // 2
        inv = merge_count(lo, mid) + merge_count(mid, hi)
        i, j, k = lo, mid, lo
        while i < mid and j < hi:
            if a[i] <= a[j]:
                buf[k] = a[i]
                i += 1
            else:
                buf[k] = a[j]
                j += 1
                inv += mid - i
            k += 1
        buf[k:hi] = a[i:mid] if i < mid else a[j:hi]
        a[lo:hi] = buf[lo:hi]
        return inv

    return merge_count(0, n)
