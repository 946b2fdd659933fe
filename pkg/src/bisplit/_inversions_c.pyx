# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inversion counting (merge sort over a C array).

Mirrors ``_inversions_py.count_inversions``; the dispatch in ``_kernels``
picks this implementation when the extension was built.
"""

from libc.stdlib cimport free, malloc


cdef unsigned long long _merge_count(long long *a, long long *buf,
                                     Py_ssize_t lo, Py_ssize_t hi) noexcept:
    if hi - lo < 2:
        return 0
    cdef Py_ssize_t mid = (lo + hi) // 2
    cdef unsigned long long inv = _merge_count(a, buf, lo, mid) + \
        _merge_count(a, buf, mid, hi)
    cdef Py_ssize_t i = lo
    cdef Py_ssize_t j = mid
    cdef Py_ssize_t k = lo
    while i < mid and j < hi:
        if a[i] <= a[j]:
            buf[k] = a[i]
            i += 1
        else:
            buf[k] = a[j]
            j += 1
            inv += <unsigned long long> (mid - i)
        k += 1
    while i < mid:
        buf[k] = a[i]
        i += 1
        k += 1
    while j < hi:
        buf[k] = a[j]
        j += 1
        k += 1
    for i in range(lo, hi):
        a[i] = buf[i]
    return inv


def count_inversions(values):
    """Number of strictly decreasing pairs in ``values``."""
    cdef Py_ssize_t n = len(values)
    if n < 2:
        return 0
    cdef long long *a = <long long *> malloc(n * sizeof(long long))
    cdef long long *buf = <long long *> malloc(n * sizeof(long long))
    if a == NULL or buf == NULL:
        if a != NULL:
            free(a)
        if buf != NULL:
            free(buf)
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            a[i] = values[i]
        return _merge_count(a, buf, 0, n)
    finally:
        free(a)
        free(buf)
