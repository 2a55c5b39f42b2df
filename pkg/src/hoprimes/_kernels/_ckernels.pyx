# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: segmented odd-only sieve and prime-counting chains."""
import numpy as np

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def simple_sieve(long long bound):
    cdef long long i, j, count = 0
    if bound < 2:
        return np.empty(0, dtype=np.int64)
    cdef unsigned char *flags = <unsigned char *> malloc(bound + 1)
    if flags == NULL:
        raise MemoryError()
    try:
        memset(flags, 1, bound + 1)
        flags[0] = 0
        flags[1] = 0
        i = 2
        while i * i <= bound:
            if flags[i]:
                j = i * i
                while j <= bound:
                    flags[j] = 0
                    j += i
            i += 1
        for i in range(bound + 1):
            count += flags[i]
        out = np.empty(count, dtype=np.int64)
        _collect(flags, 0, bound + 1, 1, out)
        return out
    finally:
        free(flags)


cdef void _collect(unsigned char *flags, long long first, long long n,
                   long long stride, long long[:] out):
    cdef long long i, k = 0
    for i in range(n):
        if flags[i]:
            out[k] = first + i * stride
            k += 1


def segment_primes(long long lo, long long hi, const long long[:] base):
    cdef long long n, i, p, pp, start, first, count = 0
    cdef bint has_two = lo <= 2 < hi
    if lo < 3:
        lo = 3
    if lo % 2 == 0:
        lo += 1
    if lo >= hi:
        return np.array([2] if has_two else [], dtype=np.int64)
    n = (hi - lo + 1) // 2
    cdef unsigned char *flags = <unsigned char *> malloc(n)
    if flags == NULL:
        raise MemoryError()
    try:
        memset(flags, 1, n)
        for i in range(base.shape[0]):
            p = base[i]
            if p == 2:
                continue
            pp = p * p
            if pp >= hi:
                break
            start = (lo + p - 1) // p * p
            if start < pp:
                start = pp
            if start % 2 == 0:
                start += p
            first = (start - lo) // 2
            while first < n:
                flags[first] = 0
                first += p
        for i in range(n):
            count += flags[i]
        out = np.empty(count + has_two, dtype=np.int64)
        if has_two:
            out[0] = 2
        _collect(flags, lo, n, 2, out[has_two:])
        return out
    finally:
        free(flags)


cdef inline long long _pi(const long long[:] primes, long long x) nogil:
    # number of table entries <= x
    cdef long long lo = 0, hi = primes.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if primes[mid] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def chain_orders(const long long[:] primes, values):
    vals = np.ascontiguousarray(values, dtype=np.int64)
    cdef const long long[:] v = vals
    cdef Py_ssize_t n = v.shape[0], i
    out = np.zeros(n, dtype=np.int8)
    cdef signed char[:] o = out
    cdef long long m, idx
    cdef signed char k
    with nogil:
        for i in range(n):
            m = v[i]
            k = 0
            while m >= 2:
                idx = _pi(primes, m)
                if idx == 0 or primes[idx - 1] != m:
                    break
                k += 1
                m = idx
            o[i] = k
    return out
