# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-enumeration kernel.

Same exhaustive mask walk as _subsetcount_py, with machine-word masks.
The ground set never exceeds 24 elements (callers enforce the bound),
so a subset is one unsigned 64-bit word and counts fit comfortably.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long x)


def count_intersecting_by_size(int n, int p, int m):
    cdef int nground = n * p + m
    if nground < 0 or nground > 24:
        raise ValueError("ground set out of kernel range")
    cdef unsigned long long total = (<unsigned long long> 1) << nground
    cdef unsigned long long blocks[24]
    cdef long long counts[25]
    cdef unsigned long long mask, block
    cdef int b, ok, s

    block = ((<unsigned long long> 1) << p) - 1
    for b in range(n):
        blocks[b] = block << (b * p)
    for s in range(nground + 1):
        counts[s] = 0

    for mask in range(total):
        ok = 1
        for b in range(n):
            if not (mask & blocks[b]):
                ok = 0
                break
        if ok:
            counts[__builtin_popcountll(mask)] += 1

    return [counts[s] for s in range(nground + 1)]
