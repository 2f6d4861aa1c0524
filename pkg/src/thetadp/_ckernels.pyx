# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`thetadp._pykernels` on 64-bit integers.

Callers must check that every partial product and the final value fit in a
signed 64-bit integer; :mod:`thetadp.kernels` does this before dispatching.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def search_block(aligned, split, int m, perms, tau2, long long start, long long stop, bint maximize):
    cdef int n = len(aligned)
    if n < 2:
        raise ValueError("need at least two paths")
    if stop <= start:
        raise ValueError("empty block")
    cdef int ndig = n - 1
    cdef int mm = m * m
    cdef int nperm = len(perms)
    cdef int ntau2 = len(tau2)
    cdef int p, lv, i, k
    cdef int64_t value, diag, qsum, best = 0
    cdef bint have_best = False
    cdef long long idx, rem, where = start

    cdef int64_t *a = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *o = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int *radix = <int *> malloc(ndig * sizeof(int))
    cdef int *digits = <int *> malloc(ndig * sizeof(int))
    cdef int *ptab = <int *> malloc(nperm * m * sizeof(int))
    cdef int *ttab = <int *> malloc(ntau2 * m * sizeof(int))
    cdef int64_t *levels = <int64_t *> malloc(ndig * mm * sizeof(int64_t))
    cdef int *tau
    cdef int64_t *q
    try:
        for k in range(n):
            a[k] = aligned[k]
            o[k] = split[k]
        for k in range(nperm):
            for i in range(m):
                ptab[k * m + i] = perms[k][i]
        for k in range(ntau2):
            for i in range(m):
                ttab[k * m + i] = tau2[k][i]
        radix[0] = ntau2
        for p in range(1, ndig):
            radix[p] = nperm

        rem = start
        for p in range(ndig - 1, -1, -1):
            digits[p] = rem % radix[p]
            rem //= radix[p]

        for i in range(m):
            for k in range(m):
                levels[i * m + k] = a[0] if i == k else o[0]
        for lv in range(1, ndig):
            _apply(levels, lv, m, a[lv], o[lv], _table(ptab, ttab, lv - 1, digits[lv - 1], m))

        q = levels + (ndig - 1) * mm
        qsum = 0
        for k in range(mm):
            qsum += q[k]

        idx = start
        while True:
            tau = _table(ptab, ttab, ndig - 1, digits[ndig - 1], m)
            diag = 0
            for i in range(m):
                diag += q[i * m + tau[i]]
            value = o[n - 1] * qsum + (a[n - 1] - o[n - 1]) * diag
            if not have_best or (value > best if maximize else value < best):
                best = value
                have_best = True
                where = idx
            idx += 1
            if idx >= stop:
                break
            p = ndig - 1
            while True:
                digits[p] += 1
                if digits[p] < radix[p]:
                    break
                digits[p] = 0
                p -= 1
            if p < ndig - 1:
                for lv in range(p + 1, ndig):
                    _apply(levels, lv, m, a[lv], o[lv], _table(ptab, ttab, lv - 1, digits[lv - 1], m))
                qsum = 0
                for k in range(mm):
                    qsum += q[k]
        return best, where
    finally:
        free(a)
        free(o)
        free(radix)
        free(digits)
        free(ptab)
        free(ttab)
        free(levels)


cdef inline int *_table(int *ptab, int *ttab, int digit_pos, int digit, int m):
    if digit_pos == 0:
        return ttab + digit * m
    return ptab + digit * m


cdef inline void _apply(int64_t *levels, int lv, int m, int64_t a, int64_t o, int *tau):
    cdef int mm = m * m
    cdef int64_t *prev = levels + (lv - 1) * mm
    cdef int64_t *cur = levels + lv * mm
    cdef int k, i
    for k in range(mm):
        cur[k] = prev[k] * o
    for i in range(m):
        k = i * m + tau[i]
        cur[k] = prev[k] * a
