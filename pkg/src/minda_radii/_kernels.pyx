# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for series recurrences and polygon queries.

Every function here has a numpy twin in ``_fallback`` with the same
signature; ``kernels`` picks one at import time.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

ctypedef double complex cplx


def cauchy_product(const cplx[::1] a, const cplx[::1] b):
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    out = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] c = out
    cdef Py_ssize_t i, k
    cdef cplx s
    for i in range(n):
        s = 0
        for k in range(i + 1):
            s = s + a[k] * b[i - k]
        c[i] = s
    return out


def exp_recurrence(const cplx[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] d = out
    cdef Py_ssize_t i, k
    cdef cplx s
    d[0] = 1
    for i in range(1, n):
        s = 0
        for k in range(1, i + 1):
            s = s + k * a[k] * d[i - k]
        d[i] = s / i
    return out


def div_recurrence(const cplx[::1] a, const cplx[::1] b):
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    out = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] q = out
    cdef Py_ssize_t i, k
    cdef cplx s
    cdef cplx b0 = b[0]
    for i in range(n):
        s = a[i]
        for k in range(1, i + 1):
            s = s - b[k] * q[i - k]
        q[i] = s / b0
    return out


def compose(const cplx[::1] a, const cplx[::1] w):
    """a(w(z)) with w(0) = 0, truncated, as the sum of a_k w^k.

    w^k vanishes to order k, so each power update only touches indices >= k.
    """
    cdef Py_ssize_t n = min(a.shape[0], w.shape[0])
    out_arr = np.zeros(n, dtype=np.complex128)
    pw_arr = np.zeros(n, dtype=np.complex128)
    nxt_arr = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] out = out_arr
    cdef cplx[::1] pw = pw_arr
    cdef cplx[::1] nxt = nxt_arr
    cdef Py_ssize_t k, i, t
    cdef cplx s, ak
    out[0] = a[0]
    if n == 1:
        return out_arr
    for i in range(1, n):
        pw[i] = w[i]
        out[i] = out[i] + a[1] * w[i]
    for k in range(2, n):
        # w^k = w * w^(k-1); w^(k-1) starts at index k-1
        for i in range(k, n):
            s = 0
            for t in range(1, i - k + 2):
                s = s + w[t] * pw[i - t]
            nxt[i] = s
        ak = a[k]
        pw[k - 1] = 0
        for i in range(k, n):
            pw[i] = nxt[i]
            out[i] = out[i] + ak * nxt[i]
    return out_arr


def even_odd_contains(const double[::1] px, const double[::1] py,
                      const double[::1] vx, const double[::1] vy):
    cdef Py_ssize_t m = px.shape[0]
    cdef Py_ssize_t n = vx.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    cdef cnp.npy_bool[::1] res = out
    cdef Py_ssize_t p, i, j
    cdef bint inside
    cdef double x, y, xi, yi, xj, yj
    for p in range(m):
        x = px[p]
        y = py[p]
        inside = False
        j = n - 1
        for i in range(n):
            xi = vx[i]
            yi = vy[i]
            xj = vx[j]
            yj = vy[j]
            if (yi > y) != (yj > y):
                if x < (xj - xi) * (y - yi) / (yj - yi) + xi:
                    inside = not inside
            j = i
        res[p] = inside
    return out


def min_segment_distance(const double[::1] px, const double[::1] py,
                         const double[::1] vx, const double[::1] vy):
    cdef Py_ssize_t m = px.shape[0]
    cdef Py_ssize_t n = vx.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] res = out
    cdef Py_ssize_t p, i, j
    cdef double x, y, ax, ay, dx, dy, t, ex, ey, d2, best, len2
    for p in range(m):
        x = px[p]
        y = py[p]
        best = 1e308
        j = n - 1
        for i in range(n):
            ax = vx[j]
            ay = vy[j]
            dx = vx[i] - ax
            dy = vy[i] - ay
            len2 = dx * dx + dy * dy
            if len2 > 0:
                t = ((x - ax) * dx + (y - ay) * dy) / len2
                if t < 0:
                    t = 0
                elif t > 1:
                    t = 1
            else:
                t = 0
            ex = ax + t * dx - x
            ey = ay + t * dy - y
            d2 = ex * ex + ey * ey
            if d2 < best:
                best = d2
            j = i
        res[p] = sqrt(best)
    return out
