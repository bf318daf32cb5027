# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same semantics as ``_pykernels``.

Logs are int64; ``zech`` is the field's Zech table as a contiguous array.
Moduli are positive, so remainders are normalized by hand.
"""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 _mod(i64 a, i64 m) nogil:
    a = a % m
    return a + m if a < 0 else a


cdef bint _perm_check(const i64[::1] zech, i64 qm1, i64 la, i64 m0,
                      i64 lb, i64 n0, unsigned char[::1] seen) nogil:
    cdef i64 k, z, v
    cdef i64 e1 = _mod(la, qm1), e2 = _mod(lb, qm1)
    m0 = _mod(m0, qm1)
    n0 = _mod(n0, qm1)
    for k in range(qm1):
        seen[k] = 0
    for k in range(qm1):
        z = zech[_mod(e2 - e1, qm1)]
        if z < 0:
            return False
        v = e1 + z
        if v >= qm1:
            v -= qm1
        if seen[v]:
            return False
        seen[v] = 1
        e1 += m0
        if e1 >= qm1:
            e1 -= qm1
        e2 += n0
        if e2 >= qm1:
            e2 -= qm1
    return True


def perm_check(const i64[::1] zech, i64 qm1, i64 la, i64 m0, i64 lb, i64 n0):
    cdef unsigned char[::1] seen = np.zeros(qm1, dtype=np.uint8)
    return bool(_perm_check(zech, qm1, la, m0, lb, n0, seen))


def perm_flags(const i64[::1] zech, i64 qm1, i64 m0, i64 n0,
               const i64[::1] la_arr, const i64[::1] lb_arr):
    cdef Py_ssize_t i, n = la_arr.shape[0]
    cdef unsigned char[::1] seen = np.zeros(qm1, dtype=np.uint8)
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _perm_check(zech, qm1, la_arr[i], m0, lb_arr[i], n0, seen)
    return out


cdef bint _mu_check(const i64[::1] zech, i64 qm1, i64 q, i64 n, i64 d,
                    i64 la, unsigned char[::1] seen) nogil:
    cdef i64 step = q - 1, j, lx, e1, z, s, v
    for j in range(q + 1):
        seen[j] = 0
    for j in range(q + 1):
        lx = j * step
        e1 = (d % qm1) * lx % qm1
        z = zech[_mod(la - e1, qm1)]
        if z < 0:
            return False
        s = (e1 + z) % qm1
        v = ((n % qm1) * lx % qm1 + step * s) % qm1
        v = v // step
        if seen[v]:
            return False
        seen[v] = 1
    return True


def mu_check(const i64[::1] zech, i64 qm1, i64 q, i64 n, i64 d, i64 la):
    cdef unsigned char[::1] seen = np.zeros(q + 1, dtype=np.uint8)
    return bool(_mu_check(zech, qm1, q, n, d, la, seen))


def mu_flags(const i64[::1] zech, i64 qm1, i64 q, i64 n, i64 d, const i64[::1] la_arr):
    cdef Py_ssize_t i, cnt = la_arr.shape[0]
    cdef unsigned char[::1] seen = np.zeros(q + 1, dtype=np.uint8)
    out = np.zeros(cnt, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    with nogil:
        for i in range(cnt):
            o[i] = _mu_check(zech, qm1, q, n, d, la_arr[i], seen)
    return out


def table_logs(const i64[::1] zech, i64 qm1, i64 la, i64 m0, i64 lb, i64 n0):
    out = np.empty(qm1, dtype=np.int64)
    cdef i64[::1] o = out
    cdef i64 k, z
    cdef i64 e1 = _mod(la, qm1), e2 = _mod(lb, qm1)
    m0 = _mod(m0, qm1)
    n0 = _mod(n0, qm1)
    with nogil:
        for k in range(qm1):
            z = zech[_mod(e2 - e1, qm1)]
            o[k] = -1 if z < 0 else (e1 + z) % qm1
            e1 = (e1 + m0) % qm1
            e2 = (e2 + n0) % qm1
    return out


def count_zeros(const i64[::1] zech, i64 qm1, const i64[::1] ti, const i64[::1] tj,
                const i64[::1] tc, const i64[::1] xs, const i64[::1] ys, bint skip_diag):
    cdef Py_ssize_t a, b, k, nt = tc.shape[0]
    cdef i64 lx, ly, acc, t, z, i, j, count = 0
    with nogil:
        for a in range(xs.shape[0]):
            lx = xs[a]
            for b in range(ys.shape[0]):
                ly = ys[b]
                if skip_diag and lx == ly:
                    continue
                acc = -1
                for k in range(nt):
                    i = ti[k]
                    j = tj[k]
                    if (lx < 0 and i > 0) or (ly < 0 and j > 0):
                        continue
                    t = tc[k]
                    if i > 0:
                        t += (i % qm1) * lx % qm1
                    if j > 0:
                        t += (j % qm1) * ly % qm1
                    t = _mod(t, qm1)
                    if acc < 0:
                        acc = t
                    else:
                        z = zech[_mod(t - acc, qm1)]
                        acc = -1 if z < 0 else (acc + z) % qm1
                if acc < 0:
                    count += 1
    return count
