# cython: language_level=3
"""Compiled polynomial kernels.

Same contract as ``polyval._kernels_py``.  Coefficients stay Python
objects (no overflow); the win comes from typed loop indices, list access
and C-level dict handling.
"""

BACKEND = "cython"


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


def poly_rem(list a, list mod):
    cdef Py_ssize_t dm = len(mod) - 1
    cdef Py_ssize_t i, k
    cdef list r = list(a)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c != 0:
            r[i] = 0
            for k in range(dm):
                mk = mod[k]
                if mk != 0:
                    r[i - dm + k] = r[i - dm + k] - c * mk
    del r[dm:]
    while r and r[len(r) - 1] == 0:
        del r[len(r) - 1]
    return r


def series_mul(list a, list b):
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i, j
    cdef long long ea, e
    cdef dict out = {}
    for i in range(na):
        ea = a[i][0]
        ca = a[i][1]
        for j in range(nb):
            e = ea + <long long> b[j][0]
            cb = b[j][1]
            if e in out:
                s = out[e] + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = ca * cb
    return out
