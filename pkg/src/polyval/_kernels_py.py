"""Pure-Python fallback for the polynomial kernels.

Dense kernels take coefficient vectors of Python ints, ascending degree;
the sparse kernel takes (integer exponent, coefficient object) pairs.  The
compiled twin ``polyval._speedups`` implements the same functions; one
module is picked at import time by ``polyval.kernels``.
"""

BACKEND = "python"


def poly_mul(a, b):
    """Convolution of two integer coefficient vectors."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def poly_rem(a, mod):
    """Remainder of ``a`` modulo the monic integer polynomial ``mod``.

    Trailing zeros are stripped, so the zero remainder is ``[]``.
    """
    dm = len(mod) - 1
    r = list(a)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for k in range(dm):
                mk = mod[k]
                if mk:
                    r[i - dm + k] -= c * mk
    del r[dm:]
    while r and r[-1] == 0:
        r.pop()
    return r


def series_mul(a, b):
    """Sparse convolution of (int exponent, coefficient) pair lists.

    Coefficients are arbitrary objects under ``+``/``*`` whose zeros are
    falsy (rationals, ints); zero results are dropped.
    """
    out = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            if e in out:
                s = out[e] + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = ca * cb
    return out
