# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled blade-product kernel.

Same contract as ``kahlerkit._core_py``; see that module for the encoding.
Masks fit in 6 bits (at most 64 basis blades), so accumulation uses a
fixed dense scratch table.
"""

BACKEND = "cython"

cdef inline int _popcount(unsigned int x):
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _reorder_sign(unsigned int a, unsigned int b):
    cdef int swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def reorder_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation of blades ``a`` and ``b``."""
    return _reorder_sign(a, b)


def blade_product(a: int, b: int, diag: tuple) -> tuple:
    """Product of two basis blades under a diagonal signature."""
    cdef unsigned int ua = a, ub = b, common
    cdef int factor = _reorder_sign(ua, ub)
    cdef int k
    common = ua & ub
    while common:
        k = (common & (~common + 1)).bit_length() - 1
        factor *= <int> diag[k]
        if factor == 0:
            return (ua ^ ub, 0)
        common &= common - 1
    return (ua ^ ub, factor)


def mul_terms(terms_a, terms_b, diag: tuple) -> dict:
    """Geometric product of two sparse term lists ``[(mask, coeff), ...]``."""
    cdef int n = len(diag)
    cdef int size = 1 << n
    cdef int dsig[6]
    cdef double acc_re[64]
    cdef double acc_im[64]
    cdef bint used[64]
    cdef int i, k, factor
    cdef unsigned int ma, mb, m, common
    cdef double complex ca, cb, contrib

    if n > 6:
        raise ValueError("kernel supports at most 6 generators")
    for i in range(n):
        dsig[i] = diag[i]
    for i in range(size):
        acc_re[i] = 0.0
        acc_im[i] = 0.0
        used[i] = False

    for ta in terms_a:
        ma = ta[0]
        ca = ta[1]
        for tb in terms_b:
            mb = tb[0]
            cb = tb[1]
            factor = _reorder_sign(ma, mb)
            common = ma & mb
            while common and factor:
                k = 0
                while not (common >> k) & 1:
                    k += 1
                factor *= dsig[k]
                common &= common - 1
            if factor:
                m = ma ^ mb
                contrib = factor * ca * cb
                acc_re[m] += contrib.real
                acc_im[m] += contrib.imag
                used[m] = True

    out = {}
    for i in range(size):
        if used[i] and (acc_re[i] != 0.0 or acc_im[i] != 0.0):
            out[i] = complex(acc_re[i], acc_im[i])
    return out
