# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled truncated-sum kernel; see `_kernel_py` for the reference
implementation.  Same layer order, same summation order, same Kahan
compensation, so the two agree to the last bits libm allows."""

from libc.math cimport pow
from libc.stdlib cimport free, malloc


def nested_sum_checkpoints(exponents, long m_max, bint strict):
    """Truncated nested power sum; see the pure twin for the contract."""
    ks = tuple(int(k) for k in exponents)
    if not ks:
        raise ValueError("empty exponent tuple")
    if any(k < 1 for k in ks):
        raise ValueError("exponents must be positive")
    if m_max < 1:
        raise ValueError("truncation point must be positive")

    cdef Py_ssize_t n = len(ks)
    cdef Py_ssize_t size = m_max + 1
    cdef double* prev = <double*> malloc(size * sizeof(double))
    cdef double* cur = <double*> malloc(size * sizeof(double))
    cdef long* kvec = <long*> malloc(n * sizeof(long))
    if prev == NULL or cur == NULL or kvec == NULL:
        free(prev)
        free(cur)
        free(kvec)
        raise MemoryError()

    cdef Py_ssize_t i, layer
    cdef long j, k
    cdef double term, y, tmp, s, comp
    cdef double* swap
    cdef double v_full, v_half, v_quarter

    try:
        for i in range(n):
            kvec[i] = ks[i]
        for j in range(m_max + 1):
            prev[j] = 1.0  # empty tail product
        for layer in range(n - 1, -1, -1):
            k = kvec[layer]
            cur[0] = 0.0
            s = 0.0
            comp = 0.0
            if strict:
                for j in range(1, m_max + 1):
                    term = pow(1.0 / j, k) * prev[j - 1]
                    y = term - comp
                    tmp = s + y
                    comp = (tmp - s) - y
                    s = tmp
                    cur[j] = s
            else:
                for j in range(1, m_max + 1):
                    term = pow(1.0 / j, k) * prev[j]
                    y = term - comp
                    tmp = s + y
                    comp = (tmp - s) - y
                    s = tmp
                    cur[j] = s
            swap = prev
            prev = cur
            cur = swap
        v_full = prev[m_max]
        v_half = prev[m_max // 2]
        v_quarter = prev[m_max // 4]
    finally:
        free(prev)
        free(cur)
        free(kvec)
    return v_full, v_half, v_quarter
