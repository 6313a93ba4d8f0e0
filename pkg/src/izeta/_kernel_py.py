"""Pure-Python twin of the compiled truncated-sum kernel.

Must mirror `_kernel.pyx` operation for operation: layers are summed
innermost-first, ascending in the summation variable, with Kahan
compensation, so both implementations produce the same values up to
(at most) last-bit differences in libm.
"""

from __future__ import annotations


def nested_sum_checkpoints(exponents, m_max, strict):
    """Truncated nested power sum of a composition, with checkpoints.

    Sums prod(m_i^-k_i) over chains M >= m_1 > m_2 > ... > m_n >= 1
    (strict) or m_1 >= ... >= m_n >= 1 (non-strict), truncated at
    m_1 <= m_max.  Returns the outer partial sums at m_max, m_max//2 and
    m_max//4, which the caller feeds into extrapolation.
    """
    ks = tuple(int(k) for k in exponents)
    if not ks:
        raise ValueError("empty exponent tuple")
    if any(k < 1 for k in ks):
        raise ValueError("exponents must be positive")
    if m_max < 1:
        raise ValueError("truncation point must be positive")

    # G_{n+1} == 1 (empty tail product), including at m = 0
    prev = [1.0] * (m_max + 1)
    for layer in range(len(ks) - 1, -1, -1):
        k = ks[layer]
        cur = [0.0] * (m_max + 1)
        s = 0.0
        comp = 0.0
        if strict:
            for j in range(1, m_max + 1):
                term = (1.0 / j) ** k * prev[j - 1]
                y = term - comp
                tmp = s + y
                comp = (tmp - s) - y
                s = tmp
                cur[j] = s
        else:
            for j in range(1, m_max + 1):
                term = (1.0 / j) ** k * prev[j]
                y = term - comp
                tmp = s + y
                comp = (tmp - s) - y
                s = tmp
                cur[j] = s
        prev = cur
    return prev[m_max], prev[m_max // 2], prev[m_max // 4]
