"""The interpolation operator on the word algebra.

The operator acts on a word of length n by summing, over all ways of
contracting adjacent letters into blocks, the contracted word weighted by
t^(number of merges).  At t = 0 it is the identity; at t = 1 it sends the
generating series of strict nested sums to that of non-strict ones.  All
routines here are Q[t]-linear in their formal-sum argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .algebra import (
    FormalSum,
    Index,
    RatPoly,
    T,
    Word,
    as_sum,
    substitute_t,
)


@dataclass(frozen=True)
class Contraction:
    """A contraction pattern of a length-n word.

    `marks` are the block boundaries 0 = r0 < r1 < ... < rs = n; letters
    between consecutive marks merge into one block by adding subscripts.
    `sigma` counts the merges, n - s.
    """

    marks: tuple[int, ...]
    sigma: int

    def __post_init__(self):
        m = self.marks
        if not m or m[0] != 0 or any(a >= b for a, b in zip(m, m[1:])):
            raise ValueError(f"invalid contraction marks {m!r}")
        if self.sigma != m[-1] - (len(m) - 1):
            raise ValueError("sigma inconsistent with marks")


def enumerate_contractions(w):
    """All 2^(n-1) contractions of a nonempty word, with their images.

    Deterministic order: ascending over the bitmask of merged gaps, the
    gap after the first letter being the most significant bit.
    """
    n = w.depth
    if n == 0:
        raise ValueError("unit has no contractions")
    letters = w.letters
    out = []
    for mask in range(1 << (n - 1)):
        marks = [0]
        for gap in range(1, n):
            if not (mask >> (n - 1 - gap)) & 1:
                marks.append(gap)
        marks.append(n)
        blocks = tuple(
            sum(letters[marks[i] : marks[i + 1]]) for i in range(len(marks) - 1)
        )
        out.append((Contraction(tuple(marks), n - len(blocks)), Word(blocks)))
    return out


@cache
def _s_t_word(w: Word) -> FormalSum:
    if w.depth == 0:
        return FormalSum.unit()
    acc = {}
    for con, u in enumerate_contractions(w):
        p = RatPoly({con.sigma: 1})
        q = acc.get(u)
        acc[u] = p if q is None else q + p
    return FormalSum(acc)


def s_poly(e, param):
    """Apply the operator with its parameter replaced by the polynomial
    `param`; Q[t]-linear, so existing coefficients are left alone."""
    param = RatPoly(param)
    powers = {0: RatPoly(1)}

    def ppow(n):
        if n not in powers:
            powers[n] = ppow(n - 1) * param
        return powers[n]

    out = {}
    for w, c in as_sum(e).terms.items():
        for u, mono in _s_t_word(w).terms.items():
            # coefficients of the word-level expansion are monomials
            # m * t^sigma; replace t^sigma by param^sigma
            for sig, m in mono.coeffs.items():
                p = c * (ppow(sig) * m)
                q = out.get(u)
                out[u] = p if q is None else q + p
    return FormalSum(out)


def s_t(e):
    """The interpolation operator itself (parameter t)."""
    return s_poly(e, T)


def s_alpha(e, alpha):
    """The operator at an exact rational parameter value: s_t followed by
    substitution of alpha for t everywhere."""
    return substitute_t(s_t(e), alpha)


@cache
def log_s(w: Word) -> FormalSum:
    """Logarithm of the operator family, normalized at parameter 1: the
    sum of all single-merge contractions of w.  Zero on letters."""
    if w.depth == 0:
        raise ValueError("unit has no contractions")
    acc = {}
    for con, u in enumerate_contractions(w):
        if con.sigma != 1:
            continue
        q = acc.get(u)
        acc[u] = RatPoly(1) if q is None else q + 1
    return FormalSum(acc)


def d_dt(e):
    """Coefficient-wise d/dt."""
    return as_sum(e).map_coefficients(lambda p: p.derivative())


def taylor_shift(e, alpha):
    """Coefficients of e as a polynomial in (t - alpha).

    Returns the finite list a_0, a_1, ... of t-free formal sums with
    a_k = (d/dt)^k e |_{t=alpha} / k!.
    """
    out = []
    cur = as_sum(e)
    k = 0
    fact = 1
    while True:
        out.append(substitute_t(cur, alpha) * Fraction(1, fact))
        cur = d_dt(cur)
        if cur.is_zero():
            break
        k += 1
        fact *= k
    return out


def index_expansions(idx):
    """All ways of merging adjacent entries of an index, as (Index, merges).

    This is the expansion underlying the interpolated zeta values: each
    gap of the index is either kept (comma) or summed through (plus).
    """
    parts = idx.parts
    n = idx.depth
    for mask in range(1 << (n - 1)):
        merged = [parts[0]]
        for gap in range(1, n):
            if (mask >> (n - 1 - gap)) & 1:
                merged[-1] += parts[gap]
            else:
                merged.append(parts[gap])
        yield Index(merged), n - len(merged)


def zeta_t_words(idx):
    """The interpolated zeta value of `idx` written out as a formal sum:
    every merge pattern of the index, weighted by t^merges."""
    acc = {}
    for sub, sigma in index_expansions(idx):
        w = sub.to_word()
        p = RatPoly({sigma: 1})
        q = acc.get(w)
        acc[w] = p if q is None else q + p
    return FormalSum(acc)
