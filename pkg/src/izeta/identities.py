"""Builders for the identity families tied to the interpolation operator:
fixed-weight sum families, cyclic generators, the alternating sum, and the
half-parameter translation between star values and odd-letter words."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb

from .algebra import (
    FormalSum,
    Index,
    RatPoly,
    T,
    Word,
    as_sum,
    harmonic_product,
    substitute_t,
    t_harmonic_product,
    word_linear,
)
from .interpolate import s_poly, s_t


def words_of_weight(k):
    """All 2^(k-1) words of weight k, ascending in the split bitmask."""
    if k < 1:
        raise ValueError("weight must be positive")
    out = []
    for mask in range(1 << (k - 1)):
        parts = []
        cur = 1
        for i in range(k - 1):
            if (mask >> i) & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(Word(parts))
    return out


def _compositions(total, parts):
    """Compositions of `total` into `parts` entries, each >= 1."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        comp = []
        for c in cuts:
            comp.append(c - prev)
            prev = c
        comp.append(total - prev)
        yield tuple(comp)


def sum_words(k, n):
    """Sum of all admissible words of weight k and depth n (coefficient 1
    each); there are C(k-2, n-1) of them.  Enumerated in colexicographic
    order of the exponent tuples."""
    if n < 1 or k <= n:
        raise ValueError(f"empty family: weight {k}, depth {n}")
    comps = []
    for first in range(2, k - n + 2):
        for rest in _compositions(k - first, n - 1):
            comps.append((first,) + rest)
    comps.sort(key=lambda c: c[::-1])
    return FormalSum((Word(c), 1) for c in comps)


def sum_poly(k, n):
    """Weight-k depth-n interpolation polynomial: sum over j < n of
    C(k-1, j) t^j (1-t)^(n-1-j), expanded exactly."""
    if n < 1 or k <= n:
        raise ValueError(f"empty family: weight {k}, depth {n}")
    one_minus_t = RatPoly({0: 1, 1: -1})
    out = RatPoly(0)
    for j in range(n):
        out = out + comb(k - 1, j) * (T**j) * (one_minus_t ** (n - 1 - j))
    return out


def _rotation(parts, l):
    """Rotation of an exponent tuple starting at position l (0-based)."""
    return parts[l:] + parts[:l]


def cyclic_C(w):
    """Sum over rotations of w with the leading exponent raised by one."""
    parts = w.letters
    if not parts:
        raise ValueError("cyclic operators need a nonempty word")
    out = {}
    for l in range(len(parts)):
        rot = _rotation(parts, l)
        u = Word((rot[0] + 1,) + rot[1:])
        q = out.get(u)
        out[u] = RatPoly(1) if q is None else q + 1
    return FormalSum(out)


def cyclic_Sigma(w):
    """Sum over rotations and over splittings of the rotated head: the
    head k becomes k+1-j in front and a trailing letter j, 1 <= j < k."""
    parts = w.letters
    if not parts:
        raise ValueError("cyclic operators need a nonempty word")
    out = {}
    for l in range(len(parts)):
        rot = _rotation(parts, l)
        head = rot[0]
        for j in range(1, head):
            u = Word((head + 1 - j,) + rot[1:] + (j,))
            q = out.get(u)
            out[u] = RatPoly(1) if q is None else q + 1
    return FormalSum(out)


def cyclic_delta(w):
    """Sum over cyclic merges of two adjacent exponents (cyclically), the
    merged entry leading.  Defined for words of length >= 2."""
    parts = w.letters
    if len(parts) < 2:
        raise ValueError("delta undefined for words of length < 2")
    n = len(parts)
    out = {}
    for l in range(n):
        rot = _rotation(parts, l)
        u = Word((rot[0] + rot[1],) + rot[2:])
        q = out.get(u)
        out[u] = RatPoly(1) if q is None else q + 1
    return FormalSum(out)


def csf_generator(w):
    """The t-polynomial combination of cyclic sums whose vanishing under
    evaluation expresses the cyclic relation for w: the split side plus
    (t-1) times the rotation side minus (weight) t^depth z_{weight+1}.

    Defined for words whose weight exceeds their depth (otherwise the
    split side is empty)."""
    k = w.weight
    n = w.depth
    if n == 0 or k <= n:
        raise ValueError(f"excluded by n < k: word {w!r}")
    zk1 = FormalSum.from_word(Word((k + 1,)))
    return (
        s_t(cyclic_Sigma(w))
        + (T - 1) * s_t(cyclic_C(w))
        - (k * T**n) * zk1
    )


def csf_generator_linear(e):
    """csf_generator extended linearly over a formal sum of words."""
    return word_linear(csf_generator, as_sum(e))


def alt_sum(letters):
    """Alternating sum over cut points of the sequence a_1..a_n of
    (operator at t on the prefix) * (operator at 1-t on the reversed
    suffix); identically zero as a formal sum over Q[t]."""
    letters = tuple(int(a) for a in letters)
    if not letters:
        raise ValueError("letter sequence must be nonempty")
    n = len(letters)
    one_minus_t = RatPoly({0: 1, 1: -1})
    total = FormalSum.zero()
    for cut in range(n + 1):
        prefix = FormalSum.from_word(Word(letters[:cut]))
        suffix_rev = FormalSum.from_word(Word(letters[cut:][::-1]))
        term = harmonic_product(s_t(prefix), s_poly(suffix_rev, one_minus_t))
        total = total + term * ((-1) ** cut)
    return total


def two_one_lhs_index(j):
    """Index ({2}^j1, 1, {2}^j2, 1, ..., {2}^jn, 1).  Admissibility of the
    star value requires j1 >= 1."""
    js = tuple(int(x) for x in j)
    if not js:
        raise ValueError("need at least one block")
    if any(x < 0 for x in js):
        raise ValueError("block sizes must be nonnegative")
    if js[0] < 1:
        raise ValueError("non-admissible star index: leading block empty")
    parts = []
    for x in js:
        parts.extend([2] * x)
        parts.append(1)
    return Index(parts)


def two_one_rhs_word(j):
    """Word (2*j1+1, ..., 2*jn+1) together with the scale 2^n."""
    js = tuple(int(x) for x in j)
    if not js:
        raise ValueError("need at least one block")
    if any(x < 0 for x in js):
        raise ValueError("block sizes must be nonnegative")
    return Word(2 * x + 1 for x in js), Fraction(2) ** len(js)


def _y_circle_act(c, terms):
    """Index-addition action on odd-letter words written in y-coordinates
    (y_p has z-subscript 2p+1): y_c merges into the first y-letter."""
    out = {}
    for w, coef in terms.items():
        if not w:
            continue
        u = (c + w[0],) + w[1:]
        out[u] = out.get(u, 0) + coef
    return out


@cache
def _y_product(yu: tuple, yv: tuple) -> tuple:
    """Recursive product on y-words mirroring the half-parameter product
    on the odd-letter subalgebra.  Returns sorted ((word, coeff), ...)."""
    if not yu:
        return ((yv, Fraction(1)),)
    if not yv:
        return ((yu, Fraction(1)),)
    i, u = yu[0], yu[1:]
    j, v = yv[0], yv[1:]
    acc = {}
    for w, c in _y_product(u, yv):
        key = (i,) + w
        acc[key] = acc.get(key, 0) + c
    for w, c in _y_product(yu, v):
        key = (j,) + w
        acc[key] = acc.get(key, 0) + c
    inner = dict(_y_product(u, v))
    for key, c in _y_circle_act(i + j + 1, inner).items():
        acc[key] = acc.get(key, 0) - c
    return tuple(sorted((w, c) for w, c in acc.items() if c))


def odd_product_check(u, v):
    """Check, for two words over odd subscripts, that the half-parameter
    product computed in the z-letters agrees with the y-word recursion
    (y_j standing for twice z_{2j+1}, circle acting by index addition)."""
    for w in (u, v):
        if any(a % 2 == 0 for a in w.letters):
            raise ValueError(f"outside odd subalgebra: {w!r}")
    half = Fraction(1, 2)
    direct = substitute_t(t_harmonic_product(as_sum(u), as_sum(v)), half)
    scale = Fraction(2) ** (u.depth + v.depth)
    in_y = {}
    for w, c in direct.terms.items():
        if any(a % 2 == 0 for a in w.letters):
            return False  # escaped the odd subalgebra
        yw = tuple((a - 1) // 2 for a in w.letters)
        coef = c.constant() * scale / Fraction(2) ** w.depth
        in_y[yw] = in_y.get(yw, 0) + coef
    in_y = {w: c for w, c in in_y.items() if c}
    yu = tuple((a - 1) // 2 for a in u.letters)
    yv = tuple((a - 1) // 2 for a in v.letters)
    recursed = dict(_y_product(yu, yv))
    return in_y == recursed
