"""Exact core of the interpolated harmonic algebra on words.

Words are noncommutative monomials z_{k1}...z_{kn} in letters indexed by
positive integers; a letter is represented by its subscript.  Formal sums
carry coefficients in Q[t] (:class:`RatPoly`), so one representation covers
the harmonic (stuffle) product, the star variant, and the one-parameter
family of products joining them.

Everything is exact: coefficients are ints or :class:`fractions.Fraction`,
never floats.  Values are immutable once constructed.  The module-level
product caches rely on the GIL's atomic dict operations, so shared use
across threads is safe (at worst a value is computed twice).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cache


def _as_exact(c):
    """Accept ints and Fractions, reject anything inexact."""
    if isinstance(c, (int, Fraction)):
        return c
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class RatPoly:
    """Univariate polynomial in t with exact rational coefficients.

    Stored sparsely as {exponent: coefficient} with no zero values.
    Arithmetic never leaves the exact world; evaluation returns a Fraction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, RatPoly):
            self.coeffs = coeffs.coeffs
            return
        if isinstance(coeffs, (int, Fraction)):
            coeffs = {0: coeffs}
        cleaned = {}
        for e, c in coeffs.items():
            e = int(e)
            if e < 0:
                raise ValueError("negative exponent")
            c = _as_exact(c)
            if c:
                cleaned[e] = c
        self.coeffs = cleaned

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def degree(self):
        """Largest stored exponent; -1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def constant(self):
        """Coefficient of t^0."""
        return self.coeffs.get(0, 0)

    def is_constant(self):
        return self.degree <= 0

    def __add__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return RatPoly(out)

    def __rsub__(self, other):
        return RatPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            return RatPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, RatPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer power required")
        out = RatPoly(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def evaluate(self, alpha):
        """Exact value at t = alpha (alpha an int or Fraction)."""
        alpha = Fraction(_as_exact(alpha))
        return sum((c * alpha**e for e, c in self.coeffs.items()), Fraction(0))

    def derivative(self):
        return RatPoly({e - 1: e * c for e, c in self.coeffs.items() if e > 0})

    def compose(self, inner):
        """Substitute the polynomial `inner` for t (Horner)."""
        inner = RatPoly(inner)
        out = RatPoly(0)
        for e in range(self.degree, -1, -1):
            out = out * inner + RatPoly(self.coeffs.get(e, 0))
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for i, e in enumerate(sorted(self.coeffs)):
            c = self.coeffs[e]
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"RatPoly('{self}')"


#: The indeterminate t.
T = RatPoly({1: 1})


def _check_letter(k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"letter subscript must be a positive integer, got {k!r}")
    return k


class Word:
    """A word z_{k1}...z_{kn}, stored as the tuple of its subscripts.

    The empty word is the unit of all three products.  Words order
    lexicographically by subscript tuple, which fixes the term order used
    for printing and pivot selection.
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = tuple(_check_letter(int(k)) for k in letters)

    @property
    def weight(self):
        return sum(self.letters)

    @property
    def depth(self):
        return len(self.letters)

    def to_index(self):
        return Index(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __lt__(self, other):
        return self.letters < other.letters

    def __le__(self, other):
        return self.letters <= other.letters

    def __str__(self):
        return ",".join(str(k) for k in self.letters)

    def __repr__(self):
        return f"Word('{self}')"


class Index:
    """Exponent tuple (k1,...,kn) of a nested zeta sum.

    Same data as a nonempty word; kept separate because indices carry the
    admissibility question (k1 >= 2) that decides convergence.
    """

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(k) for k in parts)
        if not parts:
            raise ValueError("index must be nonempty")
        for k in parts:
            _check_letter(k)
        self.parts = parts

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def depth(self):
        return len(self.parts)

    @property
    def admissible(self):
        return self.parts[0] >= 2

    def to_word(self):
        return Word(self.parts)

    def __eq__(self, other):
        return isinstance(other, Index) and self.parts == other.parts

    def __hash__(self):
        return hash(("Index", self.parts))

    def __lt__(self, other):
        return self.parts < other.parts

    def __str__(self):
        return ",".join(str(k) for k in self.parts)

    def __repr__(self):
        return f"Index('{self}')"


class FormalSum:
    """Finite Q[t]-linear combination of words, kept in normal form.

    Normal form means: no stored zero coefficients, each word at most once.
    Addition, subtraction and scalar multiplication (by ints, Fractions or
    polynomials) are the only overloaded operators; the algebra products
    live in module functions since there are three of them.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            if not isinstance(w, Word):
                raise TypeError("FormalSum keys must be Words")
            p = c if isinstance(c, RatPoly) else RatPoly(c)
            if w in acc:
                p = acc[w] + p
            acc[w] = p
        self.terms = {w: p for w, p in acc.items() if not p.is_zero()}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls):
        return cls({Word(): RatPoly(1)})

    @classmethod
    def from_word(cls, word, coeff=1):
        if not isinstance(word, Word):
            word = Word(word)
        return cls({word: coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def words(self):
        return self.terms.keys()

    def coefficient(self, word):
        return self.terms.get(word, RatPoly(0))

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self.terms)
        for w, p in other.terms.items():
            q = out.get(w)
            out[w] = p if q is None else q + p
        return FormalSum(out)

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self.terms)
        for w, p in other.terms.items():
            q = out.get(w)
            out[w] = -p if q is None else q - p
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({w: -p for w, p in self.terms.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction, RatPoly)):
            return NotImplemented
        return FormalSum({w: p * scalar for w, p in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((w, p) for w, p in self.terms.items()))

    def is_t_free(self):
        return all(p.is_constant() for p in self.terms.values())

    def map_coefficients(self, f):
        """Apply f to every coefficient polynomial; drops resulting zeros."""
        return FormalSum({w: f(p) for w, p in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[w]})*[{w}]" for w in sorted(self.terms))

    def __repr__(self):
        return f"FormalSum('{self}')"


def as_sum(x):
    """Coerce a Word into the corresponding one-term FormalSum."""
    if isinstance(x, FormalSum):
        return x
    if isinstance(x, Word):
        return FormalSum.from_word(x)
    raise TypeError(f"expected Word or FormalSum, got {type(x).__name__}")


def word_linear(f, e):
    """Extend a word-level map f: Word -> FormalSum linearly over e."""
    out = {}
    for w, c in as_sum(e).terms.items():
        for u, d in f(w).terms.items():
            p = c * d
            q = out.get(u)
            out[u] = p if q is None else q + p
    return FormalSum(out)


def substitute_t(e, alpha):
    """Evaluate every coefficient of e at t = alpha (exact rational)."""
    alpha = _as_exact(alpha)
    return as_sum(e).map_coefficients(lambda p: RatPoly(p.evaluate(alpha)))


def circle(a, b):
    """Circle product of two letters: subscripts add."""
    return _check_letter(a) + _check_letter(b)


def circle_act(a, e):
    """Act by the letter a on a formal sum: a acts as zero on the unit
    word and merges into the first letter otherwise."""
    _check_letter(a)
    out = {}
    for w, c in as_sum(e).terms.items():
        if not w.letters:
            continue
        u = Word((a + w.letters[0],) + w.letters[1:])
        q = out.get(u)
        out[u] = c if q is None else q + c
    return FormalSum(out)


def _prepend(a, e):
    """Left-multiply a formal sum by the single letter a."""
    return FormalSum({Word((a,) + w.letters): c for w, c in e.terms.items()})


_ONE_MINUS_2T = RatPoly({0: 1, 1: -2})
_T2_MINUS_T = RatPoly({1: -1, 2: 1})


@cache
def _harmonic_ww(w1: Word, w2: Word) -> FormalSum:
    if not w1.letters:
        return FormalSum.from_word(w2)
    if not w2.letters:
        return FormalSum.from_word(w1)
    a, u = w1.letters[0], Word(w1.letters[1:])
    b, v = w2.letters[0], Word(w2.letters[1:])
    return (
        _prepend(a, _harmonic_ww(u, w2))
        + _prepend(b, _harmonic_ww(w1, v))
        + _prepend(a + b, _harmonic_ww(u, v))
    )


@cache
def _star_ww(w1: Word, w2: Word) -> FormalSum:
    if not w1.letters:
        return FormalSum.from_word(w2)
    if not w2.letters:
        return FormalSum.from_word(w1)
    a, u = w1.letters[0], Word(w1.letters[1:])
    b, v = w2.letters[0], Word(w2.letters[1:])
    return (
        _prepend(a, _star_ww(u, w2))
        + _prepend(b, _star_ww(w1, v))
        - _prepend(a + b, _star_ww(u, v))
    )


@cache
def _t_harmonic_ww(w1: Word, w2: Word) -> FormalSum:
    if not w1.letters:
        return FormalSum.from_word(w2)
    if not w2.letters:
        return FormalSum.from_word(w1)
    a, u = w1.letters[0], Word(w1.letters[1:])
    b, v = w2.letters[0], Word(w2.letters[1:])
    inner = _t_harmonic_ww(u, v)
    return (
        _prepend(a, _t_harmonic_ww(u, w2))
        + _prepend(b, _t_harmonic_ww(w1, v))
        + _ONE_MINUS_2T * _prepend(a + b, inner)
        + _T2_MINUS_T * circle_act(a + b, inner)
    )


def _bilinear(word_product, e1, e2):
    out = {}
    for w1, c1 in as_sum(e1).terms.items():
        for w2, c2 in as_sum(e2).terms.items():
            c12 = c1 * c2
            for w, c in word_product(w1, w2).terms.items():
                p = c12 * c
                q = out.get(w)
                out[w] = p if q is None else q + p
    return FormalSum(out)


def harmonic_product(e1, e2):
    """Quasi-shuffle (stuffle) product: overlapping letters merge with +."""
    return _bilinear(_harmonic_ww, e1, e2)


def star_product(e1, e2):
    """Star variant of the quasi-shuffle: overlaps merge with weight -1."""
    return _bilinear(_star_ww, e1, e2)


def t_harmonic_product(e1, e2):
    """One-parameter product interpolating between the harmonic product
    (t = 0) and the star product (t = 1); coefficients live in Q[t]."""
    return _bilinear(_t_harmonic_ww, e1, e2)


# ---------------------------------------------------------------------------
# text round-trip

def parse_word(text):
    s = text.strip()
    if not s:
        return Word()
    try:
        return Word(int(p) for p in s.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed word {text!r}: {exc}") from None


def parse_index(text):
    s = text.strip()
    if not s:
        raise ValueError("index must be nonempty")
    try:
        return Index(int(p) for p in s.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed index {text!r}: {exc}") from None


_POLY_TERM_RE = re.compile(
    r"^(?:(?P<c>\d+(?:/\d+)?)\*?)?(?:(?P<t>t)(?:\^(?P<e>\d+))?)?$"
)


def parse_ratpoly(text):
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    tokens = re.split(r"\s*([+-])\s*", s)
    if tokens[0] == "":
        tokens = tokens[1:]  # leading sign
    else:
        tokens = ["+"] + tokens
    if len(tokens) % 2 != 0:
        raise ValueError(f"malformed polynomial {text!r}")
    coeffs = {}
    for sign_tok, term in zip(tokens[0::2], tokens[1::2]):
        if sign_tok not in ("+", "-"):
            raise ValueError(f"malformed polynomial {text!r}")
        m = _POLY_TERM_RE.match(term)
        if not m or (m["c"] is None and m["t"] is None):
            raise ValueError(f"malformed polynomial term {term!r}")
        c = Fraction(m["c"]) if m["c"] is not None else Fraction(1)
        e = 0 if m["t"] is None else (int(m["e"]) if m["e"] else 1)
        sign = -1 if sign_tok == "-" else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
    return RatPoly(coeffs)


_SUM_TERM_RE = re.compile(r"\(([^()]*)\)\*\[([0-9, ]*)\]")


def parse_formal_sum(text):
    s = text.strip()
    if s == "0":
        return FormalSum.zero()
    # polynomials may themselves contain " + ", so match terms left to
    # right and insist the whole string is covered
    out = []
    pos = 0
    while pos < len(s):
        m = _SUM_TERM_RE.match(s, pos)
        if not m:
            raise ValueError(f"malformed formal sum near {s[pos:]!r}")
        out.append((parse_word(m.group(2)), parse_ratpoly(m.group(1))))
        pos = m.end()
        if pos < len(s):
            if not s.startswith(" + ", pos):
                raise ValueError(f"malformed formal sum near {s[pos:]!r}")
            pos += 3
    return FormalSum(out)
