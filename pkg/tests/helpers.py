"""Independent oracles and enumeration helpers shared by the test modules.

Everything here is deliberately written against raw tuples and dicts, not
the package's own FormalSum/RatPoly layers, so that a bug in the symbolic
machinery cannot hide inside its own oracle.
"""

from fractions import Fraction
from itertools import combinations

from izeta.algebra import FormalSum, RatPoly, Word


def compositions(total):
    """All compositions of `total` into positive parts, as tuples."""
    if total == 0:
        return [()]
    out = []
    for cuts in range(total):
        for cut_set in combinations(range(1, total), cuts):
            marks = (0,) + cut_set + (total,)
            out.append(tuple(marks[i + 1] - marks[i] for i in range(len(marks) - 1)))
    return out


def words_up_to_weight(max_weight, max_length=None):
    """All nonempty words with weight <= max_weight (optionally capped length)."""
    out = []
    for w in range(1, max_weight + 1):
        for parts in compositions(w):
            if max_length is None or len(parts) <= max_length:
                out.append(Word(parts))
    return out


def admissible_tuples(max_weight):
    """All admissible index tuples (first part >= 2) of weight <= max_weight."""
    return [p for w in words_up_to_weight(max_weight) for p in [w.letters] if p[0] >= 2]


def quasi_shuffle(u, v, merge_sign):
    """Reference quasi-shuffle of two letter tuples over plain dicts.

    merge_sign +1 gives the overlapping-shuffle (harmonic) product,
    -1 the non-strict variant.  Returns {letter tuple: int multiplicity}.
    """
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out = {}

    def add(word, mult):
        out[word] = out.get(word, 0) + mult
        if out[word] == 0:
            del out[word]

    for word, mult in quasi_shuffle(u[1:], v, merge_sign).items():
        add((u[0],) + word, mult)
    for word, mult in quasi_shuffle(u, v[1:], merge_sign).items():
        add((v[0],) + word, mult)
    for word, mult in quasi_shuffle(u[1:], v[1:], merge_sign).items():
        add((u[0] + v[0],) + word, merge_sign * mult)
    return out


def dict_to_sum(d):
    """Lift a {letter tuple: multiplicity} dict into a FormalSum."""
    total = FormalSum.zero()
    for letters, mult in d.items():
        total = total + FormalSum.from_word(Word(letters), RatPoly({0: mult}))
    return total


def interpolation_by_recursion(letters):
    """Reference contraction expansion via the head recursion.

    S(a w) = a S(w) + t * (a merged into the head of S(w)), computed on
    plain {letter tuple: {t exponent: Fraction}} dicts.
    """
    if not letters:
        return {(): {0: Fraction(1)}}
    a, rest = letters[0], letters[1:]
    inner = interpolation_by_recursion(rest)
    out = {}

    def add(word, exp, coeff):
        poly = out.setdefault(word, {})
        poly[exp] = poly.get(exp, Fraction(0)) + coeff
        if poly[exp] == 0:
            del poly[exp]
        if not poly:
            del out[word]

    for word, poly in inner.items():
        for exp, coeff in poly.items():
            add((a,) + word, exp, coeff)
            if word:
                add((a + word[0],) + word[1:], exp + 1, coeff)
    return out


def dictpoly_to_sum(d):
    """Lift a {letter tuple: {exponent: Fraction}} dict into a FormalSum."""
    total = FormalSum.zero()
    for letters, poly in d.items():
        total = total + FormalSum.from_word(Word(letters), RatPoly(poly))
    return total


def brute_nested_sum(parts, m_max, strict):
    """Direct recursive truncated nested sum, no layering, no compensation."""
    if not parts:
        return 1.0
    k, rest = parts[0], parts[1:]
    total = 0.0
    for m in range(1, m_max + 1):
        inner_cap = m - 1 if strict else m
        if strict and inner_cap < len(rest):
            continue
        total += m ** (-float(k)) * brute_nested_sum(rest, inner_cap, strict)
    return total


def star_fillings(parts):
    """All ways to replace the separators of an index by merges.

    Each binary choice either keeps a comma or adds the neighbors, and the
    number of merges taken is returned alongside the filled tuple.
    """
    if len(parts) == 1:
        return [(tuple(parts), 0)]
    head = parts[0]
    out = []
    for tail, merges in star_fillings(parts[1:]):
        out.append(((head,) + tail, merges))
        out.append(((head + tail[0],) + tail[1:], merges + 1))
    return out
