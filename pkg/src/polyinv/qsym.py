"""Quasi-symmetric function kernel: M, P and U bases, the shuffle
product, deconcatenation coproduct, antipode, and the M <-> P basis
transitions.

Basis conventions: a P-basis word is a composition (positive parts); a
U-basis word has nonnegative parts and stands for the P word with every
letter shifted up by one.  M is the monomial basis."""

from fractions import Fraction
from functools import lru_cache
from math import factorial

__all__ = [
    "QSymFn",
    "qsym",
    "p_product",
    "p_coproduct",
    "p_antipode",
    "counit",
    "p_to_m",
    "m_to_p",
    "u_shift",
    "u_unshift",
    "render_qsym",
]


class QSymFn:
    """Finitely supported map word -> coefficient, tagged with its basis
    ("M", "P" or "U")."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in ("M", "P", "U"):
            raise ValueError("unknown basis %r" % basis)
        self.basis = basis
        cleaned = {}
        if coeffs:
            low = 0 if basis == "U" else 1
            for w, c in coeffs.items():
                w = tuple(w)
                if any(a < low for a in w):
                    raise ValueError("word %s invalid in basis %s" % (w, basis))
                if c:
                    cleaned[w] = cleaned.get(w, 0) + c
        self.coeffs = {k: v for k, v in cleaned.items() if v}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSymFn):
            return self.basis == other.basis and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __add__(self, other):
        if self.basis != other.basis:
            raise ValueError("basis mismatch: %s vs %s" % (self.basis, other.basis))
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return QSymFn(self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return QSymFn(self.basis)
        return QSymFn(self.basis, {w: c * v for w, v in self.coeffs.items()})

    def coefficient(self, word):
        return self.coeffs.get(tuple(word), 0)

    def __repr__(self):
        return "QSymFn(%s)" % render_qsym(self)


def qsym(basis, word, coeff=1):
    return QSymFn(basis, {tuple(word): coeff})


@lru_cache(maxsize=None)
def _shuffles(a, b):
    """Multiset of shuffles of words a and b, as word -> multiplicity."""
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out = {}
    for w, c in _shuffles(a[1:], b).items():
        k = (a[0],) + w
        out[k] = out.get(k, 0) + c
    for w, c in _shuffles(a, b[1:]).items():
        k = (b[0],) + w
        out[k] = out.get(k, 0) + c
    return out


def _as_p_words(f):
    """Words of f read in the P basis (U words are shifted up)."""
    if f.basis == "P":
        return f.coeffs, False
    if f.basis == "U":
        return {tuple(a + 1 for a in w): c for w, c in f.coeffs.items()}, True
    raise ValueError("no conversion from M basis here")


def p_product(f, g):
    """Shuffle product, bilinear over the P (or U) basis.  The result is
    in the common basis of the operands."""
    fw, fshift = _as_p_words(f)
    gw, gshift = _as_p_words(g)
    out = {}
    for wa, ca in fw.items():
        for wb, cb in gw.items():
            cc = ca * cb
            for w, mult in _shuffles(wa, wb).items():
                out[w] = out.get(w, 0) + cc * mult
    if f.basis == g.basis:
        if f.basis == "U":
            return QSymFn("U", {tuple(a - 1 for a in w): c for w, c in out.items()})
        return QSymFn("P", out)
    return QSymFn("P", out)


def p_coproduct(f):
    """Deconcatenation coproduct; returns a map (word, word) -> coeff in
    the P basis."""
    fw, _ = _as_p_words(f)
    out = {}
    for w, c in fw.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            out[key] = out.get(key, 0) + c
    return out


def p_antipode(f, reverse=False):
    """Antipode P_a -> (-1)^{len(a)} P_a.  With reverse=True the word is
    also reversed, which is the convention under which the antipode axiom
    holds for the deconcatenation coproduct."""
    fw, _ = _as_p_words(f)
    out = {}
    for w, c in fw.items():
        key = tuple(reversed(w)) if reverse else w
        sign = -1 if len(w) % 2 else 1
        out[key] = out.get(key, 0) + sign * c
    result = QSymFn("P", out)
    if f.basis == "U":
        return QSymFn("U", {tuple(a - 1 for a in w): c for w, c in result.coeffs.items()})
    return result


def counit(f):
    return f.coeffs.get((), 0)


def _block_splits(word, r):
    """All ways to cut `word` into r consecutive nonempty blocks."""
    n = len(word)
    if r == 0:
        if n == 0:
            yield ()
        return
    if r > n:
        return

    def rec(start, blocks_left, acc):
        if blocks_left == 1:
            yield acc + (word[start:],)
            return
        for end in range(start + 1, n - blocks_left + 2):
            yield from rec(end, blocks_left - 1, acc + (word[start:end],))

    yield from rec(0, r, ())


def _all_block_splits(word):
    for r in range(1, len(word) + 1):
        yield from _block_splits(word, r)
    if not word:
        yield ()


def p_to_m(f):
    """Expand P-basis elements in the monomial basis M."""
    fw, _ = _as_p_words(f)
    out = {}
    for w, c in fw.items():
        if not w:
            out[()] = out.get((), 0) + c
            continue
        for blocks in _all_block_splits(w):
            word = tuple(sum(b) for b in blocks)
            denom = 1
            for b in blocks:
                denom *= factorial(len(b))
            out[word] = out.get(word, 0) + Fraction(c, 1) / denom
    return QSymFn("M", out)


def m_to_p(f):
    """Expand M-basis elements in the P basis."""
    if f.basis != "M":
        raise ValueError("m_to_p expects the M basis")
    out = {}
    for w, c in f.coeffs.items():
        if not w:
            out[()] = out.get((), 0) + c
            continue
        for blocks in _all_block_splits(w):
            word = tuple(sum(b) for b in blocks)
            sign = -1 if (len(w) - len(blocks)) % 2 else 1
            denom = 1
            for b in blocks:
                denom *= len(b)
            out[word] = out.get(word, 0) + sign * Fraction(c, 1) / denom
    return QSymFn("P", out)


def u_shift(f):
    """U basis -> P basis: add 1 to every letter."""
    if f.basis != "U":
        raise ValueError("u_shift expects the U basis")
    return QSymFn("P", {tuple(a + 1 for a in w): c for w, c in f.coeffs.items()})


def u_unshift(f):
    """P basis -> U basis: subtract 1 from every letter."""
    if f.basis != "P":
        raise ValueError("u_unshift expects the P basis")
    for w in f.coeffs:
        if any(a < 1 for a in w):
            raise ValueError("cannot shift part below 0: %s" % (w,))
    return QSymFn("U", {tuple(a - 1 for a in w): c for w, c in f.coeffs.items()})


def _render_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return "%d/%d" % (c.numerator, c.denominator)
    return str(int(c))


def render_qsym(f):
    """Canonical rendering: terms sorted by word length then lex."""
    if not f.coeffs:
        return "0"
    parts = []
    for w in sorted(f.coeffs, key=lambda w: (len(w), w)):
        c = f.coeffs[w]
        neg = c < 0
        mag = -c if neg else c
        body = "%s[%s]" % (f.basis, ",".join(map(str, w)))
        if mag != 1:
            body = "%s*%s" % (_render_coeff(mag), body)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
