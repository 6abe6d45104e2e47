"""Exact symmetric-function arithmetic in the Schur basis.

Symmetric functions are stored as sparse maps from partitions (weakly
decreasing tuples of positive ints) to exact coefficients (int or
Fraction).  Every product is truncated at an explicit degree bound so
that powers of the complete homogeneous series sigma = 1 + s_1 + s_2 + ...
stay finite.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import inf

Partition = tuple

__all__ = [
    "SymFn",
    "s",
    "sym_one",
    "sym_zero",
    "mul_h",
    "mul_e",
    "mul",
    "sigma_pow",
    "theta",
    "partition_sort_key",
    "render_sym",
]


def _is_partition(lam):
    return all(a >= 1 for a in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


class SymFn:
    """Finitely supported map Partition -> coefficient, with an optional
    degree bound meaning "terms of higher degree were truncated away"."""

    __slots__ = ("coeffs", "degree_bound")

    def __init__(self, coeffs=None, degree_bound=None):
        cleaned = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = tuple(lam)
                assert _is_partition(lam), lam
                if degree_bound is not None and sum(lam) > degree_bound:
                    continue
                if c:
                    cleaned[lam] = cleaned.get(lam, 0) + c
        self.coeffs = {k: v for k, v in cleaned.items() if v}
        self.degree_bound = degree_bound

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SymFn):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        bound = _min_bound(self.degree_bound, other.degree_bound)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFn(out, bound)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        if not c:
            return SymFn({}, self.degree_bound)
        return SymFn({lam: c * v for lam, v in self.coeffs.items()}, self.degree_bound)

    def truncate(self, bound):
        """Drop all terms of degree > bound and record the bound."""
        b = _min_bound(self.degree_bound, bound)
        return SymFn({lam: c for lam, c in self.coeffs.items() if sum(lam) <= bound}, b)

    def degree(self):
        return max((sum(lam) for lam in self.coeffs), default=0)

    def coefficient(self, lam):
        return self.coeffs.get(tuple(lam), 0)

    def is_integral(self):
        return all(
            not isinstance(c, Fraction) or c.denominator == 1
            for c in self.coeffs.values()
        )

    def __repr__(self):
        return "SymFn(%s)" % render_sym(self)


def _min_bound(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def sym_zero(degree_bound=None):
    return SymFn({}, degree_bound)


def sym_one(degree_bound=None):
    return SymFn({(): 1}, degree_bound)


def s(*parts, degree_bound=None):
    """The Schur function s_lambda."""
    return SymFn({tuple(parts): 1}, degree_bound)


@lru_cache(maxsize=None)
def horizontal_strips(lam, k):
    """All partitions mu obtained from lam by adding a horizontal k-strip."""
    lam = tuple(lam)
    results = []

    def rec(i, remaining, prefix):
        if i == len(lam):
            # a new final row of length `remaining`, bounded by the last row
            if remaining == 0:
                results.append(tuple(prefix))
            elif remaining <= (lam[-1] if lam else inf) and (
                not prefix or remaining <= prefix[-1]
            ):
                results.append(tuple(prefix) + (remaining,))
            return
        lo = lam[i]
        hi = lam[i - 1] if i > 0 else lam[i] + remaining
        if prefix:
            hi = min(hi, prefix[-1])
        for new in range(lo, min(hi, lo + remaining) + 1):
            rec(i + 1, remaining - (new - lo), prefix + [new])

    if not lam:
        return [()] if k == 0 else [(k,)]
    rec(0, k, [])
    return results


@lru_cache(maxsize=None)
def vertical_strips(lam, k):
    """All partitions mu obtained from lam by adding a vertical k-strip."""
    lam = tuple(lam)
    rows = len(lam)
    results = []

    def rec(i, remaining, prefix):
        if remaining < 0:
            return
        if i == rows:
            # trailing new rows of length 1
            mu = tuple(prefix) + (1,) * remaining
            if remaining == 0 or not prefix or prefix[-1] >= 1:
                results.append(mu)
            return
        for add in (0, 1):
            new = lam[i] + add
            if prefix and new > prefix[-1]:
                continue
            rec(i + 1, remaining - add, prefix + [new])

    rec(0, k, [])
    return [mu for mu in results if _is_partition(mu)]


def mul_h(f, k, bound=None):
    """Multiply by the complete homogeneous h_k = s_k (Pieri rule)."""
    assert k >= 0
    bound = _min_bound(bound, f.degree_bound)
    out = {}
    for lam, c in f.coeffs.items():
        if bound is not None and sum(lam) + k > bound:
            continue
        for mu in horizontal_strips(lam, k):
            out[mu] = out.get(mu, 0) + c
    return SymFn(out, bound)


def mul_e(f, k, bound=None):
    """Multiply by the elementary e_k = s_{1^k} (dual Pieri rule)."""
    assert k >= 0
    bound = _min_bound(bound, f.degree_bound)
    out = {}
    for lam, c in f.coeffs.items():
        if bound is not None and sum(lam) + k > bound:
            continue
        for mu in vertical_strips(lam, k):
            out[mu] = out.get(mu, 0) + c
    return SymFn(out, bound)


@lru_cache(maxsize=None)
def _all_horizontal_strips_upto(lam, kmax):
    """All mu with mu/lam a horizontal strip of size <= kmax."""
    out = []
    for k in range(kmax + 1):
        for mu in horizontal_strips(lam, k):
            out.append(mu)
    return out


def sigma_apply(f, bound):
    """Multiply by sigma = 1 + s_1 + s_2 + ..., truncated at `bound`."""
    out = {}
    for lam, c in f.coeffs.items():
        slack = bound - sum(lam)
        if slack < 0:
            continue
        for mu in _all_horizontal_strips_upto(lam, slack):
            out[mu] = out.get(mu, 0) + c
    return SymFn(out, bound)


def sigma_inv_apply(f, bound):
    """Multiply by sigma^{-1} = 1 - e_1 + e_2 - ..., truncated at `bound`."""
    out = {}
    for lam, c in f.coeffs.items():
        slack = bound - sum(lam)
        if slack < 0:
            continue
        for k in range(slack + 1):
            sign = -1 if k % 2 else 1
            for mu in vertical_strips(lam, k):
                out[mu] = out.get(mu, 0) + sign * c
    return SymFn(out, bound)


@lru_cache(maxsize=None)
def sigma_pow(k, bound):
    """sigma^k truncated to degree <= bound; k may be negative."""
    f = sym_one(bound)
    step = sigma_apply if k >= 0 else sigma_inv_apply
    for _ in range(abs(k)):
        f = step(f, bound)
    return f


@lru_cache(maxsize=None)
def _schur_times_schur(lam, mu):
    """Exact Littlewood-Richardson product s_lam * s_mu via the
    Jacobi-Trudi determinant for mu, expanded by iterated Pieri rules."""
    if len(mu) > len(lam) and lam:
        lam, mu = mu, lam
    if not mu:
        return SymFn({lam: 1})
    r = len(mu)
    total = SymFn({})
    bound = sum(lam) + sum(mu)
    for w in permutations(range(r)):
        ks = [mu[i] - i + w[i] for i in range(r)]
        if any(k < 0 for k in ks):
            continue
        sign = _perm_sign(w)
        f = SymFn({lam: sign})
        for k in ks:
            f = mul_h(f, k, bound)
        total = total + f
    return total


def _perm_sign(w):
    sign = 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                sign = -sign
    return sign


def mul(f, g, bound=None):
    """Product of two symmetric functions, truncated at `bound`."""
    bound = _min_bound(bound, _min_bound(f.degree_bound, g.degree_bound))
    out = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            if bound is not None and sum(lam) + sum(mu) > bound:
                continue
            prod = _schur_times_schur(lam, mu)
            ab = a * b
            for nu, c in prod.coeffs.items():
                if bound is not None and sum(nu) > bound:
                    continue
                out[nu] = out.get(nu, 0) + ab * c
    return SymFn(out, bound)


def theta(f):
    """The counit-like functional picking out the empty-partition coefficient."""
    return f.coeffs.get((), 0)


def partition_sort_key(lam):
    """Canonical term order: ascending degree, then descending lex on parts."""
    return (sum(lam), tuple(-p for p in lam))


def _render_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return "%d/%d" % (c.numerator, c.denominator)
    return str(int(c))


def render_sym(f):
    """Canonical text rendering, e.g. "1 - 3*s[1] + 3*s[2] + 6*s[1,1]"."""
    if not f.coeffs:
        return "0"
    parts = []
    for lam in sorted(f.coeffs, key=partition_sort_key):
        c = f.coeffs[lam]
        neg = c < 0
        mag = -c if neg else c
        if lam == ():
            body = _render_coeff(mag)
        elif mag == 1:
            body = "s[%s]" % ",".join(map(str, lam))
        else:
            body = "%s*s[%s]" % (_render_coeff(mag), ",".join(map(str, lam)))
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
