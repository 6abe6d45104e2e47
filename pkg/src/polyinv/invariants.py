"""The core polymatroid invariants: the Schur-basis symmetric function
P[X], its q,t refinement H[X](q,t), the chain quasi-symmetric function
G[X], the rank generating function, the Tutte polynomial, and the
truncated Rees series."""

from fractions import Fraction
from functools import lru_cache

from .pmcore import check_cap
from .qsym import QSymFn
from .schur import (
    SymFn,
    mul,
    partition_sort_key,
    sigma_apply,
    sigma_inv_apply,
    sym_one,
    theta,
)

__all__ = [
    "SymFnQT",
    "BivariatePoly",
    "p_invariant",
    "p_table",
    "h_invariant",
    "g_invariant",
    "g_words",
    "rank_gen",
    "tutte",
    "rees_series",
    "DEFAULT_CHAIN_CAP",
]

DEFAULT_CHAIN_CAP = 10


class SymFnQT:
    """Symmetric function with coefficients in Z[q,t]: a sparse map
    (partition, q-exponent, t-exponent) -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned = {}
        if coeffs:
            for (lam, qe, te), c in coeffs.items():
                if c:
                    key = (tuple(lam), qe, te)
                    cleaned[key] = cleaned.get(key, 0) + c
        self.coeffs = {k: v for k, v in cleaned.items() if v}

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SymFnQT):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymFnQT(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return SymFnQT()
        return SymFnQT({k: c * v for k, v in self.coeffs.items()})

    def mul(self, other):
        out = {}
        for (lam, qa, ta), a in self.coeffs.items():
            for (mu, qb, tb), b in other.coeffs.items():
                prod = mul(SymFn({lam: 1}), SymFn({mu: 1}))
                ab = a * b
                for nu, c in prod.coeffs.items():
                    key = (nu, qa + qb, ta + tb)
                    out[key] = out.get(key, 0) + ab * c
        return SymFnQT(out)

    def coefficient(self, lam, qe, te):
        return self.coeffs.get((tuple(lam), qe, te), 0)

    def t_slice(self, te):
        """The coefficient of t^te, as a map (partition, q-exp) -> coeff."""
        return {
            (lam, qe): c for (lam, qe, t), c in self.coeffs.items() if t == te
        }

    def theta_termwise(self):
        """Apply the empty-partition functional to every (q,t) coefficient."""
        out = {}
        for (lam, qe, te), c in self.coeffs.items():
            if lam == ():
                out[(qe, te)] = out.get((qe, te), 0) + c
        return BivariatePoly(out, ("q", "t"))

    def is_integral(self):
        return all(
            not isinstance(c, Fraction) or c.denominator == 1
            for c in self.coeffs.values()
        )

    def render(self):
        if not self.coeffs:
            return "0"
        parts = []
        keys = sorted(
            self.coeffs,
            key=lambda k: (k[2], k[1]) + partition_sort_key(k[0]),
        )
        for lam, qe, te in keys:
            c = self.coeffs[(lam, qe, te)]
            neg = c < 0
            mag = -c if neg else c
            factors = []
            if qe:
                factors.append("q" if qe == 1 else "q^%d" % qe)
            if te:
                factors.append("t" if te == 1 else "t^%d" % te)
            if lam:
                factors.append("s[%s]" % ",".join(map(str, lam)))
            if mag != 1 or not factors:
                factors.insert(0, _render_coeff(mag))
            body = "*".join(factors)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "SymFnQT(%s)" % self.render()


def _render_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return "%d/%d" % (c.numerator, c.denominator)
    return str(int(c))


class BivariatePoly:
    """Sparse Laurent polynomial in two variables with integer (or exact
    rational) coefficients."""

    __slots__ = ("coeffs", "vars", "laurent")

    def __init__(self, coeffs=None, vars=("x", "y"), laurent=False):
        cleaned = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    cleaned[k] = cleaned.get(k, 0) + c
        self.coeffs = {k: v for k, v in cleaned.items() if v}
        self.vars = vars
        self.laurent = laurent

    def __eq__(self, other):
        if isinstance(other, BivariatePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePoly(out, self.vars, self.laurent or other.laurent)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return BivariatePoly(
            {k: c * v for k, v in self.coeffs.items()}, self.vars, self.laurent
        )

    def mul(self, other):
        out = {}
        for (a1, a2), c in self.coeffs.items():
            for (b1, b2), d in other.coeffs.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + c * d
        return BivariatePoly(out, self.vars, self.laurent or other.laurent)

    def substitute(self, x_val, y_val):
        """Evaluate at exact rational (x_val, y_val)."""
        total = Fraction(0)
        for (a, b), c in self.coeffs.items():
            total += c * Fraction(x_val) ** a * Fraction(y_val) ** b
        return total

    def swap_vars(self):
        return BivariatePoly(
            {(b, a): c for (a, b), c in self.coeffs.items()}, self.vars, self.laurent
        )

    def coefficient(self, a, b):
        return self.coeffs.get((a, b), 0)

    def render(self):
        if not self.coeffs:
            return "0"
        x, y = self.vars
        parts = []
        keys = sorted(self.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0]))
        for a, b in keys:
            c = self.coeffs[(a, b)]
            neg = c < 0
            mag = -c if neg else c
            factors = []
            if a:
                factors.append(x if a == 1 else "%s^%d" % (x, a))
            if b:
                factors.append(y if b == 1 else "%s^%d" % (y, b))
            if mag != 1 or not factors:
                factors.insert(0, _render_coeff(mag))
            body = "*".join(factors)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "BivariatePoly(%s)" % self.render()


@lru_cache(maxsize=None)
def _p_table_cached(pm):
    n = pm.n
    bound = max(n - 1, 0)
    one = sym_one(bound)
    if n == 0:
        return (one,)
    rk = pm.rk
    popcount = [bin(m).count("1") for m in range(1 << n)]
    p = [None] * (1 << n)
    # g[mask] = P[mask] * (-1)^{|mask|} * sigma^{-rk(mask)}, truncated
    g = [None] * (1 << n)
    p[0] = one
    g[0] = one
    order = sorted(range(1 << n), key=lambda m: popcount[m])
    for mask in order:
        if mask == 0:
            continue
        size = popcount[mask]
        # sum of g over proper submasks
        acc = {}
        sub = (mask - 1) & mask
        while True:
            for lam, c in g[sub].coeffs.items():
                acc[lam] = acc.get(lam, 0) + c
            if sub == 0:
                break
            sub = (sub - 1) & mask
        total = SymFn(acc, bound).truncate(size - 1)
        for _ in range(rk[mask]):
            total = sigma_apply(total, size - 1)
        sign = -1 if size % 2 == 0 else 1  # -(-1)^{|A|}
        p[mask] = total.truncate(size - 1).scale(sign)
        gm = p[mask].scale(-sign)  # (-1)^{|A|} P[A]
        gm = SymFn(gm.coeffs, bound)
        for _ in range(rk[mask]):
            gm = sigma_inv_apply(gm, bound)
        g[mask] = gm
    return tuple(p)


def p_table(pm, max_n=None):
    """P of every restriction X|_A, indexed by subset bitmask.  Each
    entry is a genuine polynomial (the recursion proves its degree is
    below the subset size), so no degree bound is attached."""
    check_cap(pm.n, max_n)
    return tuple(SymFn(f.coeffs) for f in _p_table_cached(pm))


def p_invariant(pm, max_n=None):
    """The symmetric function P[X] from the subset recursion; integer
    coefficients, degree < |X|."""
    return p_table(pm, max_n)[pm.full_mask]


def h_invariant(pm, max_n=None):
    """H[X](q,t) = sum over subsets A of P[X|_A] q^{rk(A)} t^{|A|}."""
    table = p_table(pm, max_n)
    out = {}
    for mask in range(1 << pm.n):
        qe = pm.rk[mask]
        te = bin(mask).count("1")
        for lam, c in table[mask].coeffs.items():
            key = (lam, qe, te)
            out[key] = out.get(key, 0) + c
    return SymFnQT(out)


@lru_cache(maxsize=None)
def _g_words_cached(pm):
    n = pm.n
    rk = pm.rk
    # DP up the subset lattice: words[mask] maps each rank-increment word
    # realized by a maximal chain of `mask` to its chain count.
    words = [None] * (1 << n)
    words[0] = {(): 1}
    order = sorted(range(1 << n), key=lambda m: bin(m).count("1"))
    for mask in order:
        if mask == 0:
            continue
        acc = {}
        r = rk[mask]
        for i in range(n):
            if mask >> i & 1:
                prev = mask ^ (1 << i)
                step = r - rk[prev]
                for w, c in words[prev].items():
                    key = w + (step,)
                    acc[key] = acc.get(key, 0) + c
        words[mask] = acc
    return words[(1 << n) - 1]


def g_words(pm, max_chains=None):
    """Multiset of rank sequences over all |X|! maximal chains."""
    check_cap(pm.n, max_chains if max_chains is not None else DEFAULT_CHAIN_CAP,
              "chain enumeration ground set")
    return dict(_g_words_cached(pm))


def g_invariant(pm, max_chains=None):
    """G[X] = sum of U_{r(chain)} over all maximal chains (U basis)."""
    return QSymFn("U", g_words(pm, max_chains))


def rank_gen(pm):
    """Rank generating function R[X](q,t) = sum q^{rk(A)} t^{|A|}."""
    out = {}
    for mask in range(1 << pm.n):
        key = (pm.rk[mask], bin(mask).count("1"))
        out[key] = out.get(key, 0) + 1
    return BivariatePoly(out, ("q", "t"))


def tutte(pm):
    """Tutte polynomial.  Computed exactly in u = x-1, v = y-1 (Laurent in
    v for non-matroid polymatroids); re-expanded in x, y when every
    exponent is nonnegative, in which case vars == ("x", "y")."""
    top = pm.total_rank
    uv = {}
    for mask in range(1 << pm.n):
        r = pm.rk[mask]
        key = (top - r, bin(mask).count("1") - r)
        uv[key] = uv.get(key, 0) + 1
    if any(b < 0 for _, b in uv):
        return BivariatePoly(uv, ("u", "v"), laurent=True)
    # expand (x-1)^a (y-1)^b
    from math import comb

    out = {}
    for (a, b), c in uv.items():
        for i in range(a + 1):
            ci = c * comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                k = (i, j)
                out[k] = out.get(k, 0) + ci * comb(b, j) * (-1) ** (b - j)
    return BivariatePoly(out, ("x", "y"))


def rees_series(pm, k, max_n=None):
    """[H[X^0], H[X^1], ..., H[X^k]] where X^i is the i-fold direct sum.
    By multiplicativity this is the list of powers of H[X], which is how
    it is computed."""
    check_cap(pm.n * k, max_n, "Rees series ground set")
    h = h_invariant(pm, max_n)
    out = [SymFnQT({((), 0, 0): 1})]
    for _ in range(k):
        out.append(out[-1].mul(h))
    return out
