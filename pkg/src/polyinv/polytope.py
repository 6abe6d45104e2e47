"""Polymatroid base polytopes and the valuative-property machinery:
exact membership tests, permutation vertices, rank-sequence
multiplicities, and the two decomposition checks (indicator-function
identity on a rational grid, and equality of G across the pieces)."""

from dataclasses import dataclass
from fractions import Fraction

from .invariants import g_invariant, g_words

__all__ = [
    "SignedDecomposition",
    "contains",
    "vertex_of_permutation",
    "rank_seq_multiplicity",
    "check_indicator_relation",
    "check_valuative_g",
]


@dataclass(frozen=True)
class SignedDecomposition:
    """A target polymatroid together with signed pieces (pm, coeff),
    asserting [Q(target)] = sum of coeff * [Q(pm)]."""

    target: object
    pieces: tuple  # of (Polymatroid, Fraction)

    def __post_init__(self):
        n = self.target.n
        for pm, _ in self.pieces:
            if pm.n != n:
                raise ValueError("all ground sets must have size %d" % n)


def contains(pm, point):
    """Exact membership of a rational point in the base polytope Q(rk)."""
    if len(point) != pm.n:
        raise ValueError("point has length %d, expected %d" % (len(point), pm.n))
    point = [Fraction(x) for x in point]
    if sum(point) != pm.total_rank:
        return False
    for mask in range(1, pm.full_mask):
        total = Fraction(0)
        for i in range(pm.n):
            if mask >> i & 1:
                total += point[i]
        if total > pm.rk[mask]:
            return False
    return True


def vertex_of_permutation(pm, perm):
    """The prefix-rank vertex: v[perm[i]] = rk(first i+1) - rk(first i)."""
    if sorted(perm) != list(range(pm.n)):
        raise ValueError("not a permutation of 0..n-1")
    v = [0] * pm.n
    mask = 0
    prev = 0
    for e in perm:
        mask |= 1 << e
        r = pm.rk[mask]
        v[e] = r - prev
        prev = r
    return tuple(v)


def rank_seq_multiplicity(pm, v, max_chains=None):
    """Number of permutations whose rank sequence equals v."""
    v = tuple(v)
    if len(v) != pm.n:
        return 0
    return g_words(pm, max_chains).get(v, 0)


def _grid_points(n, total_scaled, coord_max_scaled):
    """Integer vectors w of length n with sum total_scaled and
    0 <= w_i <= coord_max_scaled; yields lists."""

    def rec(i, remaining, acc):
        if i == n - 1:
            if 0 <= remaining <= coord_max_scaled:
                yield acc + [remaining]
            return
        lo = max(0, remaining - coord_max_scaled * (n - 1 - i))
        hi = min(coord_max_scaled, remaining)
        for w in range(lo, hi + 1):
            yield from rec(i + 1, remaining - w, acc + [w])

    yield from rec(0, total_scaled, [])


def _contains_scaled(pm, w, denom):
    """Membership of w/denom in Q(rk), all-integer arithmetic."""
    # caller guarantees sum(w) == denom * rk(X)
    for mask in range(1, pm.full_mask):
        total = 0
        for i in range(pm.n):
            if mask >> i & 1:
                total += w[i]
        if total > denom * pm.rk[mask]:
            return False
    return True


def check_indicator_relation(dec, denom=2):
    """Evaluate [Q(target)] - sum coeff_i * [Q(pm_i)] at every point of
    the (1/denom)-grid on the hyperplane sum v_i = rk(X), inside the
    bounding box [0, rk_max]^n.  Returns (True, None) if the difference
    vanishes on the whole grid, else (False, witness_point).

    A grid pass certifies the identity at grid resolution (sound for
    refutation, not a full proof)."""
    if denom < 1:
        raise ValueError("denom must be >= 1")
    target = dec.target
    n = target.n
    top = target.total_rank
    rk_max = max([top] + [pm.total_rank for pm, _ in dec.pieces])
    for pm, _ in dec.pieces:
        if pm.total_rank != top:
            # a piece living on a different hyperplane never contributes
            # on the target's grid; still sound to skip mismatch here
            pass
    for w in _grid_points(n, denom * top, denom * rk_max):
        value = Fraction(1 if _contains_scaled(target, w, denom) else 0)
        for pm, coeff in dec.pieces:
            if pm.total_rank * denom == sum(w) and _contains_scaled(pm, w, denom):
                value -= Fraction(coeff)
        if value:
            return False, tuple(Fraction(x, denom) for x in w)
    return True, None


def check_valuative_g(dec, max_chains=None):
    """Check sum coeff_i * G[pm_i] - G[target] == 0 exactly in the U
    basis.  Returns (ok, residue)."""
    residue = g_invariant(dec.target, max_chains).scale(-1)
    for pm, coeff in dec.pieces:
        residue = residue + g_invariant(pm, max_chains).scale(Fraction(coeff))
    return not residue, residue
