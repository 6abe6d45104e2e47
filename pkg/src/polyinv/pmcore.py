"""Polymatroid data model: rank tables over subset bitmasks, axiom
validation, constructors from graphs and rational vector configurations,
and the minor/sum/dual operations."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

__all__ = [
    "Polymatroid",
    "Graph",
    "VectorConfig",
    "Violation",
    "CapExceeded",
    "DEFAULT_MAX_N",
    "validate",
    "submodular_local_ok",
    "from_graph",
    "from_vectors",
    "restrict",
    "delete",
    "contract",
    "direct_sum",
    "dual",
    "is_matroid",
    "uniform",
    "relabel",
    "check_cap",
]

DEFAULT_MAX_N = 12


class CapExceeded(Exception):
    """Raised when a computation would exceed the configured size cap."""


def check_cap(n, max_n=None, what="ground set"):
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise CapExceeded("%s size %d exceeds cap %d" % (what, n, cap))


@dataclass(frozen=True)
class Polymatroid:
    """Ground set 0..n-1 with a dense rank table indexed by subset bitmask.

    Original element labels, if any, are metadata only."""

    n: int
    rk: tuple
    labels: tuple = None

    def __post_init__(self):
        if len(self.rk) != 1 << self.n:
            raise ValueError(
                "rank table has %d entries, expected %d" % (len(self.rk), 1 << self.n)
            )

    def rank(self, mask):
        return self.rk[mask]

    def rank_of(self, elements):
        return self.rk[mask_of(elements)]

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def total_rank(self):
        return self.rk[self.full_mask]

    def __repr__(self):
        return "Polymatroid(n=%d, rk(X)=%d)" % (self.n, self.total_rank)


def mask_of(elements):
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Graph:
    """Multigraph with self-loops; edges become the ground set."""

    vertices: int
    edges: tuple

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError("edge endpoint out of range: (%d, %d)" % (u, v))


@dataclass(frozen=True)
class VectorConfig:
    """For each ground element, a list of generating vectors (exact
    rational coordinates) spanning its subspace; empty list = loop."""

    dim: int
    subspaces: tuple  # tuple of tuples of coordinate tuples

    def __post_init__(self):
        for gens in self.subspaces:
            for v in gens:
                if len(v) != self.dim:
                    raise ValueError("generator has length %d, expected %d" % (len(v), self.dim))


@dataclass(frozen=True)
class Violation:
    axiom: str  # "normalization" | "monotone" | "submodular"
    subsets: tuple

    def __str__(self):
        return "axiom %s violated at subsets %s" % (
            self.axiom,
            ", ".join(str(elements_of(m)) for m in self.subsets),
        )


def validate(pm):
    """Check the three polymatroid axioms on the full table.

    Returns None if all hold, else a Violation naming the first failing
    axiom and the witnessing subset pair.  The submodularity sweep is the
    full O(4^n) pairwise check."""
    rk = pm.rk
    if rk[0] != 0:
        return Violation("normalization", (0,))
    full = pm.full_mask
    for a in range(full + 1):
        if rk[a] < 0:
            return Violation("monotone", (a,))
        for i in range(pm.n):
            b = a | (1 << i)
            if b != a and rk[a] > rk[b]:
                return Violation("monotone", (a, b))
    for a in range(full + 1):
        for b in range(a + 1, full + 1):
            if rk[a | b] + rk[a & b] > rk[a] + rk[b]:
                return Violation("submodular", (a, b))
    return None


def submodular_local_ok(pm):
    """Faster local submodularity check: pairs A+x, A+y differing in two
    elements.  Equivalent to the global axiom given monotonicity."""
    rk = pm.rk
    for a in range(1 << pm.n):
        outside = [i for i in range(pm.n) if not a >> i & 1]
        for ii, x in enumerate(outside):
            for y in outside[ii + 1:]:
                ax, ay = a | 1 << x, a | 1 << y
                if rk[ax | ay] + rk[a] > rk[ax] + rk[ay]:
                    return False
    return True


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            return True
        return False


def from_graph(g, max_n=None):
    """Graphic (poly)matroid: rank(A) = #vertices - #components of the
    spanning subgraph with edge set A."""
    n = len(g.edges)
    check_cap(n, max_n)
    rk = []
    for mask in range(1 << n):
        uf = _UnionFind(g.vertices)
        merges = 0
        for i, (u, v) in enumerate(g.edges):
            if mask >> i & 1 and uf.union(u, v):
                merges += 1
        rk.append(merges)
    return Polymatroid(n, tuple(rk))


def _to_fraction(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _int_rank(rows):
    """Rank of a list of integer vectors by fraction-free elimination."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < cols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in rows[rank + 1:]:
            if r[col]:
                m = lcm(abs(r[col]), abs(pr[col]))
                fa, fb = m // r[col], m // pr[col]
                for j in range(col, cols):
                    r[j] = fa * r[j] - fb * pr[j]
        rows = rows[: rank + 1] + [r for r in rows[rank + 1:] if any(r)]
        rank += 1
        col += 1
    return rank


def from_vectors(cfg, max_n=None):
    """Polymatroid of a subspace configuration: rank(A) = dim of the span
    of the union of generator lists, exact over the rationals."""
    n = len(cfg.subspaces)
    check_cap(n, max_n)
    # clear denominators once per generator
    int_gens = []
    for gens in cfg.subspaces:
        cleaned = []
        for v in gens:
            fv = [_to_fraction(x) for x in v]
            den = lcm(*(f.denominator for f in fv)) if fv else 1
            cleaned.append(tuple(int(f * den) for f in fv))
        int_gens.append(tuple(cleaned))
    rk = []
    for mask in range(1 << n):
        rows = []
        for i in range(n):
            if mask >> i & 1:
                rows.extend(int_gens[i])
        rk.append(_int_rank(rows) if rows else 0)
    return Polymatroid(n, tuple(rk))


def _check_subset(pm, elements):
    for e in elements:
        if not 0 <= e < pm.n:
            raise ValueError("element %d out of range for n=%d" % (e, pm.n))


def restrict(pm, elements):
    """Restriction to A: ground set A with the induced rank table."""
    _check_subset(pm, elements)
    elems = sorted(set(elements))
    k = len(elems)
    rk = []
    for sub in range(1 << k):
        m = 0
        for i in range(k):
            if sub >> i & 1:
                m |= 1 << elems[i]
        rk.append(pm.rk[m])
    return Polymatroid(k, tuple(rk))


def delete(pm, elements):
    """Deletion of A = restriction to the complement."""
    _check_subset(pm, elements)
    keep = [e for e in range(pm.n) if e not in set(elements)]
    return restrict(pm, keep)


def contract(pm, elements):
    """Contraction of A: ground set X \\ A, rank(B) = rk(A|B) - rk(A)."""
    _check_subset(pm, elements)
    amask = mask_of(elements)
    base = pm.rk[amask]
    keep = [e for e in range(pm.n) if not amask >> e & 1]
    k = len(keep)
    rk = []
    for sub in range(1 << k):
        m = amask
        for i in range(k):
            if sub >> i & 1:
                m |= 1 << keep[i]
        rk.append(pm.rk[m] - base)
    return Polymatroid(k, tuple(rk))


def direct_sum(pm1, pm2):
    """Disjoint union of ground sets with additive rank."""
    n = pm1.n + pm2.n
    m1 = pm1.full_mask
    rk = []
    for mask in range(1 << n):
        rk.append(pm1.rk[mask & m1] + pm2.rk[mask >> pm1.n])
    return Polymatroid(n, tuple(rk))


def is_matroid(pm):
    return all(pm.rk[1 << i] <= 1 for i in range(pm.n))


def dual(pm):
    """Matroid dual: rk*(A) = |A| - rk(X) + rk(X \\ A).  Defined for
    matroids only."""
    if not is_matroid(pm):
        raise ValueError("dual is defined only for matroids")
    full = pm.full_mask
    top = pm.rk[full]
    rk = tuple(
        bin(mask).count("1") - top + pm.rk[full ^ mask] for mask in range(full + 1)
    )
    return Polymatroid(pm.n, rk)


def uniform(r, n, max_n=None):
    """The uniform matroid U_{r,n}: rank(A) = min(r, |A|)."""
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    check_cap(n, max_n)
    rk = tuple(min(r, bin(mask).count("1")) for mask in range(1 << n))
    return Polymatroid(n, rk)


def relabel(pm, perm):
    """Apply a ground-set permutation: element i of the result is element
    perm[i] of the input."""
    if sorted(perm) != list(range(pm.n)):
        raise ValueError("not a permutation of 0..n-1")
    rk = []
    for mask in range(1 << pm.n):
        m = 0
        for i in range(pm.n):
            if mask >> i & 1:
                m |= 1 << perm[i]
        rk.append(pm.rk[m])
    return Polymatroid(pm.n, tuple(rk))
