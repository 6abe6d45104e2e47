"""A first tour: build a few small (poly)matroids and compute their
invariants.

Run:  python3 demos/01_first_invariants.py
"""

from polyinv import (
    Graph,
    from_graph,
    g_invariant,
    h_invariant,
    p_invariant,
    rank_gen,
    render_qsym,
    render_sym,
    tutte,
    uniform,
)

# The cycle graph on 4 vertices gives the graphic matroid of the 4-gon:
# every edge is independent until the cycle closes.
square = from_graph(Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0))))

print("4-gon, ground set of %d edges, rank %d" % (square.n, square.total_rank))
print("  P       =", render_sym(p_invariant(square)))
print("  H(q,t)  =", h_invariant(square).render())
print("  G       =", render_qsym(g_invariant(square)))
print("  Tutte   =", tutte(square).render())
print("  R(q,t)  =", rank_gen(square).render())
print()

# The uniform matroid U_{2,4}: every pair of the four elements is a basis.
u24 = uniform(2, 4)
print("U(2,4)")
print("  P       =", render_sym(p_invariant(u24)))
print("  G       =", render_qsym(g_invariant(u24)))
print("  Tutte   =", tutte(u24).render())
print()

# P is multiplicative over direct sums, so two disjoint triangles have
# P equal to the square of one triangle's P.
from polyinv import direct_sum
from polyinv.schur import mul

triangle = from_graph(Graph(3, ((0, 1), (1, 2), (2, 0))))
two = direct_sum(triangle, triangle)
assert p_invariant(two) == mul(p_invariant(triangle), p_invariant(triangle))
print("P[triangle + triangle] =", render_sym(p_invariant(two)))
print("          ... which is P[triangle]^2, as it must be.")
