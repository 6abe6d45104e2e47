"""G is valuative: it respects cut-and-paste of base polytopes.

The base polytope of U(2,4) is the hypersimplex, which splits along the
hyperplane x0 + x1 = 1 into two matroid polytopes glued on a common
face.  Indicator functions then satisfy

    [Q(U24)] = [Q(A)] + [Q(B)] - [Q(A and B)]

and any valuative invariant must satisfy the same linear relation.  We
verify the indicator identity on an exact rational grid and the G
identity exactly in the U basis, then break the decomposition on
purpose and watch both checks refute it with a witness.

Run:  python3 demos/03_valuative_decomposition.py
"""

from fractions import Fraction

from polyinv import (
    SignedDecomposition,
    check_indicator_relation,
    check_valuative_g,
    g_invariant,
    parse_decomposition,
    render_qsym,
)
import polyinv.data as data

dec = parse_decomposition(data.load_fixture("u24split"))

print("target: U(2,4); pieces with coefficients",
      [str(c) for _, c in dec.pieces])
for denom in (2, 3, 4):
    ok, witness = check_indicator_relation(dec, denom)
    print("  indicator identity on the 1/%d grid: %s" % (denom, ok))

ok, residue = check_valuative_g(dec)
print("  G identity holds exactly:", ok)
print()

for pm, coeff in dec.pieces:
    print("  %+d * G = %s" % (coeff, render_qsym(g_invariant(pm).scale(coeff))))
print("     sum = %s" % render_qsym(g_invariant(dec.target)))
print()

broken = SignedDecomposition(dec.target, dec.pieces[:2])
ok, witness = check_indicator_relation(broken, 2)
print("dropping the overlap term:")
print("  indicator check: %s, witness point %s" % (ok, witness))
ok, residue = check_valuative_g(broken)
print("  G residue: %s" % render_qsym(residue))
