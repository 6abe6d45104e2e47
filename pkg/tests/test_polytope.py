"""Base-polytope geometry and the decomposition checks."""

from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from polyinv.polytope import (
    SignedDecomposition,
    check_indicator_relation,
    check_valuative_g,
    contains,
    rank_seq_multiplicity,
    vertex_of_permutation,
)
from polyinv.documents import parse_decomposition
from polyinv.pmcore import uniform
import polyinv.data as data


def test_contains_hypersimplex():
    u = uniform(2, 4)
    assert contains(u, (1, 1, 0, 0))
    assert contains(u, (Fraction(1, 2),) * 4)
    assert not contains(u, (2, 0, 0, 0))       # violates a singleton bound
    assert not contains(u, (1, 1, 1, 0))       # wrong total
    with pytest.raises(ValueError):
        contains(u, (1, 1, 0))


def test_vertices_and_tightness(corpus):
    for pm in corpus:
        if pm.n > 4:
            continue
        for perm in permutations(range(pm.n)):
            v = vertex_of_permutation(pm, perm)
            assert contains(pm, v)
            # pushing mass backwards along the permutation leaves Q:
            # the prefix constraint through the earlier element is tight
            for a in range(pm.n - 1):
                j, k = perm[a], perm[a + 1]
                moved = list(Fraction(x) for x in v)
                moved[j] += Fraction(1, 2)
                moved[k] -= Fraction(1, 2)
                assert not contains(pm, moved)


def test_rank_seq_multiplicities(corpus):
    for pm in corpus:
        if pm.n > 4:
            continue
        total = 0
        seen = set()
        for perm in permutations(range(pm.n)):
            word = []
            mask, prev = 0, 0
            for e in perm:
                mask |= 1 << e
                word.append(pm.rk[mask] - prev)
                prev = pm.rk[mask]
            seen.add(tuple(word))
            total += 1
        assert total == factorial(pm.n)
        assert sum(rank_seq_multiplicity(pm, w) for w in seen) == factorial(pm.n)
        assert rank_seq_multiplicity(pm, (99,) * pm.n) == 0


def _split_fixture():
    return parse_decomposition(data.load_fixture("u24split"))


def test_hypersimplex_split_passes():
    dec = _split_fixture()
    for denom in (2, 3):
        ok, witness = check_indicator_relation(dec, denom)
        assert ok and witness is None
    ok, residue = check_valuative_g(dec)
    assert ok and not residue


def test_trivial_decomposition():
    u = uniform(2, 4)
    dec = SignedDecomposition(u, ((u, Fraction(1)),))
    assert check_indicator_relation(dec, 2) == (True, None)
    ok, residue = check_valuative_g(dec)
    assert ok and not residue


def test_broken_decomposition_fails_with_witness():
    dec = _split_fixture()
    # drop the overlap correction term
    broken = SignedDecomposition(dec.target, dec.pieces[:2])
    ok, witness = check_indicator_relation(broken, 2)
    assert not ok
    assert witness is not None and len(witness) == 4
    # the witness really is a double-counted point
    assert contains(dec.pieces[0][0], witness)
    assert contains(dec.pieces[1][0], witness)
    ok_g, residue = check_valuative_g(broken)
    assert not ok_g and residue


def test_mismatched_ground_sets_rejected():
    with pytest.raises(ValueError):
        SignedDecomposition(uniform(2, 4), ((uniform(1, 3), Fraction(1)),))
