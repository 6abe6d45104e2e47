"""Acceptance suite: the nine headline checks, every comparison exact
(tolerance 0).  Each test prints a single pass line on success; a
failure surfaces as an ordinary assertion error."""

from fractions import Fraction
from math import comb, factorial

from polyinv import pmcore
from polyinv.documents import parse_decomposition, parse_document
from polyinv.invariants import (
    g_invariant,
    g_words,
    h_invariant,
    p_invariant,
    p_table,
    rank_gen,
    tutte,
)
from polyinv.pmcore import direct_sum, dual, relabel, uniform
from polyinv.polytope import (
    SignedDecomposition,
    check_indicator_relation,
    check_valuative_g,
)
from polyinv.qsym import QSymFn, p_coproduct, p_antipode, p_product, qsym
from polyinv.schur import SymFn, mul, sigma_pow
from polyinv.special import bjr_f, tau, theta_map, xi
import polyinv.data as data


def load(name):
    return parse_document(data.load_fixture(name))


def report(num, text):
    print("PASS criterion %d: %s" % (num, text))


# ------------------------------------------------------------ criterion 1

def test_criterion_1_loop_coloop():
    loop, coloop = uniform(0, 1), uniform(1, 1)
    assert p_invariant(loop).coeffs == {(): 1}
    assert p_invariant(coloop).coeffs == {(): 1}
    assert h_invariant(loop).coeffs == {((), 0, 0): 1, ((), 0, 1): 1}
    assert h_invariant(coloop).coeffs == {((), 0, 0): 1, ((), 1, 1): 1}
    assert g_invariant(loop).coeffs == {(0,): 1}
    assert g_invariant(coloop).coeffs == {(1,): 1}
    report(1, "loop/coloop goldens (P, H, G) match")


# ------------------------------------------------------------ criterion 2

def test_criterion_2_mgon():
    for m in range(3, 7):
        pm = load("mgon%d" % m)
        # P = 1 - s_1 + s_11 - ... (alternating column shapes, degree < m)
        expect_p = {tuple([1] * i): (-1) ** i for i in range(m)}
        assert p_invariant(pm).coeffs == expect_p
        # Tutte = y + x + x^2 + ... + x^{m-1}
        t = tutte(pm)
        assert t.vars == ("x", "y")
        expect_t = {(0, 1): 1}
        expect_t.update({(i, 0): 1 for i in range(1, m)})
        assert t.coeffs == expect_t
        # G = m! U_{(1,...,1,0)}
        assert g_invariant(pm).coeffs == {tuple([1] * (m - 1) + [0]): factorial(m)}
        # H = (1+qt)^m - (qt)^m + q^{m-1} t^m P
        expect_h = {((), i, i): comb(m, i) for i in range(m)}
        for lam, c in expect_p.items():
            key = (lam, m - 1, m)
            expect_h[key] = expect_h.get(key, 0) + c
        assert h_invariant(pm).coeffs == {k: v for k, v in expect_h.items() if v}
    report(2, "m-gon closed forms match for m = 3..6")


# ------------------------------------------------------------ criterion 3

def test_criterion_3_multiedge():
    for m in range(2, 6):
        pm = load("multiedge%d" % m)
        # P = sum_j (-1)^j C(m-1, j) s_j
        expect_p = {
            ((j,) if j else ()): (-1) ** j * comb(m - 1, j) for j in range(m)
        }
        assert p_invariant(pm).coeffs == {k: v for k, v in expect_p.items() if v}
        # H = 1 + q sum_i C(m,i) t^i sum_{j<i} (-1)^j C(i-1,j) s_j
        expect_h = {((), 0, 0): 1}
        for i in range(1, m + 1):
            for j in range(i):
                lam = (j,) if j else ()
                c = comb(m, i) * (-1) ** j * comb(i - 1, j)
                key = (lam, 1, i)
                expect_h[key] = expect_h.get(key, 0) + c
        assert h_invariant(pm).coeffs == {k: v for k, v in expect_h.items() if v}
        # G = m! U_{(1,0,...,0)}
        assert g_invariant(pm).coeffs == {(1,) + (0,) * (m - 1): factorial(m)}
    report(3, "m-multiedge closed forms match for m = 2..5")


# ------------------------------------------------------------ criterion 4

GRAY_TUTTE = {
    (0, 5): 1, (0, 4): 4, (1, 4): 1, (2, 3): 1, (1, 3): 6, (0, 3): 7,
    (3, 2): 1, (0, 2): 6, (2, 2): 6, (1, 2): 13, (1, 1): 10, (4, 1): 1,
    (2, 1): 13, (3, 1): 6, (0, 1): 2, (1, 0): 2, (3, 0): 7, (5, 0): 1,
    (4, 0): 4, (2, 0): 6,
}


def test_criterion_4_gray_graphs():
    g1, g2 = load("gray1"), load("gray2")
    t1, t2 = tutte(g1), tutte(g2)
    assert t1.vars == t2.vars == ("x", "y")
    assert t1.coeffs == GRAY_TUTTE
    assert t2.coeffs == GRAY_TUTTE
    p1, p2 = p_invariant(g1), p_invariant(g2)
    assert p1.coefficient((2, 2, 2)) == 56
    assert p2.coefficient((2, 2, 2)) == 55
    report(4, "Gray graphs: printed Tutte reproduced, s[2,2,2] coefficients 56/55")


# ------------------------------------------------------------ criterion 5

SIXPOINT_P = {
    (): 1, (1,): -3, (2,): 3, (1, 1): 6, (3,): -1, (2, 1): -8,
    (1, 1, 1): -8, (3, 1): 3, (2, 2): 6, (2, 1, 1): 11, (3, 2): -3,
    (3, 1, 1): -4, (2, 2, 1): -3,
}


def test_criterion_5_sixpoint_pair():
    x, y = load("points6x"), load("points6y")
    assert p_invariant(x).coeffs == SIXPOINT_P
    assert p_invariant(y).coeffs == SIXPOINT_P
    assert h_invariant(x) == h_invariant(y)
    expect_g = {(1, 1, 0, 1, 0, 0): 72, (1, 1, 1, 0, 0, 0): 648}
    assert g_invariant(x).coeffs == expect_g
    assert g_invariant(y).coeffs == expect_g
    assert bjr_f(x) == bjr_f(y)
    report(5, "6-point pair: printed P, equal H, printed G, equal F")


# ------------------------------------------------------------ criterion 6

SEVENPOINT_PX = {
    (): 1, (1,): -4, (2,): 6, (1, 1): 9, (3,): -4, (2, 1): -17,
    (1, 1, 1): -10, (4,): 1, (3, 1): 12, (2, 2): 13, (2, 1, 1): 17,
    (4, 1): -3, (3, 2): -10, (3, 1, 1): -10, (2, 2, 1): -8,
    (4, 2): 2, (4, 1, 1): 2, (3, 3): 2, (3, 2, 1): 3, (2, 2, 2): 1,
}
SEVENPOINT_PY = dict(SEVENPOINT_PX)
SEVENPOINT_PY.update({(2, 2): 14, (3, 2): -12, (2, 2, 1): -10,
                      (4, 2): 3, (3, 2, 1): 4})
SEVENPOINT_GX = {
    (1, 1, 1, 0, 0, 0, 0): 3456, (1, 1, 0, 1, 0, 0, 0): 1080,
    (1, 1, 0, 0, 1, 0, 0): 264, (1, 0, 1, 1, 0, 0, 0): 216,
    (1, 0, 1, 0, 1, 0, 0): 24,
}
SEVENPOINT_GY = {
    (1, 1, 1, 0, 0, 0, 0): 3456, (1, 1, 0, 1, 0, 0, 0): 1104,
    (1, 1, 0, 0, 1, 0, 0): 240, (1, 0, 1, 1, 0, 0, 0): 192,
    (1, 0, 1, 0, 1, 0, 0): 48,
}


def test_criterion_6_sevenpoint_pair():
    x, y = load("points7x"), load("points7y")
    assert p_invariant(x).coeffs == SEVENPOINT_PX
    assert p_invariant(y).coeffs == SEVENPOINT_PY
    assert g_invariant(x).coeffs == SEVENPOINT_GX
    assert g_invariant(y).coeffs == SEVENPOINT_GY
    tx, ty = tutte(x), tutte(y)
    assert tx.vars == ty.vars and tx.coeffs == ty.coeffs
    assert h_invariant(x) != h_invariant(y)
    report(6, "7-point pair: printed P and G, equal Tutte, distinct H")


# ------------------------------------------------------------ criterion 7

def _vanishes_below_n(pm):
    bound = pm.n - 1
    table = p_table(pm)
    total = SymFn({}, bound)
    for mask in range(1 << pm.n):
        sign = -1 if bin(mask).count("1") % 2 else 1
        total = total + mul(
            table[mask], sigma_pow(-pm.rk[mask], bound), bound=bound
        ).scale(sign)
    return not total


def test_criterion_7_property_suite(corpus, matroid_corpus):
    checked = 0
    small = [pm for pm in corpus if pm.n <= 4]
    for pm in small:
        assert _vanishes_below_n(pm)
        assert tau(g_invariant(pm)) == h_invariant(pm)
        assert h_invariant(pm).theta_termwise().coeffs == rank_gen(pm).coeffs
        # Tutte <-> R substitution at exact rational points
        t, r = tutte(pm), rank_gen(pm)
        a, b = Fraction(3, 2), Fraction(-5, 7)
        direct = sum(
            a ** (pm.total_rank - pm.rk[m]) * b ** (bin(m).count("1") - pm.rk[m])
            for m in range(1 << pm.n)
        )
        lhs = t.substitute(a + 1, b + 1) if t.vars == ("x", "y") else t.substitute(a, b)
        assert lhs == direct == a ** pm.total_rank * r.substitute(1 / (a * b), b)
        # relabeling invariance
        perm = tuple(reversed(range(pm.n)))
        q = relabel(pm, perm)
        assert p_invariant(q) == p_invariant(pm)
        assert g_invariant(q) == g_invariant(pm)
        checked += 1
    # multiplicativity
    tiny = [pm for pm in small if pm.n <= 2][:6]
    for a_pm in tiny:
        for b_pm in tiny:
            ab = direct_sum(a_pm, b_pm)
            assert p_invariant(ab) == mul(p_invariant(a_pm), p_invariant(b_pm))
            assert h_invariant(ab) == h_invariant(a_pm).mul(h_invariant(b_pm))
            assert g_invariant(ab) == p_product(g_invariant(a_pm), g_invariant(b_pm))
    # matroid-only identities and duality
    for pm in [m for m in matroid_corpus if m.n <= 4]:
        assert xi(g_invariant(pm)) == p_invariant(pm)
        assert theta_map(g_invariant(pm)) == bjr_f(pm)
        dv = dual(pm)
        assert tutte(dv).coeffs == tutte(pm).swap_vars().coeffs
        flipped = {
            tuple(1 - v for v in reversed(w)): c
            for w, c in g_words(pm).items()
        }
        assert g_words(dv) == flipped
    # Hopf antipode axiom (with the reversing convention)
    for word in [(), (1,), (2, 1), (1, 1, 2)]:
        acc = QSymFn("P")
        for (lft, rgt), c in p_coproduct(qsym("P", word)).items():
            acc = acc + p_product(
                p_antipode(qsym("P", lft), reverse=True), qsym("P", rgt)
            ).scale(c)
        assert acc == (qsym("P", ()) if word == () else QSymFn("P"))
    assert checked > 20
    report(7, "property suite over the n <= 4 corpus (%d polymatroids), zero violations" % checked)


# ------------------------------------------------------------ criterion 8

def test_criterion_8_valuative_fixture():
    dec = parse_decomposition(data.load_fixture("u24split"))
    for pm, _ in dec.pieces:
        assert pmcore.validate(pm) is None
    for denom in (2, 3):
        assert check_indicator_relation(dec, denom) == (True, None)
    ok, residue = check_valuative_g(dec)
    assert ok and not residue
    broken = SignedDecomposition(dec.target, dec.pieces[:2])
    ok_i, witness = check_indicator_relation(broken, 2)
    assert not ok_i and witness is not None
    ok_g, residue = check_valuative_g(broken)
    assert not ok_g and residue
    report(8, "U(2,4) hypersimplex split valuative; broken variant refuted with witness")


# ------------------------------------------------------------ criterion 9

def test_criterion_9_realizable_sign_pattern():
    names = [
        "mgon3", "mgon4", "mgon5", "mgon6",
        "multiedge2", "multiedge3", "multiedge4", "multiedge5",
        "gray1", "gray2",
        "points6x", "points6y", "points7x", "points7y",
    ]
    for name in names:
        p = p_invariant(load(name))
        for lam, c in p.coeffs.items():
            assert (-1) ** sum(lam) * c >= 0, (name, lam, c)
    report(9, "realizable sign pattern (-1)^|lambda| b_lambda >= 0 on all %d fixtures" % len(names))
