"""The specialization tower on quasi-symmetric invariants: the map tau
into Sym[q,t] (with its prefix-vector recursion), the extraction xi of
the symmetric invariant on matroids, the splitting character, the
Billera-Jia-Reiner quasi-symmetric function, and the universal morphism
theta from the 0/1-word subalgebra."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .invariants import SymFnQT
from .pmcore import check_cap, is_matroid
from .qsym import QSymFn, u_shift
from .schur import SymFn, sigma_apply, sym_one

__all__ = [
    "tau_p_vector",
    "tau",
    "xi",
    "zeta_mat",
    "bjr_f",
    "gamma_char",
    "theta_map",
]


@lru_cache(maxsize=None)
def tau_p_vector(alpha):
    """The symmetric function P(alpha) for a word of nonnegative integers:
    the unique function of degree < len(alpha) making the alternating
    binomial sum over prefixes vanish in low degree."""
    alpha = tuple(alpha)
    d = len(alpha)
    if d == 0:
        return sym_one()
    bound = d - 1
    total = SymFn({}, bound)
    weight = sum(alpha)
    for i in range(d):
        prefix = tau_p_vector(alpha[:i]).truncate(bound)
        term = SymFn(prefix.coeffs, bound)
        for _ in range(weight - sum(alpha[:i])):
            term = sigma_apply(term, bound)
        sign = -1 if i % 2 else 1
        total = total + term.scale(sign * comb(d, i))
    outer = 1 if d % 2 else -1  # (-1)^{d+1}
    return total.scale(outer)


def tau(f):
    """tau on the U basis, linearly extended:
    tau(U_alpha) = sum_i P(alpha[:i]) q^{|alpha[:i]|} t^i / (i! (d-i)!)."""
    if f.basis != "U":
        raise ValueError("tau expects the U basis")
    out = {}
    for alpha, c in f.coeffs.items():
        d = len(alpha)
        for i in range(d + 1):
            coeff = Fraction(c, 1) / (factorial(i) * factorial(d - i))
            p = tau_p_vector(alpha[:i])
            qe = sum(alpha[:i])
            for lam, a in p.coeffs.items():
                key = (lam, qe, i)
                out[key] = out.get(key, 0) + coeff * a
    return SymFnQT(out)


def xi(f):
    """xi on 0/1 U-words: picks the top-t coefficient of tau at q = 1,
    so xi(U_alpha) = P(alpha) / len(alpha)!.  On G-images of matroids this
    recovers the symmetric invariant P[X]."""
    if f.basis != "U":
        raise ValueError("xi expects the U basis")
    out = SymFn({})
    for alpha, c in f.coeffs.items():
        if any(a not in (0, 1) for a in alpha):
            raise ValueError("xi is defined on 0/1 words only, got %s" % (alpha,))
        coeff = Fraction(c, 1) / factorial(len(alpha))
        out = out + tau_p_vector(alpha).scale(coeff)
    return SymFn({lam: _normalize(c) for lam, c in out.coeffs.items()})


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def zeta_mat(pm):
    """1 if the matroid splits completely into loops and coloops
    (rank additive over singletons on every subset), else 0."""
    if not is_matroid(pm):
        raise ValueError("zeta_mat is defined for matroids only")
    singles = [pm.rk[1 << i] for i in range(pm.n)]
    for mask in range(1 << pm.n):
        total = sum(singles[i] for i in range(pm.n) if mask >> i & 1)
        if pm.rk[mask] != total:
            return 0
    return 1


def _zeta_minor(rk, prev_mask, prev_rank, step_mask, n):
    """zeta of the minor (restrict to prev | step, contract prev), read
    off the raw rank table.  Additivity on the full step set implies it
    on every subset, by submodularity."""
    total = 0
    for i in range(n):
        if step_mask >> i & 1:
            total += rk[prev_mask | (1 << i)] - prev_rank
    return 1 if rk[prev_mask | step_mask] - prev_rank == total else 0


def bjr_f(pm, max_n=None):
    """The Billera-Jia-Reiner quasi-symmetric function of a matroid, in
    the M basis: F[X] = sum over subset chains graded by a composition of
    the product of splitting characters of the successive minors."""
    if not is_matroid(pm):
        raise ValueError("bjr_f is defined for matroids only")
    check_cap(pm.n, max_n)
    n = pm.n
    rk = pm.rk
    full = pm.full_mask
    out = {}

    def rec(prev_mask, word):
        if prev_mask == full:
            out[word] = out.get(word, 0) + 1
            return
        rest = full ^ prev_mask
        prev_rank = rk[prev_mask]
        # iterate nonempty submasks of the remaining elements
        step = rest
        while step:
            if _zeta_minor(rk, prev_mask, prev_rank, step, n):
                rec(prev_mask | step, word + (bin(step).count("1"),))
            step = (step - 1) & rest
    if n == 0:
        return QSymFn("M", {(): 1})
    rec(0, ())
    return QSymFn("M", out)


def gamma_char(alpha):
    """Character on the P basis: 1/(k_1! ... k_s!) for weakly increasing
    words with multiplicities k_i, zero otherwise."""
    alpha = tuple(alpha)
    if any(alpha[i] > alpha[i + 1] for i in range(len(alpha) - 1)):
        return Fraction(0)
    denom = 1
    run = 1
    for i in range(1, len(alpha)):
        if alpha[i] == alpha[i - 1]:
            run += 1
        else:
            denom *= factorial(run)
            run = 1
    denom *= factorial(run) if alpha else 1
    return Fraction(1, denom)


def theta_map(f):
    """The universal morphism on the 0/1-word subalgebra (P-basis parts in
    {1, 2}): theta(P_beta) = sum over block splits of beta of the product
    of gamma on the blocks, times M of the block lengths."""
    if f.basis == "U":
        f = u_shift(f)
    if f.basis != "P":
        raise ValueError("theta_map expects the P or U basis")
    out = {}
    for beta, c in f.coeffs.items():
        if any(a not in (1, 2) for a in beta):
            raise ValueError("theta_map is defined on parts in {1,2}, got %s" % (beta,))
        if not beta:
            out[()] = out.get((), 0) + c
            continue
        for blocks in _splits(beta):
            coeff = Fraction(c, 1)
            for b in blocks:
                coeff *= gamma_char(b)
                if not coeff:
                    break
            if not coeff:
                continue
            word = tuple(len(b) for b in blocks)
            out[word] = out.get(word, 0) + coeff
    return QSymFn("M", out)


def _splits(word):
    """All cuts of `word` into consecutive nonempty blocks."""
    n = len(word)
    if n == 0:
        yield ()
        return
    for cutset in range(1 << (n - 1)):
        blocks = []
        start = 0
        for i in range(n - 1):
            if cutset >> i & 1:
                blocks.append(word[start:i + 1])
                start = i + 1
        blocks.append(word[start:])
        yield tuple(blocks)
