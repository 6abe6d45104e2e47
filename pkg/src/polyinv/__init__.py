"""Exact invariants of discrete polymatroids: the symmetric functions
P[X] and H[X](q,t), the quasi-symmetric valuative invariant G[X], and
their specializations (rank generating function, Tutte polynomial,
Billera-Jia-Reiner F), all in exact rational arithmetic."""

from .pmcore import (
    CapExceeded,
    Graph,
    Polymatroid,
    VectorConfig,
    Violation,
    contract,
    delete,
    direct_sum,
    dual,
    from_graph,
    from_vectors,
    is_matroid,
    relabel,
    restrict,
    uniform,
    validate,
)
from .schur import SymFn, render_sym, s, sym_one, sym_zero
from .qsym import QSymFn, p_antipode, p_coproduct, p_product, qsym, render_qsym
from .invariants import (
    BivariatePoly,
    SymFnQT,
    g_invariant,
    h_invariant,
    p_invariant,
    rank_gen,
    rees_series,
    tutte,
)
from .special import bjr_f, tau, theta_map, xi, zeta_mat
from .polytope import (
    SignedDecomposition,
    check_indicator_relation,
    check_valuative_g,
    contains,
    rank_seq_multiplicity,
    vertex_of_permutation,
)
from .documents import parse_decomposition, parse_document, to_rank_table

__version__ = "0.1.0"
