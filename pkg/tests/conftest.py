"""Shared corpus of small polymatroids for property tests."""

import random

import pytest

from polyinv import pmcore
from polyinv.documents import parse_document
import polyinv.data as data


def all_polymatroids(n, max_rank):
    """Every valid polymatroid on n elements with ranks <= max_rank
    (exhaustive over rank tables, filtered by the axioms)."""
    size = (1 << n) - 1  # nonempty subsets
    out = []

    def rec(tables, mask):
        if mask > size:
            for rk in tables:
                pm = pmcore.Polymatroid(n, (0,) + rk)
                if pmcore.validate(pm) is None:
                    out.append(pm)
            return
        rec([t + (v,) for t in tables for v in range(max_rank + 1)], mask + 1)

    rec([()], 1)
    return out


def random_vector_matroid(rng, n, dim):
    subspaces = tuple(
        (tuple(rng.randrange(-2, 3) for _ in range(dim)),) for _ in range(n)
    )
    return pmcore.from_vectors(pmcore.VectorConfig(dim, subspaces))


def random_graph_pm(rng, n_edges, n_vertices):
    edges = tuple(
        (rng.randrange(n_vertices), rng.randrange(n_vertices))
        for _ in range(n_edges)
    )
    return pmcore.from_graph(pmcore.Graph(n_vertices, edges))


def random_polymatroid(rng, n):
    """A random polymatroid: sum of a few vector polymatroids with
    multi-dimensional subspaces (ranks can exceed 1)."""
    dim = n + 1
    subspaces = tuple(
        tuple(
            tuple(rng.randrange(-2, 3) for _ in range(dim))
            for _ in range(rng.randrange(0, 3))
        )
        for _ in range(n)
    )
    return pmcore.from_vectors(pmcore.VectorConfig(dim, subspaces))


def build_corpus():
    """Exhaustive n <= 2, plus uniforms, small graphs and vector
    configurations up to n = 5 (seeded, so the corpus is stable)."""
    rng = random.Random(20240815)
    corpus = []
    corpus += all_polymatroids(1, 2)
    corpus += all_polymatroids(2, 2)
    for n in range(1, 6):
        for r in range(n + 1):
            corpus.append(pmcore.uniform(r, n))
    for n in range(3, 6):
        for _ in range(4):
            corpus.append(random_graph_pm(rng, n, 4))
            corpus.append(random_vector_matroid(rng, n, 3))
            corpus.append(random_polymatroid(rng, n))
    return corpus


_CORPUS = None


@pytest.fixture(scope="session")
def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = build_corpus()
    return _CORPUS


@pytest.fixture(scope="session")
def matroid_corpus(corpus):
    return [pm for pm in corpus if pmcore.is_matroid(pm)]


@pytest.fixture(scope="session")
def fixture_pm():
    def load(name):
        return parse_document(data.load_fixture(name))

    return load
