"""JSON document formats for polymatroids and decompositions.

Documents are plain dicts with a "type" tag:
    {"type": "rank_table", "n": N, "rank": {"0,1": 2, ...}}   ("" keys the empty set)
    {"type": "graph", "vertices": N, "edges": [[u, v], ...]}
    {"type": "vectors", "dim": M, "subspaces": [[[x, y, ...], ...], ...]}
    {"type": "uniform", "r": R, "n": N}
    {"type": "op", "op": "dual"|"sum"|"restrict"|"contract", "args": [...]}

Vector entries may be ints, "p/q" strings, or [num, den] pairs.
Decomposition fixtures look like
    {"target": <doc>, "pieces": [{"pm": <doc>, "coeff": "p/q"}, ...]}.
"""

import json
from fractions import Fraction

from . import pmcore
from .polytope import SignedDecomposition

__all__ = [
    "DocumentError",
    "parse_document",
    "parse_decomposition",
    "to_rank_table",
    "load_document",
    "parse_coeff",
]


class DocumentError(ValueError):
    """Malformed input document."""


def parse_coeff(x):
    """An exact rational from an int, "p/q" string, or [num, den] pair."""
    if isinstance(x, bool):
        raise DocumentError("boolean is not a number: %r" % (x,))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise DocumentError("bad rational string: %r" % (x,))
    if isinstance(x, list) and len(x) == 2 and all(isinstance(y, int) for y in x):
        if x[1] == 0:
            raise DocumentError("zero denominator: %r" % (x,))
        return Fraction(x[0], x[1])
    raise DocumentError("bad rational value: %r" % (x,))


def _subset_key(key, n):
    """Parse a comma-separated element list key like "0,2,3"."""
    if key == "":
        return 0
    try:
        elements = [int(p) for p in key.split(",")]
    except ValueError:
        raise DocumentError("bad subset key: %r" % (key,))
    if any(not 0 <= e < n for e in elements):
        raise DocumentError("element out of range in subset key: %r" % (key,))
    if len(set(elements)) != len(elements):
        raise DocumentError("repeated element in subset key: %r" % (key,))
    return pmcore.mask_of(elements)


def _parse_rank_table(doc, max_n):
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise DocumentError("rank_table needs a nonnegative integer 'n'")
    pmcore.check_cap(n, max_n)
    table = doc.get("rank")
    if not isinstance(table, dict):
        raise DocumentError("rank_table needs a 'rank' map")
    rk = [None] * (1 << n)
    for key, value in table.items():
        if not isinstance(value, int):
            raise DocumentError("rank of %r is not an integer" % (key,))
        mask = _subset_key(key, n)
        if rk[mask] is not None:
            raise DocumentError("duplicate subset key: %r" % (key,))
        rk[mask] = value
    missing = [m for m in range(1 << n) if rk[m] is None]
    if missing:
        raise DocumentError(
            "rank table is missing %d subsets (first: %r)"
            % (len(missing), ",".join(map(str, pmcore.elements_of(missing[0]))))
        )
    return pmcore.Polymatroid(n, tuple(rk))


def _parse_subset_arg(arg):
    if not isinstance(arg, list) or not all(isinstance(e, int) for e in arg):
        raise DocumentError("subset argument must be a list of integers")
    return arg


def _parse_op(doc, max_n):
    op = doc.get("op")
    args = doc.get("args")
    if not isinstance(args, list):
        raise DocumentError("op document needs an 'args' list")
    if op == "dual":
        if len(args) != 1:
            raise DocumentError("dual takes one argument")
        return pmcore.dual(parse_document(args[0], max_n))
    if op == "sum":
        if len(args) < 1:
            raise DocumentError("sum takes at least one argument")
        parts = [parse_document(a, max_n) for a in args]
        out = parts[0]
        for p in parts[1:]:
            out = pmcore.direct_sum(out, p)
        pmcore.check_cap(out.n, max_n)
        return out
    if op in ("restrict", "contract"):
        if len(args) != 2:
            raise DocumentError("%s takes a document and a subset" % op)
        pm = parse_document(args[0], max_n)
        subset = _parse_subset_arg(args[1])
        fn = pmcore.restrict if op == "restrict" else pmcore.contract
        return fn(pm, subset)
    raise DocumentError("unknown op: %r" % (op,))


def parse_document(doc, max_n=None):
    """A Polymatroid from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    kind = doc.get("type")
    if kind == "rank_table":
        return _parse_rank_table(doc, max_n)
    if kind == "graph":
        vertices = doc.get("vertices")
        edges = doc.get("edges")
        if not isinstance(vertices, int) or not isinstance(edges, list):
            raise DocumentError("graph needs integer 'vertices' and an 'edges' list")
        try:
            g = pmcore.Graph(vertices, tuple(tuple(e) for e in edges))
        except (ValueError, TypeError) as exc:
            raise DocumentError(str(exc))
        return pmcore.from_graph(g, max_n)
    if kind == "vectors":
        dim = doc.get("dim")
        subspaces = doc.get("subspaces")
        if not isinstance(dim, int) or not isinstance(subspaces, list):
            raise DocumentError("vectors needs integer 'dim' and a 'subspaces' list")
        parsed = tuple(
            tuple(tuple(parse_coeff(x) for x in vec) for vec in gens)
            for gens in subspaces
        )
        try:
            cfg = pmcore.VectorConfig(dim, parsed)
        except ValueError as exc:
            raise DocumentError(str(exc))
        return pmcore.from_vectors(cfg, max_n)
    if kind == "uniform":
        r, n = doc.get("r"), doc.get("n")
        if not isinstance(r, int) or not isinstance(n, int):
            raise DocumentError("uniform needs integers 'r' and 'n'")
        return pmcore.uniform(r, n, max_n)
    if kind == "op":
        return _parse_op(doc, max_n)
    raise DocumentError("unknown document type: %r" % (kind,))


def parse_decomposition(doc, max_n=None):
    """A SignedDecomposition from a decomposition fixture document."""
    if not isinstance(doc, dict) or "target" not in doc or "pieces" not in doc:
        raise DocumentError("decomposition needs 'target' and 'pieces'")
    target = parse_document(doc["target"], max_n)
    pieces = []
    for entry in doc["pieces"]:
        if not isinstance(entry, dict) or "pm" not in entry or "coeff" not in entry:
            raise DocumentError("each piece needs 'pm' and 'coeff'")
        pieces.append((parse_document(entry["pm"], max_n), parse_coeff(entry["coeff"])))
    try:
        return SignedDecomposition(target, tuple(pieces))
    except ValueError as exc:
        raise DocumentError(str(exc))


def to_rank_table(pm):
    """Serialize any Polymatroid back to a rank_table document."""
    table = {}
    for mask in range(1 << pm.n):
        key = ",".join(str(e) for e in pmcore.elements_of(mask))
        table[key] = pm.rk[mask]
    return {"type": "rank_table", "n": pm.n, "rank": table}


def load_document(path, max_n=None):
    """Parse a polymatroid document from a file path or '-' for stdin."""
    import sys

    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path) as fh:
            raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON: %s" % exc)
    return doc
