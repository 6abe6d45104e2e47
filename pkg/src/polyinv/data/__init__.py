"""Shipped fixtures (worked examples as JSON documents) and the golden
outputs they regenerate.  Fixture files live next to this module;
goldens.json maps "fixture:operation" to the canonical rendering."""

import json
import os

from .. import documents, invariants, special
from ..polytope import check_indicator_relation, check_valuative_g
from ..qsym import render_qsym
from ..schur import render_sym

_HERE = os.path.dirname(__file__)

# which operations each fixture is a golden for
MANIFEST = [
    ("loop", ["p", "g", "tutte", "h"]),
    ("coloop", ["p", "g", "tutte", "h"]),
    ("mgon3", ["p", "tutte", "g"]),
    ("mgon4", ["p", "tutte", "g"]),
    ("mgon5", ["p", "tutte", "g"]),
    ("mgon6", ["p", "tutte", "g"]),
    ("multiedge2", ["p", "h", "g"]),
    ("multiedge3", ["p", "h", "g"]),
    ("multiedge4", ["p", "h", "g"]),
    ("multiedge5", ["p", "h", "g"]),
    ("gray1", ["tutte"]),
    ("gray2", ["tutte"]),
    ("points6x", ["p", "g", "f"]),
    ("points6y", ["p", "g", "f"]),
    ("points7x", ["p", "g", "tutte"]),
    ("points7y", ["p", "g", "tutte"]),
    ("u24split", ["decomp"]),
]


def fixture_path(name):
    return os.path.join(_HERE, name + ".json")


def load_fixture(name):
    with open(fixture_path(name)) as fh:
        return json.load(fh)


def compute_output(name, op):
    """Recompute one golden rendering from its fixture."""
    doc = load_fixture(name)
    if op == "decomp":
        dec = documents.parse_decomposition(doc)
        ok_ind, _ = check_indicator_relation(dec, denom=2)
        ok_g, _ = check_valuative_g(dec)
        return "indicator=%s valuative=%s" % (ok_ind, ok_g)
    pm = documents.parse_document(doc)
    if op == "p":
        return render_sym(invariants.p_invariant(pm))
    if op == "h":
        return invariants.h_invariant(pm).render()
    if op == "g":
        return render_qsym(invariants.g_invariant(pm))
    if op == "tutte":
        return invariants.tutte(pm).render()
    if op == "f":
        return render_qsym(special.bjr_f(pm))
    raise ValueError("unknown operation: %r" % (op,))


def regenerate_goldens():
    out = {}
    for name, ops in MANIFEST:
        for op in ops:
            out["%s:%s" % (name, op)] = compute_output(name, op)
    return out


def load_goldens():
    with open(os.path.join(_HERE, "goldens.json")) as fh:
        return json.load(fh)


def check_goldens(out):
    """Recompute every fixture and diff against goldens.json; writes a
    line per check to `out`, returns the number of mismatches."""
    stored = load_goldens()
    mismatches = 0
    for name, ops in MANIFEST:
        for op in ops:
            key = "%s:%s" % (name, op)
            got = compute_output(name, op)
            want = stored.get(key)
            if got == want:
                out.write("ok %s\n" % key)
            else:
                mismatches += 1
                out.write("MISMATCH %s\n  stored:   %r\n  computed: %r\n" % (key, want, got))
    return mismatches
