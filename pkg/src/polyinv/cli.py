"""Command-line interface.

    polyinv <subcommand> --input PATH|- [--json] [--max-n K]
            [--max-chains K] [--grid-denom N] [--truncate D]

Subcommands: validate, p, h, g, tutte, rankgen, rees, f, tau, xi,
theta, dual, sum, decomp-check, examples.

Exit codes: 0 success, 2 validation/check failure, 64 parse error,
65 cap exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import documents, invariants, pmcore, polytope, special
from .invariants import BivariatePoly, SymFnQT
from .qsym import QSymFn, render_qsym
from .schur import SymFn, render_sym

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_PARSE = 64
EXIT_CAP = 65


def _coeff_json(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def value_to_json(value):
    """Machine-readable term list for any rendered value type."""
    if isinstance(value, SymFn):
        terms = [
            [list(lam), _coeff_json(c)]
            for lam, c in sorted(value.coeffs.items())
        ]
        return {"kind": "sym", "terms": terms}
    if isinstance(value, SymFnQT):
        terms = [
            [list(lam), q, t, _coeff_json(c)]
            for (lam, q, t), c in sorted(value.coeffs.items())
        ]
        return {"kind": "sym_qt", "terms": terms}
    if isinstance(value, QSymFn):
        terms = [
            [list(word), _coeff_json(c)] for word, c in sorted(value.coeffs.items())
        ]
        return {"kind": "qsym", "basis": value.basis, "terms": terms}
    if isinstance(value, BivariatePoly):
        terms = [
            [a, b, _coeff_json(c)] for (a, b), c in sorted(value.coeffs.items())
        ]
        return {"kind": "poly", "vars": list(value.vars), "terms": terms}
    raise TypeError("cannot serialize %r" % type(value).__name__)


def value_from_json(doc):
    """Inverse of value_to_json."""
    kind = doc["kind"]
    if kind == "sym":
        return SymFn(
            {tuple(lam): documents.parse_coeff(c) for lam, c in doc["terms"]}
        )
    if kind == "sym_qt":
        return SymFnQT(
            {
                (tuple(lam), q, t): documents.parse_coeff(c)
                for lam, q, t, c in doc["terms"]
            }
        )
    if kind == "qsym":
        return QSymFn(
            doc["basis"],
            {tuple(word): documents.parse_coeff(c) for word, c in doc["terms"]},
        )
    if kind == "poly":
        return BivariatePoly(
            {(a, b): documents.parse_coeff(c) for a, b, c in doc["terms"]},
            vars=tuple(doc["vars"]),
            laurent=any(a < 0 or b < 0 for a, b, _ in doc["terms"]),
        )
    raise ValueError("unknown kind: %r" % (kind,))


def render_value(value):
    if isinstance(value, SymFn):
        return render_sym(value)
    if isinstance(value, QSymFn):
        return render_qsym(value)
    return value.render()


def _load_pm(path, max_n):
    doc = documents.load_document(path)
    return documents.parse_document(doc, max_n)


def _emit(value, as_json, out):
    if as_json:
        out.write(json.dumps(value_to_json(value)) + "\n")
    else:
        out.write(render_value(value) + "\n")


def _cmd_validate(args, out):
    doc = documents.load_document(args.input)
    pm = documents.parse_document(doc, args.max_n)
    bad = pmcore.validate(pm)
    if bad is None:
        out.write("ok: valid polymatroid on %d elements, rank %d\n" % (pm.n, pm.total_rank))
        return EXIT_OK
    subsets = ", ".join(
        "{%s}" % ",".join(map(str, pmcore.elements_of(m))) for m in bad.subsets
    )
    out.write("violation: %s axiom fails on %s\n" % (bad.axiom, subsets))
    return EXIT_FAIL


def _cmd_invariant(args, out):
    pm = _load_pm(args.input, args.max_n)
    name = args.subcommand
    if name == "p":
        value = invariants.p_invariant(pm, args.max_n)
    elif name == "h":
        value = invariants.h_invariant(pm, args.max_n)
    elif name == "g":
        value = invariants.g_invariant(pm, args.max_chains)
    elif name == "tutte":
        value = invariants.tutte(pm)
    elif name == "rankgen":
        value = invariants.rank_gen(pm)
    elif name == "f":
        value = special.bjr_f(pm)
    elif name == "tau":
        value = special.tau(invariants.g_invariant(pm, args.max_chains))
    elif name == "xi":
        value = special.xi(invariants.g_invariant(pm, args.max_chains))
    elif name == "theta":
        value = special.theta_map(invariants.g_invariant(pm, args.max_chains))
    else:
        raise AssertionError(name)
    _emit(value, args.json, out)
    return EXIT_OK


def _cmd_rees(args, out):
    pm = _load_pm(args.input, args.max_n)
    k = args.truncate if args.truncate is not None else 3
    series = invariants.rees_series(pm, k, args.max_n)
    if args.json:
        out.write(json.dumps([value_to_json(h) for h in series]) + "\n")
    else:
        for i, h in enumerate(series):
            out.write("y^%d: %s\n" % (i, h.render()))
    return EXIT_OK


def _cmd_pm_op(args, out):
    if args.subcommand == "dual":
        pm = _load_pm(args.input, args.max_n)
        result = pmcore.dual(pm)
    else:
        if len(args.inputs) < 1:
            raise documents.DocumentError("sum needs at least one --input")
        parts = [_load_pm(p, args.max_n) for p in args.inputs]
        result = parts[0]
        for p in parts[1:]:
            result = pmcore.direct_sum(result, p)
        pmcore.check_cap(result.n, args.max_n)
    out.write(json.dumps(documents.to_rank_table(result)) + "\n")
    return EXIT_OK


def _cmd_decomp_check(args, out):
    doc = documents.load_document(args.input)
    dec = documents.parse_decomposition(doc, args.max_n)
    for label, pm in [("target", dec.target)] + [
        ("piece %d" % i, pm) for i, (pm, _) in enumerate(dec.pieces)
    ]:
        bad = pmcore.validate(pm)
        if bad is not None:
            out.write("violation: %s fails the %s axiom\n" % (label, bad.axiom))
            return EXIT_FAIL
    ok_ind, witness = polytope.check_indicator_relation(dec, args.grid_denom)
    ok_g, residue = polytope.check_valuative_g(dec, args.max_chains)
    out.write(
        "indicator identity on 1/%d grid: %s\n"
        % (args.grid_denom, "holds" if ok_ind else "fails at %s" % (witness,))
    )
    out.write(
        "G valuative identity: %s\n"
        % ("holds" if ok_g else "fails, residue %s" % render_qsym(residue))
    )
    return EXIT_OK if ok_ind and ok_g else EXIT_FAIL


def _cmd_examples(args, out):
    from . import data

    mismatches = data.check_goldens(out)
    if mismatches:
        out.write("%d fixture(s) differ from goldens\n" % mismatches)
        return EXIT_FAIL
    out.write("all fixtures match stored goldens\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyinv", description="Exact polymatroid invariants."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    single = [
        "validate", "p", "h", "g", "tutte", "rankgen", "rees",
        "f", "tau", "xi", "theta", "dual", "decomp-check",
    ]
    for name in single + ["sum", "examples"]:
        sp = sub.add_parser(name)
        if name == "sum":
            sp.add_argument("--input", action="append", dest="inputs",
                            default=[], metavar="PATH")
        elif name != "examples":
            sp.add_argument("--input", required=True, metavar="PATH|-")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--max-n", type=int, default=None,
                        help="override the ground-set size cap (acknowledges cost)")
        sp.add_argument("--max-chains", type=int, default=None,
                        help="override the chain-enumeration cap (acknowledges cost)")
        if name == "decomp-check":
            sp.add_argument("--grid-denom", type=int, default=2)
        if name == "rees":
            sp.add_argument("--truncate", type=int, default=None,
                            help="number of Rees series terms (default 3)")
    return parser


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.subcommand == "validate":
            return _cmd_validate(args, out)
        if args.subcommand in ("p", "h", "g", "tutte", "rankgen", "f",
                               "tau", "xi", "theta"):
            return _cmd_invariant(args, out)
        if args.subcommand == "rees":
            return _cmd_rees(args, out)
        if args.subcommand in ("dual", "sum"):
            return _cmd_pm_op(args, out)
        if args.subcommand == "decomp-check":
            return _cmd_decomp_check(args, out)
        if args.subcommand == "examples":
            return _cmd_examples(args, out)
        raise AssertionError(args.subcommand)
    except (documents.DocumentError, FileNotFoundError) as exc:
        out.write("parse error: %s\n" % exc)
        return EXIT_PARSE
    except pmcore.CapExceeded as exc:
        out.write("cap exceeded: %s\n" % exc)
        return EXIT_CAP
    except ValueError as exc:
        out.write("error: %s\n" % exc)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
