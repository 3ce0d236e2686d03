"""Command line entry point: ``hgops verify | homology | pair``.

Exit status: 0 when every check passes, 1 on a mathematical failure,
2 on bad input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .algebra import BUILTIN, FdAlgebra, ValidationError, nonassociative_example
from .barcx import algebra_letters, cochain_letters, cup1
from .brace import hochschild_mc
from .cyclic import CyclicOps, CyclicPairing, NotNormalized, homology_report
from .exactlin import CompositionNonzero
from .pairing import XPairing
from .verify import SUITES, RunConfig, run_suites
from .xcomplex import BarX

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

ALGEBRAS = dict(BUILTIN, nonassoc=nonassociative_example)


class ParseError(ValueError):
    pass


# ----------------------------------------------------------------------
# input

def parse_scalar(s, where):
    if isinstance(s, bool) or not isinstance(s, (int, str)):
        raise ParseError("%s: scalar must be an integer or a \"p/q\" string, got %r" % (where, s))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError("%s: bad scalar %r" % (where, s)) from None


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError("%s: %s" % (path, e.strerror)) from None
    except json.JSONDecodeError as e:
        raise ParseError("%s: line %d column %d: %s" % (path, e.lineno, e.colno, e.msg)) from None


def algebra_from_json(doc, where="algebra"):
    """Build and validate an FdAlgebra from
    {name, dimension, basis, unit, mul: [[i, j, k, "p/q"], ...]} with
    0-based basis indices; ``unit`` is a coefficient vector."""
    if not isinstance(doc, dict):
        raise ParseError("%s: expected an object" % where)
    for k in ("dimension", "basis", "unit", "mul"):
        if k not in doc:
            raise ParseError("%s: missing field %r" % (where, k))
    basis = doc["basis"]
    n = doc["dimension"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("%s.basis: expected a list of strings" % where)
    if n != len(basis):
        raise ValidationError("%s.dimension: %r but %d basis names" % (where, n, len(basis)))
    unit = doc["unit"]
    if not isinstance(unit, list) or len(unit) != n:
        raise ValidationError("%s.unit: expected a vector of length %d" % (where, n))
    mul = {}
    for row, entry in enumerate(doc["mul"]):
        loc = "%s.mul[%d]" % (where, row)
        if not isinstance(entry, list) or len(entry) != 4:
            raise ParseError("%s: expected [i, j, k, coefficient]" % loc)
        i, j, k = entry[:3]
        for idx in (i, j, k):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < n:
                raise ValidationError("%s: index %r out of range 0..%d" % (loc, idx, n - 1))
        c = parse_scalar(entry[3], loc)
        slot = mul.setdefault((basis[i], basis[j]), {})
        slot[basis[k]] = slot.get(basis[k], 0) + c
    u = {basis[i]: parse_scalar(c, "%s.unit[%d]" % (where, i)) for i, c in enumerate(unit)}
    A = FdAlgebra(basis, mul, u, name=doc.get("name", "A"))
    return A.validate()


def load_algebra(spec):
    if spec in ALGEBRAS:
        return ALGEBRAS[spec]().validate()
    return algebra_from_json(_read_json(spec), where=spec)


def parse_cochain_label(label, A, where):
    """"x,y>z" is the basis cochain sending x (x) y to z; ">1" is the
    0-cochain 1."""
    if not isinstance(label, str) or label.count(">") != 1:
        raise ParseError("%s: cochain label %r is not of the form 'a,b>c'" % (where, label))
    ins, out = label.split(">")
    ins = tuple(ins.split(",")) if ins else ()
    for l in ins + (out,):
        if l not in A.labels:
            raise ParseError("%s: unknown basis label %r" % (where, l))
    return ins, out


def chain_from_json(doc, A, where="chain"):
    """Parse {flavor, components: {degree: [[labels..., "p/q"], ...]}}.

    flavor "algebra": labels are basis names of A, the word a_0..a_n has
    degree n.  flavor "cochain": labels are cochain labels (see
    parse_cochain_label), the word D_0..D_m has degree m."""
    if not isinstance(doc, dict) or "flavor" not in doc or "components" not in doc:
        raise ParseError("%s: expected {flavor, components}" % where)
    flavor = doc["flavor"]
    if flavor not in ("algebra", "cochain"):
        raise ParseError("%s.flavor: expected 'algebra' or 'cochain', got %r" % (where, flavor))
    if not isinstance(doc["components"], dict):
        raise ParseError("%s.components: expected an object keyed by degree" % where)
    out = {}
    for deg, rows in doc["components"].items():
        try:
            n = int(deg)
        except ValueError:
            raise ParseError("%s.components: degree %r is not an integer" % (where, deg)) from None
        for r, row in enumerate(rows):
            loc = "%s.components[%s][%d]" % (where, deg, r)
            if not isinstance(row, list) or len(row) < 2:
                raise ParseError("%s: expected [labels..., coefficient]" % loc)
            labels, c = row[:-1], parse_scalar(row[-1], loc)
            if flavor == "algebra":
                for l in labels:
                    if l not in A.labels:
                        raise ParseError("%s: unknown basis label %r" % (loc, l))
                w = tuple(labels)
            else:
                w = tuple(parse_cochain_label(l, A, loc) for l in labels)
            if len(w) - 1 != n:
                raise ParseError("%s: word of length %d listed in degree %d" % (loc, len(w), n))
            out[w] = out.get(w, 0) + c
    return flavor, {w: c for w, c in out.items() if c}


# ----------------------------------------------------------------------
# output

def scalar_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def jsonable(x):
    """Exact, deterministic JSON rendering of witnesses and chains."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return scalar_str(x)
    if isinstance(x, dict):
        items = sorted(((jsonable(k), jsonable(v)) for k, v in x.items()), key=repr)
        return [[k, v] for k, v in items]
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return repr(x)


def cochain_label(key):
    ins, out = key
    return "%s>%s" % (",".join(ins), out)


def chain_to_json(flavor, x):
    comps = {}
    for w, c in sorted(x.items(), key=repr):
        labels = list(w) if flavor == "algebra" else [cochain_label(k) for k in w]
        comps.setdefault(str(len(w) - 1), []).append(labels + [scalar_str(c)])
    return {"flavor": flavor, "components": dict(sorted(comps.items(), key=lambda t: int(t[0])))}


def emit(doc, text, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        stream.write(text)


# ----------------------------------------------------------------------
# commands

def cmd_verify(A, cfg, fmt, stream):
    results = run_suites(A, cfg)
    failed = any(r.status == "FAIL" for r in results)
    doc = {
        "algebra": A.name,
        "config": {"truncation": cfg.truncation, "arity": cfg.arity, "nmax": cfg.nmax, "seed": cfg.seed},
        "status": "FAIL" if failed else "PASS",
        "suites": [
            {"name": r.name, "status": r.status,
             "checks": [{"name": c.name, "status": c.status, "cases": c.cases,
                         "failures": c.failures, "witness": jsonable(c.witness),
                         **({"reason": c.skipped} if c.skipped else {})}
                        for c in r.checks]}
            for r in results
        ],
    }
    lines = ["verify %s  (L=%d, arity=%d)" % (A.name, cfg.truncation, cfg.arity)]
    for r in results:
        lines.append("%-10s %s" % (r.name, r.status))
        for c in r.checks:
            tail = ""
            if c.status == "FAIL":
                tail = "  %d/%d failed, witness %s" % (c.failures, c.cases, json.dumps(jsonable(c.witness)))
            elif c.status == "SKIP":
                tail = "  (%s)" % c.skipped
            else:
                tail = "  %d cases" % c.cases
            lines.append("    %-4s %s%s" % (c.status, c.name, tail))
    lines.append("overall: %s" % doc["status"])
    emit(doc, "\n".join(lines) + "\n", fmt, stream)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_homology(A, cfg, fmt, stream):
    try:
        rep = homology_report(A, cfg.nmax)
    except CompositionNonzero:
        doc = {"algebra": A.name, "error": "the differentials do not square to zero"}
        emit(doc, "homology of %s: %s\n" % (A.name, doc["error"]), fmt, stream)
        return EXIT_FAIL
    doc = dict(rep)
    lines = ["homology of %s  (chains up to degree %d)" % (A.name, cfg.nmax),
             "  n  HH  HC  HH(X)  HC(X)  trustworthy"]
    for row in rep["degrees"]:
        lines.append("%3d %3d %3d %6d %6d  %s" % (row["n"], row["HH"], row["HC"], row["HH_via_X"],
                                                 row["HC_via_X"], "yes" if row["trustworthy"] else "no"))
    lines.append("HH^n(A, A), n < 2: %s" % ", ".join(map(str, rep["HH_cohomology"])))
    lines.append("dual pipelines agree: %s" % ("true" if rep["agree"] else "false"))
    emit(doc, "\n".join(lines) + "\n", fmt, stream)
    return EXIT_OK if rep["agree"] else EXIT_FAIL


def cmd_pair(A, cfg, D_path, a_path, fmt, stream):
    fD, D = chain_from_json(_read_json(D_path), A, where=D_path)
    fa, a = chain_from_json(_read_json(a_path), A, where=a_path)
    if fD != "cochain" or fa != "algebra":
        raise ParseError("pair expects a cochain chain D and an algebra chain a")
    S = hochschild_mc(A)
    arity = max([len(k[0]) for w in D for k in w] + [cfg.arity])
    WA, WV = algebra_letters(A), cochain_letters(S, arity)
    oA, oV = CyclicOps(WA), CyclicOps(WV)
    for w in a:
        if oA.is_degenerate(w):
            raise NotNormalized("a: word %r carries the unit in a slot >= 1" % (w,))
    for w in D:
        if oV.is_degenerate(w):
            raise NotNormalized("D: word %r carries the unit in a slot >= 1" % (w,))
    XA, XV = BarX(WA), BarX(WV)
    CP = CyclicPairing(XPairing(XV, XA, XA, lambda key: cup1(S, key[0], key[1])), oV, oA)
    out = CP.bb_pair(D, a)
    residual = {}
    for wD, u in D.items():
        for wa, v in a.items():
            for k, c in CP.bb_residual(wD, wa).items():
                residual[k] = residual.get(k, 0) + u * v * c
    residual = {k: c for k, c in residual.items() if c}
    doc = {"result": chain_to_json("algebra", out), "residual_zero": not residual,
           "residual": chain_to_json("algebra", residual)}
    lines = ["D cup a:"]
    for w, c in sorted(out.items(), key=repr):
        lines.append("  %s  %s" % (scalar_str(c), " ".join(w)))
    if not out:
        lines.append("  0")
    lines.append("chain-map residual: %s" % ("zero" if not residual else "NONZERO"))
    emit(doc, "\n".join(lines) + "\n", fmt, stream)
    return EXIT_OK if not residual else EXIT_FAIL


# ----------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="hgops", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", default="dual",
                        help="path to an algebra JSON file, or one of: %s" % ", ".join(sorted(ALGEBRAS)))
    common.add_argument("--truncation", type=int, default=3, help="bar word length L (default 3)")
    common.add_argument("--arity", type=int, default=2, help="cochain arity bound (default 2)")
    common.add_argument("--nmax", type=int, default=4, help="chain degree bound (default 4)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled windows (all built-in windows are exhaustive)")
    common.add_argument("--suite", default="", help="comma separated subset of: %s" % ",".join(SUITES))
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run the verification suites")
    sub.add_parser("homology", parents=[common], help="HH and HC dimensions by two pipelines")
    pp = sub.add_parser("pair", parents=[common], help="pair a cochain chain D with an algebra chain a")
    pp.add_argument("D", help="chain JSON of flavor 'cochain'")
    pp.add_argument("a", help="chain JSON of flavor 'algebra'")
    return p


def main(argv=None, stream=None):
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        suites = tuple(s for s in args.suite.split(",") if s)
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise ParseError("unknown suite(s): %s" % ", ".join(unknown))
        try:
            cfg = RunConfig(args.truncation, args.arity, args.nmax, args.seed, suites)
        except ValueError as e:
            raise ValidationError(str(e)) from None
        A = load_algebra(args.algebra)
        if args.command == "verify":
            return cmd_verify(A, cfg, args.format, stream)
        if args.command == "homology":
            return cmd_homology(A, cfg, args.format, stream)
        return cmd_pair(A, cfg, args.D, args.a, args.format, stream)
    except (ParseError, ValidationError, NotNormalized) as e:
        sys.stderr.write("hgops: error: %s\n" % e)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
