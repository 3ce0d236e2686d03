"""
Verification suites run by ``hgops verify``.

Every suite is exhaustive over a window fixed by a RunConfig and reports a
list of Check records: the number of cases looked at, the number that
failed and a witness for the first failure.  All arithmetic is exact, so a
check passes only when every residual is identically zero.
"""

from dataclasses import dataclass, field
from itertools import product

from .algebra import cochain_basis
from .barcx import (algebra_letters, bar_square, check_leibniz, cochain_letters, cup1,
                    cup1_explicit, cup1_leibniz_residual, words)
from .brace import (HochschildBraces, MaurerCartanViolated, cup_words, distributivity_residual,
                    hochschild_mc, homotopy_leibniz_residual, pre_jacobi_exhaustive)
from .cyclic import (HALF_FREE, CyclicOps, CyclicPairing, NotNormalized, check_IJ, check_IJ_homology,
                     check_cyclic_identities, cyclic_keys, normalized_pair, quillen_residuals,
                     sn_cross_terms)
from .graded import addto, sub
from .pairing import EtaExplicit, Puschnigg, SignMismatch, XPairing, eta_residual, pushforward_forms, tensor_d
from .xcomplex import BarX, apply_lin, connection_residuals, sdr_residuals


@dataclass(frozen=True)
class RunConfig:
    truncation: int = 3
    arity: int = 2
    nmax: int = 4
    seed: int = 0
    suites: tuple = ()

    def __post_init__(self):
        for name in ("truncation", "arity", "nmax"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be >= 1" % name)


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: int = 0
    witness: object = None
    skipped: str = ""

    def fail(self, witness):
        self.failures += 1
        if self.witness is None:
            self.witness = witness

    @property
    def status(self):
        if self.skipped:
            return "SKIP"
        return "PASS" if self.failures == 0 else "FAIL"


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def status(self):
        states = {c.status for c in self.checks}
        if "FAIL" in states:
            return "FAIL"
        return "SKIP" if states == {"SKIP"} else "PASS"


class Context:
    """Lazily built objects shared by the suites for one algebra."""

    def __init__(self, A, cfg):
        self.A, self.cfg = A, cfg
        self._S = None
        self._cache = {}

    @property
    def S(self):
        if self._S is None:
            self._S = hochschild_mc(self.A)
        return self._S

    def get(self, name, build):
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    @property
    def WA(self):
        return self.get("WA", lambda: algebra_letters(self.A))

    @property
    def WV(self):
        return self.get("WV", lambda: cochain_letters(self.S, self.cfg.arity))

    @property
    def XA(self):
        return self.get("XA", lambda: BarX(self.WA))

    @property
    def XV(self):
        return self.get("XV", lambda: BarX(self.WV))

    @property
    def oA(self):
        return self.get("oA", lambda: CyclicOps(self.WA))

    @property
    def oV(self):
        return self.get("oV", lambda: CyclicOps(self.WV))

    def cup1(self, key):
        return cup1(self.S, key[0], key[1])

    def normalized_words(self):
        """Normalised b,B basis words over V (length <= L - 1) and over A
        (length <= L); raises NotNormalized when the unit of A is not a
        basis vector."""
        L = self.cfg.truncation
        unit = self.oA.unit
        if unit is None:
            raise NotNormalized("the unit of %s is not a basis vector" % self.A.name)
        nV = [w for w in words(self.WV.letters, max(L - 1, 1), 1)
              if not self.oV.is_degenerate(w) and not any(unit in ins for ins, _o in w)]
        nA = [w for w in words(self.WA.letters, L, 1) if not self.oA.is_degenerate(w)]
        return nV, nA


def _count(check, cases, predicate):
    for case in cases:
        check.cases += 1
        bad = predicate(case)
        if bad:
            check.fail((case, bad) if bad is not True else case)
    return check


# ----------------------------------------------------------------------
# suites

def suite_mc(ctx):
    c = Check("m{m} = 0")
    c.cases = 1
    try:
        ctx.S
    except MaurerCartanViolated as e:
        c.fail(e.residual)
    return [c]


def suite_prejacobi(ctx):
    B = HochschildBraces(ctx.A)
    cases, fails = pre_jacobi_exhaustive(B, cochain_basis(ctx.A, ctx.cfg.arity), 2)
    c = Check("pre-Jacobi", cases, len(fails), fails[0] if fails else None)
    return [c]


def suite_hga(ctx):
    S = ctx.S
    basis = cochain_basis(ctx.A, ctx.cfg.arity)
    lists = [xs for n in range(3) for xs in product(basis, repeat=n)]
    lin = lambda ks: [{k: 1} for k in ks]
    dist = _count(Check("distributivity of braces over the product"),
                  [(x1, x2, ys) for x1 in basis for x2 in basis for ys in lists],
                  lambda t: distributivity_residual(S, {t[0]: 1}, {t[1]: 1}, lin(t[2])))
    hom = _count(Check("homotopy Leibniz rule for braces"),
                 [(x, xs) for x in basis for xs in lists if xs],
                 lambda t: homotopy_leibniz_residual(S, {t[0]: 1}, lin(t[1])))
    return [dist, hom]


def suite_leibniz(ctx):
    L = ctx.cfg.truncation
    S, WV, WA = ctx.S, ctx.WV, ctx.WA
    sqV = _count(Check("(b' + delta)^2 = 0 on BV"), words(WV.letters, L + 1),
                 lambda w: bar_square(WV, w))
    sqA = _count(Check("(b' + delta)^2 = 0 on BA"), words(WA.letters, L + 1),
                 lambda w: bar_square(WA, w))
    cup = lambda a, b: cup_words(S.B, a, b)
    pairs = [(a, b) for n in range(L + 1) for k in range(n + 1)
             for a in words(WV.letters, k, k) for b in words(WV.letters, n - k, n - k)]
    lb = _count(Check("bar differential is a derivation of the cup product"), pairs,
                lambda t: check_leibniz(WV, cup, *t))
    pairs1 = [(om, a) for om in words(WV.letters, max(L - 1, 0)) for a in words(WA.letters, L)]
    c1 = _count(Check("cup_1 is compatible with the bar differentials"), pairs1,
                lambda t: cup1_leibniz_residual(S, WA, *t, WV=WV))
    ce = _count(Check("cup_1 agrees with its closed formula"), pairs1,
                lambda t: sub(cup1(S, *t), cup1_explicit(ctx.A, *t)))
    return [sqV, sqA, lb, c1, ce]


def suite_sdr(ctx):
    L = ctx.cfg.truncation
    X = ctx.XA
    small = [{k: 1} for k in X.x_basis(L)]
    even, odd = X.x2_basis(L)
    big = even + odd
    out = []
    sq = lambda d: (lambda x: apply_lin(d, apply_lin(d, x)))
    out.append(_count(Check("d^2 = 0 on X(BA)"), small, sq(X.x_d)))
    out.append(_count(Check("d^2 = 0 on X^2(BA)"), big, sq(X.x2_d)))
    data = {
        "b-retract": (X.natural_I, X.r_prime, X.h, X.x_b, X.x2_b),
        "d1-retract": (X.natural_I, X.r, X.h, X.x_d1, X.x2_d1),
        "perturbed retract": (X.natural_I, X.R, X.H, X.x_d, X.x2_d),
    }
    for name, (i, r, h, ds, db) in data.items():
        res = sdr_residuals(i, r, h, ds, db, small, big)
        for ident, bad in res.items():
            n = len(small) if ident in ("ri", "hi", "i_chain") else len(big)
            out.append(Check("%s: %s" % (name, ident), n, len(bad), bad[0] if bad else None))
    con = connection_residuals(X, even, odd)
    out.append(Check("connection: w1 + nabla b w1 = theta w1", len(odd), len(con["w1"]),
                     con["w1"][0] if con["w1"] else None))
    n2 = sum(1 for x in even if any(t == 2 for t, _k in x))
    out.append(Check("connection: w2 + b nabla w2 = 0", n2, len(con["w2"]),
                     con["w2"][0] if con["w2"] else None))
    return out


def _chain_check(name, P, XC, XD, bx, by):
    def residual(pair):
        kx, ky = pair
        lhs = apply_lin(P.X2.x2_d, P(kx, ky))
        for (a, b), v in tensor_d(XC, XD, pair).items():
            addto(lhs, P(a, b), -v)
        return lhs

    return _count(Check(name), [(x, y) for x in bx for y in by], residual)


def suite_chainmap(ctx):
    L = ctx.cfg.truncation
    XA, XV, S = ctx.XA, ctx.XV, ctx.S
    out = [_chain_check("lift p is a chain map on X(BA) (x) X(BA)", Puschnigg(XA, XA), XA, XA,
                        XA.x_basis(L), XA.x_basis(L))]
    T0 = XPairing(XV, XV, XV, lambda key: cup_words(S.B, key[0], key[1]))
    out.append(_count(Check("X(BV) (x) X(BV) -> X(BV) is a chain map"),
                       [(x, y) for x in XV.x_basis(max(L - 2, 0)) for y in XV.x_basis(L - 1)],
                       lambda t: T0.chain_residual(*t)))
    T1 = XPairing(XV, XA, XA, ctx.cup1)
    out.append(_count(Check("X(BV) (x) X(BA) -> X(BA) is a chain map"),
                      [(x, y) for x in XV.x_basis(L - 1) for y in XA.x_basis(L)],
                      lambda t: T1.chain_residual(*t)))
    return out


def _normalized_or_skip(ctx, names):
    try:
        return ctx.normalized_words(), None
    except NotNormalized as e:
        return None, [Check(n, skipped=str(e)) for n in names]


def suite_cross(ctx):
    names = ["theta P(D (x) sNa) = 0", "theta P(sND (x) a) = 0", "their sum is 0"]
    got, skip = _normalized_or_skip(ctx, names)
    if skip:
        return skip
    nV, nA = got
    T = XPairing(ctx.XV, ctx.XA, ctx.XA, ctx.cup1)
    P = lambda kc, kd: pushforward_forms(ctx.cup1, T.p(kc, kd))
    checks = [Check(n) for n in names]
    for D in nV:
        for a in nA:
            t1, t2 = sn_cross_terms(P, ctx.XV, ctx.XA, ctx.oV, ctx.oA, D, a)
            for c, bad in zip(checks, (t1, t2, sub(t1, {k: -v for k, v in t2.items()}))):
                c.cases += 1
                if bad:
                    c.fail(((D, a), bad))
    return checks


def suite_signs(ctx):
    L = ctx.cfg.truncation
    XA, XV = ctx.XA, ctx.XV
    T = XPairing(XV, XA, XA, ctx.cup1)
    E = EtaExplicit(ctx.S, XV, XA)
    pairs = [(x, y) for x in XV.x_basis(L - 1) for y in XA.x_basis(L)]
    agree = _count(Check("explicit partition sums agree with the composite"), pairs,
                   lambda t: eta_residual(T, E, *t))
    table = Check("sign depends only on the signature", len(pairs))
    try:
        E.sign_table(pairs)
    except SignMismatch as e:
        table.fail(str(e))
    return [agree, table]


def suite_descent(ctx):
    names = ["degenerate a gives a degenerate change", "normalized path equals full path",
             "1/2-free path equals the 1/2 path"]
    got, skip = _normalized_or_skip(ctx, names)
    if skip:
        return skip
    nV, nA = got
    L = ctx.cfg.truncation
    T = XPairing(ctx.XV, ctx.XA, ctx.XA, ctx.cup1)
    CP = CyclicPairing(T, ctx.oV, ctx.oA)
    degen = [w for w in words(ctx.WA.letters, L, 2) if ctx.oA.is_degenerate(w)]
    d = _count(Check(names[0]), [(D, a) for D in nV for a in degen],
               lambda t: CP.bb_pair({t[0]: 1}, {t[1]: 1}))
    E = EtaExplicit(ctx.S, ctx.XV, ctx.XA)
    E0 = EtaExplicit(ctx.S, ctx.XV, ctx.XA, HALF_FREE)
    pairs = [(D, a) for D in nV for a in nA]
    full = lambda t: CP.bb_pair({t[0]: 1}, {t[1]: 1})
    n = _count(Check(names[1]), pairs, lambda t: sub(normalized_pair(E, ctx.oA, *t), full(t)))
    h = _count(Check(names[2]), pairs, lambda t: sub(normalized_pair(E0, ctx.oA, *t), full(t)))
    return [d, n, h]


def suite_cyclic(ctx):
    L = ctx.cfg.truncation
    WA, oA, XA = ctx.WA, ctx.oA, ctx.XA
    ws = words(WA.letters, L + 1, 1)
    out = []
    for name, bad in check_cyclic_identities(oA, ws).items():
        out.append(Check(name, len(ws) * (2 if "cyclic" in name else 1), len(bad),
                         bad[0] if bad else None))
    if oA.unit is None:
        why = "the unit of %s is not a basis vector" % ctx.A.name
        out += [Check(t, skipped=why) for t in ("I is a chain map", "J is a chain map",
                                                 "I_*, J_* on bicomplexes")]
    else:
        ij = check_IJ(oA, ws)
        out.append(Check("I is a chain map", len(ws), len(ij["I"]), ij["I"][0] if ij["I"] else None))
        out.append(Check("J is a chain map", 2 * len(ws), len(ij["J"]), ij["J"][0] if ij["J"] else None))
        if any(c.failures for c in out if "total^2" in c.name):
            out.append(Check("I_*, J_* on bicomplexes", skipped="the total differentials do not square to zero"))
        else:
            n = ctx.cfg.nmax
            bi = check_IJ_homology(oA, WA.letters, n)
            for key, label in (("I_chain", "I is a chain map of bicomplexes"),
                               ("J_chain", "J is a chain map of bicomplexes"),
                               ("JI", "J I is the normalising projection")):
                out.append(Check(label, n, len(bi[key]), bi[key][0] if bi[key] else None))
            out.append(Check("I_*, J_* are isomorphisms below degree %d" % n, 3 * n,
                             len(bi["iso"]), bi["iso"][0] if bi["iso"] else None))
    keys = cyclic_keys(WA.letters, L)
    bad = quillen_residuals(XA, oA, keys)
    out.append(Check("X(BA) is the cyclic complex", len(keys), len(bad), bad[0] if bad else None))
    return out


SUITES = {
    "mc": suite_mc,
    "prejacobi": suite_prejacobi,
    "hga": suite_hga,
    "leibniz": suite_leibniz,
    "sdr": suite_sdr,
    "chainmap": suite_chainmap,
    "cross": suite_cross,
    "signs": suite_signs,
    "descent": suite_descent,
    "cyclic": suite_cyclic,
}

NEEDS_MC = set(SUITES) - {"mc", "prejacobi", "sdr", "cyclic"}


def run_suites(A, cfg):
    names = list(cfg.suites) or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError("unknown suite(s): %s" % ", ".join(unknown))
    ctx = Context(A, cfg)
    mc_ok = True
    try:
        ctx.S
    except MaurerCartanViolated:
        mc_ok = False
    results = []
    for name in names:
        if name in NEEDS_MC and not mc_ok:
            results.append(SuiteResult(name, [Check(name, skipped="no Maurer-Cartan element")]))
            continue
        results.append(SuiteResult(name, SUITES[name](ctx)))
    return results
