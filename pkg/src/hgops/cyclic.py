"""
Cyclic chains of a DG algebra, the cyclic bicomplex and the b,B complex.

C_n(V) = V^{(x)(n+1)} is stored as a word of n+1 letters of a letter algebra
W (see barcx), so letter degrees are already shifted and every sign is a
Koszul sign in the shifted grading:

    lambda(v_0..v_n) = (-1)^{|v_n|(|v_0|+..+|v_{n-1}|)} (v_n, v_0, .., v_{n-1})
    b = b' + mu_{01} lambda        (b' as in the bar construction)
    s(v_0..v_n) = (1, v_0, .., v_n),  N = sum_j lambda^j,  B = (1 - lambda) s N

For an ungraded algebra these are the textbook operators.

Two-column cyclic complex.  A chain is a lincomb of keys (1, w) (the
b-column, identified with A (x) BA, i.e. the odd part of X(BA)) and (0, w)
(the b'-column, identified with the nonempty words of BA).  The
differential is the one X(BA) carries in these coordinates:

    (1, w) -> -(b + delta) w  in column 1,   -N w  in column 0
    (0, w) -> (1 - lambda) w  in column 1,   (b' + delta) w  in column 0

The b,B complex then carries B - b - delta, and I = 1 + sN, J = 1 - s (on
the b'-column, then normalised) are chain maps between the two.
"""

from .barcx import bar_b_prime, bar_delta, words
from .exactlin import homology_dim, matrix_of, rank
from .graded import addterm, addto, scale, sgn, sub


class NotNormalized(ValueError):
    pass


def apply_lin(op, x):
    out = {}
    for k, v in x.items():
        addto(out, op(k), v)
    return out


class CyclicOps:
    """The operators on C_*(V) for a letter algebra W with a unit."""

    def __init__(self, W):
        if not W.unit:
            raise ValueError("cyclic operators need a unital algebra")
        self.W = W
        self.unit = W.unit_label()

    def degree(self, w):
        return sum(self.W.degree(x) for x in w)

    # -- the basic operators -------------------------------------------
    def lam(self, w):
        if len(w) <= 1:
            return {w: 1}
        last = w[-1]
        return {(last,) + w[:-1]: sgn(self.W.degree(last) * self.degree(w[:-1]))}

    def norm(self, w):
        out = {}
        x = {w: 1}
        for _ in range(len(w)):
            addto(out, x)
            x = apply_lin(self.lam, x)
        return out

    def one_minus_lam(self, w):
        return sub({w: 1}, self.lam(w))

    def b_prime(self, w):
        return bar_b_prime(self.W, w)

    def wrap(self, w):
        if len(w) < 2:
            return {}
        out = {}
        for v, c in self.lam(w).items():
            for k, u in self.W.mu(v[0], v[1]).items():
                addterm(out, (k,) + v[2:], c * u)
        return out

    def b(self, w):
        return addto(self.b_prime(w), self.wrap(w))

    def delta(self, w):
        return bar_delta(self.W, w)

    def s(self, w):
        return {(u,) + w: c for u, c in self.W.unit.items()}

    def sN(self, w):
        return apply_lin(self.s, self.norm(w))

    def B(self, w):
        return apply_lin(self.one_minus_lam, self.sN(w))

    # -- normalisation -------------------------------------------------
    def is_degenerate(self, w):
        if self.unit is None:
            raise NotNormalized("normalised chains need the unit to be a letter")
        return self.unit in w[1:]

    def normalize(self, x):
        return {k: v for k, v in x.items() if not self.is_degenerate(k)}

    def B_normalized(self, w):
        """B on normalised chains: sN, read modulo degenerate chains."""
        return self.normalize(self.sN(w))

    # -- total differentials -------------------------------------------
    def bb_d(self, w):
        """Differential of the b,B complex: B - b - delta."""
        out = self.B(w)
        addto(out, self.b(w), -1)
        addto(out, self.delta(w), -1)
        return out

    def bbn_d(self, w):
        """The same on normalised chains."""
        return self.normalize(self.bb_d(w))

    def cyc_d(self, key):
        col, w = key
        out = {}
        if col == 1:
            for k, v in self.b(w).items():
                addterm(out, (1, k), -v)
            for k, v in self.delta(w).items():
                addterm(out, (1, k), -v)
            for k, v in self.norm(w).items():
                addterm(out, (0, k), -v)
        else:
            for k, v in self.one_minus_lam(w).items():
                addterm(out, (1, k), v)
            for k, v in self.b_prime(w).items():
                addterm(out, (0, k), v)
            for k, v in self.delta(w).items():
                addterm(out, (0, k), v)
        return out

    def cyc_degree(self, key):
        """Parity-carrying degree of a cyclic key; matches the X complex."""
        col, w = key
        return self.degree(w) + col

    # -- comparison maps -----------------------------------------------
    def I(self, w):
        out = {(1, w): 1}
        for k, v in self.sN(w).items():
            addterm(out, (0, k), v)
        return out

    def J(self, key):
        col, w = key
        if col == 1:
            return self.normalize({w: 1})
        return self.normalize(scale(self.s(w), -1))


# ----------------------------------------------------------------------
# identity checks

def check_cyclic_identities(ops, ws):
    """Failures (word lists) of the operator identities on the words ``ws``."""
    L = lambda op: (lambda x: apply_lin(op, x))
    b, bp, B, lam, N, dl = ops.b, ops.b_prime, ops.B, ops.one_minus_lam, ops.norm, ops.delta

    def anti(f, g):
        return lambda w: addto(L(f)(g(w)), L(g)(f(w)))

    checks = {
        "b^2": lambda w: L(b)(b(w)),
        "B^2": lambda w: L(B)(B(w)),
        "bB+Bb": anti(b, B),
        "db+bd": anti(dl, b),
        "dB+Bd": anti(dl, B),
        "b(1-l)=(1-l)b'": lambda w: sub(L(b)(lam(w)), L(lam)(bp(w))),
        "b'N=Nb": lambda w: sub(L(bp)(N(w)), L(N)(b(w))),
        "(1-l)N": lambda w: L(lam)(N(w)),
        "bB total^2": lambda w: L(ops.bb_d)(ops.bb_d(w)),
    }
    fails = {name: [] for name in checks}
    for w in ws:
        for name, f in checks.items():
            if f(w):
                fails[name].append(w)
    for w in ws:
        for col in (0, 1):
            if apply_lin(ops.cyc_d, ops.cyc_d((col, w))):
                fails.setdefault("cyclic total^2", []).append((col, w))
    fails.setdefault("cyclic total^2", [])
    return fails


def check_IJ(ops, ws):
    """Chain-map residual witnesses of I (b,B -> cyclic) and J (cyclic ->
    normalised b,B) on the words ``ws``."""
    bad_I, bad_J = [], []
    for w in ws:
        lhs = apply_lin(ops.cyc_d, ops.I(w))
        if sub(lhs, apply_lin(ops.I, ops.bb_d(w))):
            bad_I.append(w)
        for col in (0, 1):
            key = (col, w)
            lhs = ops.normalize(apply_lin(ops.bbn_d, ops.J(key)))
            if sub(lhs, ops.normalize(apply_lin(ops.J, ops.cyc_d(key)))):
                bad_J.append(key)
    return {"I": bad_I, "J": bad_J}


# ----------------------------------------------------------------------
# the identification of X(BW) with the cyclic complex

def to_cyclic(x):
    """X(BW) chain -> (cyclic chain, coefficient of the empty word)."""
    out = {}
    unit = 0
    for (t, k), v in x.items():
        if t == 0:
            if k == ():
                unit += v
            else:
                addterm(out, (0, k), v)
        else:
            a, g = k
            addterm(out, (1, (a,) + g), v)
    return out, unit


def from_cyclic(c):
    out = {}
    for (col, w), v in c.items():
        if col == 0:
            addterm(out, (0, w), v)
        else:
            addterm(out, (1, (w[0], w[1:])), v)
    return out


def quillen_residuals(X, ops, keys):
    """Keys of the cyclic complex on which the identification fails to
    carry the X differential to the cyclic one."""
    bad = []
    for key in keys:
        lhs, unit = to_cyclic(apply_lin(X.x_d, from_cyclic({key: 1})))
        if unit or sub(lhs, ops.cyc_d(key)):
            bad.append(key)
    return bad


def cyclic_keys(letters, max_len, min_len=1):
    return [(col, w) for w in words(letters, max_len, max(min_len, 1)) for col in (0, 1)]


# ----------------------------------------------------------------------
# the pairing on cyclic chains and on normalised b,B chains

BB_SIGN = -1


class CyclicPairing:
    """A pairing X(BV) (x) X(BA) -> X(BA) read through the identification:
    cyclic(V) (x) cyclic(A) -> cyclic(A)."""

    def __init__(self, thm_map, ops_V, ops_A):
        self.T = thm_map
        self.ops_V, self.ops_A = ops_V, ops_A
        self._cache = {}

    def on_keys(self, kc, kd):
        hit = self._cache.get((kc, kd))
        if hit is None:
            (xc,), (xd,) = from_cyclic({kc: 1}), from_cyclic({kd: 1})
            hit, _unit = to_cyclic(self.T(xc, xd))
            self._cache[kc, kd] = hit
        return hit

    def __call__(self, c, d):
        out = {}
        for kc, u in c.items():
            for kd, v in d.items():
                addto(out, self.on_keys(kc, kd), u * v)
        return out

    def chain_residual(self, kc, kd):
        oV, oA = self.ops_V, self.ops_A
        out = apply_lin(oA.cyc_d, self.on_keys(kc, kd))
        for k, v in oV.cyc_d(kc).items():
            addto(out, self.on_keys(k, kd), -v)
        s = sgn(oV.cyc_degree(kc))
        for k, v in oA.cyc_d(kd).items():
            addto(out, self.on_keys(kc, k), -s * v)
        return out

    # -- pairing on normalised b,B chains ------------------------------
    def check_normalized(self, D):
        A_unit = self.ops_A.unit
        for w in D:
            for ins, _o in w:
                if A_unit in ins:
                    raise NotNormalized("cochain %r takes the unit as an input" % ((ins, _o),))

    def bb_pair(self, D, a):
        """D cup a = -J(ID cup Ia) for b,B chains D (over V) and a (over A);
        the output is a normalised chain.  The global sign makes the
        identity 0-cochain act as the identity."""
        self.check_normalized(D)
        ID = apply_lin(self.ops_V.I, D)
        Ia = apply_lin(self.ops_A.I, a)
        return scale(apply_lin(self.ops_A.J, self(ID, Ia)), BB_SIGN)

    def bb_residual(self, wD, wa):
        """Leibniz residual of bb_pair on basis words, on normalised chains."""
        oV, oA = self.ops_V, self.ops_A
        out = apply_lin(oA.bbn_d, self.bb_pair({wD: 1}, {wa: 1}))
        addto(out, self.bb_pair(oV.bb_d(wD), {wa: 1}), -1)
        s = sgn(oV.degree(wD) + 1)
        addto(out, self.bb_pair({wD: 1}, oA.bbn_d(wa)), -s)
        return oA.normalize(out)


def sn_cross_terms(P, XV, XA, ops_V, ops_A, wD, wa):
    """theta P(D (x) sNa) and theta P(sND (x) a) for basis words D and a,
    read as normalised chains.  ``P`` maps a pair of X keys to Omega^1
    forms over BA (tag 1)."""
    out = []
    for left, right in (({(1, wD): 1}, {(0, k): v for k, v in ops_A.sN(wa).items()}),
                        ({(0, k): v for k, v in ops_V.sN(wD).items()}, {(1, wa): 1})):
        acc = {}
        for kc, u in from_cyclic(left).items():
            for kd, v in from_cyclic(right).items():
                forms = {f: c for (t, f), c in P(kc, kd).items() if t == 1}
                addto(acc, XA.theta_lin(forms), u * v)
        cyc, _unit = to_cyclic({(1, k): v for k, v in acc.items()})
        out.append(ops_A.normalize({w: v for (_c, w), v in cyc.items()}))
    return out


HALF_FREE = {"11a": 2, "11b": 0}


def normalized_pair(E, ops_A, wD, wa):
    """D cup a on normalised basis words from the D (x) a term alone; the
    terms through sN drop out after J.  ``E`` is an EtaExplicit."""
    r = E((1, (wD[0], wD[1:])), (1, (wa[0], wa[1:])))
    cyc, _unit = to_cyclic(r)
    return scale(apply_lin(ops_A.J, cyc), BB_SIGN)


# ----------------------------------------------------------------------
# homology

def _bicomplex_keys(n, chains):
    """Keys (p, key) of the truncated cyclic bicomplex in total degree n:
    column p holds chains of degree n - p."""
    out = []
    for p in range(n + 1):
        out.extend((p, k) for k in chains(n - p, p % 2))
    return out


def cyclic_pipeline(ops, letters):
    """Bicomplex built from the cyclic operators."""

    def chains(m, odd_col):
        return list(words(letters, m + 1, m + 1))

    def d(key):
        p, w = key
        out = {}
        if p % 2 == 0:
            for k, v in ops.b(w).items():
                addterm(out, (p, k), -v)
            if p > 0:
                for k, v in ops.norm(w).items():
                    addterm(out, (p - 1, k), -v)
        else:
            for k, v in ops.b_prime(w).items():
                addterm(out, (p, k), v)
            for k, v in ops.one_minus_lam(w).items():
                addterm(out, (p - 1, k), v)
        return out

    return chains, d


def x_pipeline(X, letters):
    """The same bicomplex assembled from the X(BA) differential: even columns
    hold odd X keys, odd columns nonempty words (even X keys)."""

    def chains(m, odd_col):
        ws = words(letters, m + 1, m + 1)
        if odd_col:
            return [(0, w) for w in ws]
        return [(1, (w[0], w[1:])) for w in ws]

    def d(key):
        p, k = key
        out = {}
        for (t, kk), v in X.x_d(k).items():
            if t == (1 if p % 2 == 0 else 0):
                addterm(out, (p, (t, kk)), v)
            elif p > 0:
                addterm(out, (p - 1, (t, kk)), v)
        return out

    return chains, d


def bicomplex_homology(chains, d, nmax, columns=None, upto=None):
    """dim H_n of the total complex truncated at chain degree nmax.  H_n is
    trustworthy for n <= nmax - 1 (it needs chains of degree n + 1); with
    ``upto=nmax + 1`` degree nmax is included as well, computed without
    incoming boundaries.  ``columns=1`` keeps only the first column
    (Hochschild homology)."""

    def keys(n):
        if n < 0 or n > nmax:
            return []
        ks = _bicomplex_keys(n, chains)
        if columns is not None:
            ks = [k for k in ks if k[0] < columns]
        return ks

    def restrict(key):
        out = d(key)
        if columns is not None:
            out = {k: v for k, v in out.items() if k[0] < columns}
        return out

    dims = []
    for n in range(upto if upto is not None else nmax):
        k_in, k_mid, k_out = keys(n + 1), keys(n), keys(n - 1)
        d_in = matrix_of(restrict, k_in, k_mid)
        d_out = matrix_of(restrict, k_mid, k_out)
        dims.append(homology_dim(d_in, d_out))
    return dims


# ----------------------------------------------------------------------
# I and J between the normalised b,B bicomplex and the cyclic bicomplex

def bb_bicomplex(ops, letters, normalized=True):
    """The b,B bicomplex: column p in total degree n holds chains of
    Hochschild degree n - 2p; the differential is -(b + delta) inside a
    column and B into column p - 1.  With ``normalized`` only
    non-degenerate words are kept and B is read as sN."""

    def keys(n):
        if n < 0:
            return []
        return [(p, w) for p in range(n // 2 + 1)
                for w in words(letters, n - 2 * p + 1, n - 2 * p + 1)
                if not (normalized and ops.is_degenerate(w))]

    def d(key):
        p, w = key
        out = {}
        inner = addto(ops.b(w), ops.delta(w))
        B = ops.B_normalized(w) if normalized else ops.B(w)
        if normalized:
            inner = ops.normalize(inner)
        for k, v in inner.items():
            addterm(out, (p, k), -v)
        if p > 0:
            for k, v in B.items():
                addterm(out, (p - 1, k), v)
        return out

    return keys, d


def cyclic_bicomplex(ops, letters):
    chains, d = cyclic_pipeline(ops, letters)
    return (lambda n: _bicomplex_keys(n, chains) if n >= 0 else []), d


def I_bicomplex(ops, key):
    """1 + sN: the b,B bicomplex into the cyclic bicomplex."""
    p, w = key
    out = {(2 * p, w): 1}
    if p > 0:
        for k, v in ops.sN(w).items():
            addterm(out, (2 * p - 1, k), v)
    return out


def J_bicomplex(ops, key):
    """The cyclic bicomplex onto the normalised b,B bicomplex: 1 on the
    b-columns and -s on the b'-columns."""
    q, w = key
    if q % 2 == 0:
        return {(q // 2, k): v for k, v in ops.normalize({w: 1}).items()}
    return {((q - 1) // 2, k): -v for k, v in ops.normalize(ops.s(w)).items()}


def J_literal(ops, key):
    """1 + s(1 - lambda) on the b'-columns: the textbook shape of J, kept
    to show that it is not a chain map in these sign conventions."""
    q, w = key
    if q % 2 == 0:
        return {(q // 2, k): v for k, v in ops.normalize({w: 1}).items()}
    img = apply_lin(ops.s, ops.one_minus_lam(w))
    return {((q - 1) // 2, k): v for k, v in ops.normalize(img).items()}


def induced_rank(f, src, tgt, n):
    """(rank of f_* on H_n, dim H_n(src), dim H_n(tgt)) for a chain map f
    between complexes given as (keys, d)."""
    from .exactlin import SparseMatrix, kernel_basis
    (ks, ds), (kt, dt) = src, tgt
    z = kernel_basis(matrix_of(ds, ks(n), ks(n - 1)))
    mid_s = ks(n)
    bnd = matrix_of(dt, kt(n + 1), kt(n))
    entries = dict(bnd.entries)
    index = {k: i for i, k in enumerate(kt(n))}
    for j, v in enumerate(z):
        img = apply_lin(f, {mid_s[i]: c for i, c in v.items()})
        for k, c in img.items():
            entries[index[k], bnd.cols + j] = c
    ext = SparseMatrix(bnd.rows, bnd.cols + len(z), entries)
    h_src = homology_dim(matrix_of(ds, ks(n + 1), mid_s), matrix_of(ds, mid_s, ks(n - 1)))
    h_tgt = homology_dim(bnd, matrix_of(dt, kt(n), kt(n - 1)))
    return rank(ext) - rank(bnd), h_src, h_tgt


def check_IJ_homology(ops, letters, nmax, J=J_bicomplex):
    """I from the b,B bicomplex to the cyclic one, J back onto the
    normalised b,B bicomplex, and the projection pi between the two b,B
    bicomplexes, in total degrees < nmax.  Checks that all three are chain
    maps, that J I = pi on the nose, and that I_*, J_*, pi_* are
    isomorphisms; together these make I_* and J_* mutually inverse once
    H(b,B) is identified with its normalised version through pi_*."""
    bu = bb_bicomplex(ops, letters, normalized=False)
    bn = bb_bicomplex(ops, letters)
    cy = cyclic_bicomplex(ops, letters)
    I = lambda k: I_bicomplex(ops, k)
    Jk = lambda k: J(ops, k)
    pi = lambda k: ops.normalize({k: 1}) if not ops.is_degenerate(k[1]) else {}
    res = {"I_chain": [], "J_chain": [], "pi_chain": [], "JI": [], "iso": []}
    for n in range(nmax):
        for k in bu[0](n):
            if sub(apply_lin(cy[1], I(k)), apply_lin(I, bu[1](k))):
                res["I_chain"].append(k)
            if sub(apply_lin(bn[1], pi(k)), apply_lin(pi, bu[1](k))):
                res["pi_chain"].append(k)
            if sub(apply_lin(Jk, I(k)), pi(k)):
                res["JI"].append(k)
        for k in cy[0](n):
            if sub(apply_lin(bn[1], Jk(k)), apply_lin(Jk, cy[1](k))):
                res["J_chain"].append(k)
        for name, f, src, tgt in (("I", I, bu, cy), ("J", Jk, cy, bn), ("pi", pi, bu, bn)):
            r, hs, ht = induced_rank(f, src, tgt, n)
            if not r == hs == ht:
                res["iso"].append((name, n, r, hs, ht))
    return res


def hochschild_cohomology_dims(A, max_arity):
    """dim HH^n(A, A) for n < max_arity from the cochain complex."""
    from .algebra import cochain_basis, hochschild_coboundary

    def cob(key):
        return hochschild_coboundary(A, {key: 1})

    dims = []
    for n in range(max_arity):
        prev = cochain_basis(A, n - 1, n - 1) if n > 0 else []
        mid = cochain_basis(A, n, n)
        nxt = cochain_basis(A, n + 1, n + 1)
        d_in = matrix_of(cob, prev, mid)
        d_out = matrix_of(cob, mid, nxt)
        dims.append(homology_dim(d_in, d_out))
    return dims


def homology_report(A, nmax):
    """HH and HC dimensions of A from the cyclic operators and from the
    X(BA) differential, chains up to degree nmax.  Degrees 0..nmax-1 are
    trustworthy; degree nmax is listed with the flag off."""
    from .barcx import algebra_letters
    from .xcomplex import BarX

    W = algebra_letters(A)
    ops = CyclicOps(W)
    X = BarX(W)
    cyc = cyclic_pipeline(ops, W.letters)
    xp = x_pipeline(X, W.letters)
    cols = {
        "HH": bicomplex_homology(*cyc, nmax, columns=1, upto=nmax + 1),
        "HC": bicomplex_homology(*cyc, nmax, upto=nmax + 1),
        "HH_via_X": bicomplex_homology(*xp, nmax, columns=1, upto=nmax + 1),
        "HC_via_X": bicomplex_homology(*xp, nmax, upto=nmax + 1),
    }
    rows = [dict({k: v[n] for k, v in cols.items()}, n=n, trustworthy=n < nmax)
            for n in range(nmax + 1)]
    agree = all(r["HH"] == r["HH_via_X"] and r["HC"] == r["HC_via_X"] for r in rows if r["trustworthy"])
    return {
        "algebra": A.name,
        "nmax": nmax,
        "degrees": rows,
        "agree": agree,
        "HH_cohomology": hochschild_cohomology_dims(A, 2),
    }


__all__ = [
    "CyclicOps", "NotNormalized", "check_cyclic_identities", "check_IJ",
    "to_cyclic", "from_cyclic", "quillen_residuals", "cyclic_keys",
    "CyclicPairing", "sn_cross_terms", "HALF_FREE", "normalized_pair", "cyclic_pipeline", "x_pipeline",
    "bicomplex_homology", "hochschild_cohomology_dims", "homology_report",
    "bb_bicomplex", "cyclic_bicomplex", "I_bicomplex", "J_bicomplex", "J_literal",
    "check_IJ_homology", "induced_rank", "BB_SIGN",
    "rank",
]
