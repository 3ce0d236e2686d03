"""
Universal codifferential forms over a DG coalgebra and the X / X^2
supercomplexes of a bar construction.

A form in Omega^n C = C (x) Cbar^{(x) n} is a tuple (c_0, c_1, .., c_n) of
basis keys of C with c_i != C.one for i >= 1.  The slots i >= 1 carry a
suspension, so the degree of a form is |c_0| + sum_{i>=1} (|c_i| + 1).

    d(c_0|c_1|..|c_n) = eta(c_0) (c_1|..|c_n)
    b = T_L - T_M - T_R,
      T_L(c_0|..) = sum (-1)^{|c_0'|} (c_0'|c_0''|c_1|..),       c_0'' in Cbar
      T_M(..|c_i|..) = sum (-1)^{e_i + |c_i'|} (..|c_i'|c_i''|..), both in Cbar
      T_R(c_0|..) = sum (-1)^{(|c_0'|+1)(|c_0''| + e)} (c_0''|c_1|..|c_n|c_0'), c_0' in Cbar

with e_i the degree of the slots before slot i and e that of slots 1..n.
The internal differential acts slotwise with Koszul signs and anticommutes
with the suspension.  These are the unique signs (among the Koszul
candidates) for which b^2 = 0, db = 0 on C and b anticommutes with the
internal differential.

Chains of the supercomplexes are dicts with tagged keys:

    (0, word)     even part C
    (1, key)      odd part; in X the key is (a, gamma) in A (x) BA, in X^2
                  an Omega^1 form
    (2, form)     Omega^2 part of X^2
"""

from itertools import product

from .exactlin import kernel_basis, matrix_of
from .graded import addterm, addto, scale, sgn, sub


class Forms:
    def __init__(self, C):
        self.C = C

    def slot_degree(self, i, c):
        return self.C.degree(c) + (1 if i else 0)

    def degree(self, f):
        return sum(self.slot_degree(i, c) for i, c in enumerate(f))

    def d(self, f):
        if len(f) < 2 or f[0] != self.C.one:
            return {}
        return {f[1:]: 1}

    def b(self, f):
        C = self.C
        out = {}
        z = [self.slot_degree(i, c) for i, c in enumerate(f)]
        rest = f[1:]
        e_rest = sum(z[1:])
        for co, l, r in C.coproduct(f[0]):
            dl = C.degree(l)
            if r != C.one:
                addterm(out, (l, r) + rest, co * sgn(dl))
            if l != C.one:
                e = (dl + 1) * (C.degree(r) + e_rest)
                addterm(out, (r,) + rest + (l,), -co * sgn(e))
        pre = z[0]
        for i in range(1, len(f)):
            for co, l, r in C.coproduct(f[i]):
                if l == C.one or r == C.one:
                    continue
                addterm(out, f[:i] + (l, r) + f[i + 1:], -co * sgn(pre + C.degree(l)))
            pre += z[i]
        return out

    def inner(self, f):
        C = self.C
        out = {}
        pre = 0
        for i, c in enumerate(f):
            s = sgn(pre) * (-1 if i else 1)
            for k, v in C.differential(c).items():
                if i and k == C.one:
                    continue
                addterm(out, f[:i] + (k,) + f[i + 1:], s * v)
            pre += self.slot_degree(i, c)
        return out

    def apply(self, op, x):
        out = {}
        for k, v in x.items():
            addto(out, op(k), v)
        return out

    def window(self, n, max_size, min_size=0):
        """Basis forms of Omega^n C with total size in [min_size, max_size]."""
        C = self.C
        keys = [k for k in C.basis(max_size)]
        bar = [k for k in keys if k != C.one]
        out = []

        def rec(slot, used, acc):
            if slot == n + 1:
                if used >= min_size:
                    out.append(tuple(acc))
                return
            for k in (keys if slot == 0 else bar):
                s = C.size(k)
                if used + s <= max_size:
                    rec(slot + 1, used + s, acc + [k])

        rec(0, 0, [])
        return out


class SquareNonzero(AssertionError):
    def __init__(self, chain, value):
        super().__init__("differential squares to a nonzero chain on %r" % (chain,))
        self.chain = chain
        self.value = value


def tag(t, x):
    return {(t, k): v for k, v in x.items()}


def part(x, t):
    return {k[1]: v for k, v in x.items() if k[0] == t}


def _rot_sign(degs, k):
    return sgn(sum(degs[:k]) * sum(degs[k:]))


class FormsX2:
    """The X^2 supercomplex differentials on ambient forms over any DG
    coalgebra: b + 2d out of C + Omega^2, b + d out of Omega^1 (forms of
    degree 3 are dropped), and the internal differential."""

    def __init__(self, C):
        self.C = C
        self.F = Forms(C)

    # -- X^2(C) ---------------------------------------------------------

    def x2_b(self, key):
        t, k = key
        if t == 0:
            return tag(1, self.F.b((k,)))
        if t == 1:
            return tag(2, self.F.b(k))
        return {}

    def x2_dn(self, key):
        t, k = key
        if t == 2:
            return tag(1, scale(self.F.d(k), 2))
        if t == 1:
            return tag(0, {f[0]: v for f, v in self.F.d(k).items()})
        return {}

    def x2_d1(self, key):
        return addto(self.x2_b(key), self.x2_dn(key))

    def x2_d2(self, key):
        t, k = key
        if t == 0:
            return tag(0, self.C.differential(k))
        return tag(t, self.F.inner(k))

    def x2_d(self, key):
        return addto(self.x2_d1(key), self.x2_d2(key))



class BarX(FormsX2):
    """X and X^2 of the bar construction C = BW of a letter algebra W.

    The odd part of X is modelled on W (x) BW: the key (a, gamma) stands for
    a (x) gamma.  In the coordinates c_0 (x) c_1 = (-1)^{|c_0|}(c_0|s c_1) on
    Omega^1, theta(1 (x) gamma) = -gamma_1 (x) (gamma_2..) and
    theta(a_0 (x) gamma) = a_0 (x) gamma, with zero on words of length >= 2.
    """

    def __init__(self, W):
        from .barcx import bar_coalgebra
        self.W = W
        super().__init__(bar_coalgebra(W))

    # -- the three structure maps ---------------------------------------

    def theta(self, f):
        alpha, gamma = f
        if len(alpha) == 1:
            return {(alpha[0], gamma): sgn(self.W.degree(alpha[0]))}
        if not alpha:
            return {(gamma[0], gamma[1:]): -1}
        return {}

    def iota(self, key):
        """The section of theta onto Omega^1 C_nat = ker b: a sum over the
        ways of cutting the cyclic word (y_0, .., y_n) into two intervals
        (alpha | beta) with y_0 in beta, alpha possibly empty."""
        y0, ys = key
        y = (y0,) + tuple(ys)
        n = len(y)
        degs = [self.W.degree(t) for t in y]
        out = {}
        for j in range(n):
            addterm(out, ((), y[j:] + y[:j]), -_rot_sign(degs, j))
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                alpha = y[i:j]
                addterm(out, (alpha, y[j:] + y[:i]), -_rot_sign(degs, i) * sgn(sum(degs[i:j])))
        return out

    def nabla(self, f):
        """(beta|alpha|(a)) -> sum_{alpha = alpha' alpha''} +-(alpha'|alpha'' a beta);
        zero unless the last slot is a single letter."""
        if len(f) != 3 or len(f[2]) != 1:
            return {}
        beta, alpha, a = f
        deg = self.C.degree
        e0 = deg(beta) * (deg(alpha) + deg(a))
        out = {}
        for k in range(len(alpha) + 1):
            addterm(out, (alpha[:k], alpha[k:] + a + beta), sgn(e0 + deg(alpha[k:])))
        return out

    def theta_lin(self, x):
        return self.F.apply(self.theta, x)

    def iota_lin(self, x):
        return self.F.apply(self.iota, x)

    def nabla_lin(self, x):
        return self.F.apply(self.nabla, x)

    # -- X(C) -----------------------------------------------------------

    def x_b(self, key):
        t, k = key
        if t == 0:
            return tag(1, self.theta_lin(self.F.b((k,))))
        return {}

    def x_dn(self, key):
        t, k = key
        if t == 1:
            return tag(0, {f[0]: v for f, v in self.F.apply(self.F.d, self.iota(k)).items()})
        return {}

    def x_d1(self, key):
        return addto(self.x_b(key), self.x_dn(key))

    def x_d2(self, key):
        t, k = key
        if t == 0:
            return tag(0, self.C.differential(k))
        return tag(1, self.theta_lin(self.F.apply(self.F.inner, self.iota(k))))

    def x_d(self, key):
        return addto(self.x_d1(key), self.x_d2(key))

    # -- the natural inclusion and the retractions ------------------------

    def natural_I(self, key):
        t, k = key
        if t == 0:
            return {key: 1}
        return tag(1, self.iota(k))

    def r_prime(self, key):
        t, k = key
        if t == 0:
            return {key: 1}
        if t == 1:
            return tag(1, self.theta(k))
        return {}

    def h(self, key):
        t, k = key
        if t == 2:
            return tag(1, self.nabla(k))
        return {}

    def r(self, key):
        t, k = key
        if t == 2:
            return tag(0, {f[0]: v for f, v in self.F.apply(self.F.d, self.nabla(k)).items()})
        return self.r_prime(key)

    def R(self, key):
        """(omega_0 + d nabla omega_2) + theta(omega_1 + d_2 nabla omega_2)."""
        t, k = key
        if t == 2:
            out = self.r(key)
            inner = self.F.apply(self.F.inner, self.nabla(k))
            return addto(out, tag(1, self.theta_lin(inner)))
        return self.r_prime(key)

    H = h

    # -- windows ----------------------------------------------------------

    def x_basis(self, max_len, min_len=0):
        """Basis keys of X(BW) with total letter count in [min_len, max_len]."""
        from .barcx import words
        L = self.W.letters
        out = [(0, w) for w in words(L, max_len, min_len)]
        for n in range(max(min_len, 1), max_len + 1):
            out.extend((1, (a, g)) for a in L for g in words(L, n - 1, n - 1))
        return out

    def x2_basis(self, max_len, min_len=0):
        """Basis chains of X^2(BW): words, a basis of Omega^2_nat = ker b cap ker bd
        and a basis of the normalized 1-forms ker(bd + 2db), by letter count."""
        from .barcx import words
        F = self.F
        even = [{(0, w): 1} for w in words(self.W.letters, max_len, min_len)]
        odd = []
        for n in range(max(min_len, 1), max_len + 1):
            w1 = F.window(1, n, n)
            w2 = F.window(2, n, n)
            w3 = F.window(3, n, n)

            def both(f):
                out = tag(3, F.b(f))
                addto(out, tag(2, F.apply(F.b, F.d(f))))
                return out

            cod = [(3, k) for k in w3] + [(2, k) for k in w2]
            for v in kernel_basis(matrix_of(both, w2, cod)):
                even.append({(2, w2[i]): c for i, c in v.items()})

            def bd2(f):
                out = F.apply(F.b, F.d(f))
                return addto(out, F.apply(F.d, F.b(f)), 2)

            for v in kernel_basis(matrix_of(bd2, w1, w1)):
                odd.append({(1, w1[i]): c for i, c in v.items()})
        return even, odd


def apply_lin(op, x):
    out = {}
    for k, v in x.items():
        addto(out, op(k), v)
    return out


def perturb(r, h, i, delta, max_terms=64):
    """Perturbation of a special deformation retract (i, r, h) of
    (M, d_1) onto (L, d_1) with i delta = delta i: returns (R, H, I) with
    R = r K, H = h K, I = i and K = sum_n (delta h)^n.  Raises if the series
    does not terminate within ``max_terms`` terms."""

    def K(x):
        out = dict(x)
        term = x
        for _ in range(max_terms):
            term = apply_lin(delta, apply_lin(h, term))
            if not term:
                return out
            addto(out, term)
        raise RuntimeError("perturbation series did not terminate")

    def R(key):
        return apply_lin(r, K({key: 1}))

    def H(key):
        return apply_lin(h, K({key: 1}))

    return R, H, i


def sdr_residuals(i, r, h, d_small, d_big, small_basis, big_basis):
    """Residual chains of r i = 1, h i = 0, i r = 1 + d h + h d and of the
    chain-map conditions for i and r.  Bases are lists of chains."""
    bad = {"ri": [], "hi": [], "ir": [], "i_chain": [], "r_chain": []}
    for x in small_basis:
        ix = apply_lin(i, x)
        if sub(apply_lin(r, ix), x):
            bad["ri"].append(x)
        if apply_lin(h, ix):
            bad["hi"].append(x)
        if sub(apply_lin(d_big, ix), apply_lin(i, apply_lin(d_small, x))):
            bad["i_chain"].append(x)
    for x in big_basis:
        lhs = apply_lin(i, apply_lin(r, x))
        rhs = dict(x)
        addto(rhs, apply_lin(d_big, apply_lin(h, x)))
        addto(rhs, apply_lin(h, apply_lin(d_big, x)))
        if sub(lhs, rhs):
            bad["ir"].append(x)
        if sub(apply_lin(d_small, apply_lin(r, x)), apply_lin(r, apply_lin(d_big, x))):
            bad["r_chain"].append(x)
    return bad


def connection_residuals(X, even, odd):
    """Witnesses against w1 + nabla b w1 = theta w1 on normalized 1-forms
    and w2 + b nabla w2 = 0 on Omega^2_nat, over X^2 basis chains."""
    F = X.F
    bad = {"w1": [], "w2": []}
    for x in odd:
        w = {k: v for (_t, k), v in x.items()}
        lhs = addto(dict(w), X.nabla_lin(F.apply(F.b, w)))
        if sub(lhs, X.iota_lin(X.theta_lin(w))):
            bad["w1"].append(x)
    for x in even:
        w = {k: v for (t, k), v in x.items() if t == 2}
        if w and addto(dict(w), F.apply(F.b, X.nabla_lin(w))):
            bad["w2"].append(x)
    return bad
