"""
Puschnigg's lift p : X(C) (x) X(D) -> X^2(C (x) D), the induced pairings
on X of bar constructions, and partitions of points on a circle.

Forms over C (x) D are tuples of keys (c, d) of the tensor product
coalgebra.  The factors of p are placed by the Koszul rule, with the slot
suspensions treated as symbols of degree 1.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graded import TensorProductCoalgebra, addterm, addto, deconcat, sgn, sub
from .xcomplex import FormsX2, apply_lin, part, tag

HALF = Fraction(1, 2)
SUSP = object()


def arrange_sign(items, order, degree):
    """Koszul sign of reordering ``items`` (with degrees given by ``degree``,
    SUSP having degree 1) into ``order`` (a permutation of indices)."""
    degs = [1 if it is SUSP else degree(it) for it in items]
    e = 0
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                e += degs[order[i]] * degs[order[j]]
    return sgn(e)


# ----------------------------------------------------------------------
# partitions of points on a circle

def enumerate_partitions(n_points, k):
    """Partitions of the points 0..n_points-1, in clockwise order on a
    circle, into k consecutive (possibly empty) intervals listed clockwise.

    A partition is a tuple of k tuples of points.  Its intervals read
    clockwise around the circle; the sequence of blocks is taken up to
    cyclic relabelling of where the first block starts, so two partitions
    are equal iff they give the same ordered blocks.  Empty intervals are
    located by the gap they sit in.
    """
    if n_points < 1 or k < 1:
        raise ValueError("need at least one point and one interval")
    pts = tuple(range(n_points))
    seen = set()
    out = []
    # choose the start of the first block (a gap 0..n-1, gap g sits before point g)
    # and k-1 further cut positions among the following n gaps (with repetition)
    for start in range(n_points):
        rot = pts[start:] + pts[:start]
        for cuts in _weak_cuts(n_points, k - 1):
            bounds = (0,) + cuts + (n_points,)
            blocks = tuple(rot[bounds[i]:bounds[i + 1]] for i in range(k))
            key = _canonical(blocks, start, n_points)
            if key not in seen:
                seen.add(key)
                out.append(blocks)
    return out


def _weak_cuts(n, r):
    """Non-decreasing r-tuples of cut positions in 0..n."""
    def rec(r, lo):
        if r == 0:
            yield ()
            return
        for c in range(lo, n + 1):
            for rest in rec(r - 1, c):
                yield (c,) + rest
    return list(rec(r, 0))


def _canonical(blocks, start, n):
    """Identify a partition by the gap position of every block start."""
    pos = start
    marks = []
    for b in blocks:
        marks.append(pos % n)
        pos += len(b)
    return tuple(marks), tuple(len(b) for b in blocks)


# ----------------------------------------------------------------------
# Puschnigg's map

class Puschnigg:
    """p : X(BW_1) (x) X(BW_2) -> X^2(BW_1 (x) BW_2) on basis pairs.

    Inputs are keys of the two X complexes (see xcomplex.BarX); odd keys
    are first included into Omega^1 by the section iota.
    """

    def __init__(self, XC, XD, keep=None):
        self.XC, self.XD = XC, XD
        # keep=(i10, i01, i11) selects one term of each pair of halves with
        # coefficient +-1 instead of both with +-1/2
        self.keep = keep
        self.E = TensorProductCoalgebra(XC.C, XD.C)
        self.X2 = FormsX2(self.E)

    def forms_of(self, X, key):
        t, k = key
        if t == 0:
            return {(k,): 1}
        return X.iota(k)

    def _deg(self, item):
        side, k = item
        return (self.XC if side == 0 else self.XD).C.degree(k)

    def _coef(self, case, j, coef):
        if self.keep is None:
            return coef
        return 2 * coef if self.keep[case] == j else 0

    def _place(self, items, order, coef, out, tagn, slots):
        """Add coef * sign * form built from ``slots`` to out."""
        if not coef:
            return
        s = arrange_sign(items, order, self._deg)
        one = self.E.one
        if any(e == one for e in slots[1:]):
            return
        addterm(out, (tagn, tuple(slots)), coef * s)

    def on_forms(self, fc, fd):
        out = {}
        C1 = SUSP
        if len(fc) == 1 and len(fd) == 1:
            addterm(out, (0, (fc[0], fd[0])), 1)
        elif len(fc) == 2 and len(fd) == 1:
            c0, c1 = fc
            (d,) = fd
            for d1, d2 in deconcat(d):
                items = [(0, c0), C1, (0, c1), (1, d1), (1, d2)]
                # (c0 d') s (c1 d'')
                self._place(items, [0, 3, 1, 2, 4], self._coef(0, 0, HALF), out, 1, [(c0, d1), (c1, d2)])
                # (c0 d'') s (c1 d')
                self._place(items, [0, 4, 1, 2, 3], self._coef(0, 1, HALF), out, 1, [(c0, d2), (c1, d1)])
        elif len(fc) == 1 and len(fd) == 2:
            (c,) = fc
            d0, d1 = fd
            for ca, cb in deconcat(c):
                items = [(0, ca), (0, cb), (1, d0), C1, (1, d1)]
                # (c' d0) s (c'' d1)
                self._place(items, [0, 2, 3, 1, 4], self._coef(1, 0, HALF), out, 1, [(ca, d0), (cb, d1)])
                # (c'' d0) s (c' d1)
                self._place(items, [1, 2, 3, 0, 4], self._coef(1, 1, HALF), out, 1, [(cb, d0), (ca, d1)])
        elif len(fc) == 2 and len(fd) == 2:
            c0, c1 = fc
            d0, d1 = fd
            for ca, cb in deconcat(c1):
                for da, db in deconcat(d0):
                    items = [(0, c0), C1, (0, ca), (0, cb), (1, da), (1, db), C1, (1, d1)]
                    # (c0 d0') s (c1' d0'') s (c1'' d1)
                    self._place(items, [0, 4, 1, 2, 5, 6, 3, 7], self._coef(2, 0, HALF), out, 2,
                                [(c0, da), (ca, db), (cb, d1)])
            for ca, cb in deconcat(c0):
                for da, db in deconcat(d1):
                    items = [(0, ca), (0, cb), C1, (0, c1), (1, d0), C1, (1, da), (1, db)]
                    # (c0' d0) s (c0'' d1') s (c1 d1'')
                    self._place(items, [0, 4, 2, 1, 6, 5, 3, 7], self._coef(2, 1, -HALF), out, 2,
                                [(ca, d0), (cb, da), (c1, db)])
        return out

    def __call__(self, kx, ky):
        out = {}
        for fc, u in self.forms_of(self.XC, kx).items():
            for fd, v in self.forms_of(self.XD, ky).items():
                addto(out, self.on_forms(fc, fd), u * v)
        return out


def x_degree(X, key):
    t, k = key
    if t == 0:
        return X.C.degree(k)
    a, g = k
    return X.W.degree(a) + X.C.degree(g) + 1


def tensor_d(XC, XD, pair):
    """d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy on X(C) (x) X(D)."""
    kx, ky = pair
    out = {}
    for k, v in XC.x_d(kx).items():
        addterm(out, (k, ky), v)
    s = sgn(x_degree(XC, kx))
    for k, v in XD.x_d(ky).items():
        addterm(out, (kx, k), s * v)
    return out


def pushforward_forms(f, x):
    """Omega(f) on a lincomb of tagged forms: f applied to every slot.
    ``f(key)`` is a lincomb of keys of the target coalgebra."""
    out = {}
    for (t, form), c in x.items():
        if t == 0:
            form = (form,)
        terms = [((), c)]
        for slot in form:
            img = f(slot)
            terms = [(acc + (k,), u * v) for acc, u in terms for k, v in img.items()]
        for slots, v in terms:
            addterm(out, (t, slots[0] if t == 0 else slots), v)
    return out


class XPairing:
    """X(C) (x) X(D) -> X(BW): R o X^2(f) o p for a DG coalgebra map
    f : C (x) D -> BW given on basis pairs (c, d)."""

    def __init__(self, XC, XD, XT, f, keep=None):
        self.p = Puschnigg(XC, XD, keep)
        self.XT = XT
        self.f = lru_cache(maxsize=None)(f)
        self._memo = {}

    def __call__(self, kx, ky):
        hit = self._memo.get((kx, ky))
        if hit is None:
            lifted = pushforward_forms(self.f, self.p(kx, ky))
            hit = self._memo[kx, ky] = apply_lin(self.XT.R, lifted)
        return hit

    def chain_residual(self, kx, ky):
        XC, XD = self.p.XC, self.p.XD
        lhs = apply_lin(self.XT.x_d, self(kx, ky))
        for (a, b), v in tensor_d(XC, XD, (kx, ky)).items():
            addto(lhs, self(a, b), -v)
        return lhs


# ----------------------------------------------------------------------
# the second pairing as explicit sums over partitions of circles

def iota_parts(W, key):
    """The section iota as a sum over 2-partitions (alpha, beta) of the
    circle y_0..y_n with y_0 in beta.  Yields (alpha, beta, sign, cut) where
    cut holds the degree parities on either side of the rotation point."""
    y0, ys = key
    y = (y0,) + tuple(ys)
    degs = [W.degree(t) for t in y]
    for alpha, beta in enumerate_partitions(len(y), 2):
        if 0 not in beta:
            continue
        cut = alpha[0] if alpha else beta[0]
        head, tail = sum(degs[:cut]), sum(degs[cut:])
        sign = -sgn(head * tail)
        if alpha:
            sign *= sgn(sum(degs[k] for k in alpha))
        yield tuple(y[k] for k in alpha), tuple(y[k] for k in beta), sign, (head % 2, tail % 2)


class EtaExplicit:
    """The second pairing X(BV) (x) X(BA) -> X(BA) written out as
    sums over circle partitions, with every sign a product of closed-form
    Koszul signs.  Each term is recorded with a family label so the signs
    can be tabulated."""

    FAMILIES = ("00", "01a", "01b", "10a", "10b", "11a", "11b")

    def __init__(self, S, XV, XA, weights=None):
        from .barcx import cup1_explicit
        self.weights = dict.fromkeys(self.FAMILIES, 1)
        self.weights.update(weights or {})
        self.A = S.B.A
        self.XV, self.XA = XV, XA
        self.WV, self.WA = XV.W, XA.W
        self._cup = lru_cache(maxsize=None)(lambda om, a: cup1_explicit(self.A, om, a))
        self.record = None

    def _wdeg(self, side, w):
        return (self.WV if side == 0 else self.WA).word_degree(w)

    def _arrange(self, items, order):
        return arrange_sign(items, order, lambda it: self._wdeg(*it))

    def _note(self, family, blocks, cut, sign):
        if self.record is not None:
            sig = (family, tuple(self._wdeg(*b) % 2 for b in blocks), cut)
            self.record.setdefault(sig, set()).add(sign)

    # closed forms of the last step -------------------------------------
    def _theta(self, u, v, coef, out):
        """theta on the 1-form (u | v) over BA."""
        if not u:
            addterm(out, (1, (v[0], v[1:])), -coef)
        elif len(u) == 1:
            addterm(out, (1, (u[0], v)), coef * sgn(self.WA.degree(u[0])))

    def _two_form(self, f0, f1, f2, coef, out):
        """d nabla (even part) and theta d_2 nabla (odd part) on (f0|f1|f2)."""
        dg = self.WA.word_degree
        e0 = dg(f0) * (dg(f1) + dg(f2))
        if len(f2) == 1:
            addterm(out, (0, f1 + f2 + f0), coef * sgn(e0 + dg(f1)))
            if len(f1) == 1:
                for k, v in self.WA.mu(f1[0], f2[0]).items():
                    addterm(out, (1, (k, f0)), coef * v * sgn(e0 + dg(f1)))

    def _slots(self, pairs):
        """Expand cup_1 slotwise: yields (words, coefficient)."""
        terms = [((), 1)]
        for om, a in pairs:
            img = self._cup(om, a)
            terms = [(acc + (w,), c * v) for acc, c in terms for w, v in img.items()]
        return terms

    # the four cases ----------------------------------------------------
    def __call__(self, kx, ky):
        (tx, x), (ty, y) = kx, ky
        out = {}
        if tx == 0 and ty == 0:
            for w, c in self._cup(x, y).items():
                addterm(out, (0, w), c)
        elif tx == 0:
            self._case01(x, y, out)
        elif ty == 0:
            self._case10(x, y, out)
        else:
            self._case11(x, y, out)
        return {k: v for k, v in out.items() if v}

    def _case01(self, x, key, out):
        for al, be, s_i, cut in iota_parts(self.WA, key):
            for x1, x2 in deconcat(x):
                items = [(0, x1), (0, x2), (1, al), SUSP, (1, be)]
                for fam, order, (u_om, v_om) in (("01a", [0, 2, 3, 1, 4], (x1, x2)),
                                                 ("01b", [1, 2, 3, 0, 4], (x2, x1))):
                    s = s_i * self._arrange(items, order) * self.weights[fam]
                    self._note(fam, [(0, u_om), (1, al), (0, v_om), (1, be)], cut, s)
                    for (u, v), c in self._slots([(u_om, al), (v_om, be)]):
                        self._theta(u, v, HALF * s * c, out)

    def _case10(self, key, a, out):
        for al, be, s_i, cut in iota_parts(self.WV, key):
            for a1, a2 in deconcat(a):
                items = [(0, al), SUSP, (0, be), (1, a1), (1, a2)]
                for fam, order, (u_a, v_a) in (("10a", [0, 3, 1, 2, 4], (a1, a2)),
                                               ("10b", [0, 4, 1, 2, 3], (a2, a1))):
                    s = s_i * self._arrange(items, order) * self.weights[fam]
                    self._note(fam, [(0, al), (1, u_a), (0, be), (1, v_a)], cut, s)
                    for (u, v), c in self._slots([(al, u_a), (be, v_a)]):
                        self._theta(u, v, HALF * s * c, out)

    def _case11(self, key, keyd, out):
        for al, be, s1, cut1 in iota_parts(self.WV, key):
            for al2, be2, s2, cut2 in iota_parts(self.WA, keyd):
                cut = cut1 + cut2
                s_i = s1 * s2
                for b1, b2 in deconcat(be):
                    for c1, c2 in deconcat(al2):
                        if not b1 and not c2:
                            continue
                        items = [(0, al), SUSP, (0, b1), (0, b2), (1, c1), (1, c2), SUSP, (1, be2)]
                        s = s_i * self._arrange(items, [0, 4, 1, 2, 5, 6, 3, 7]) * self.weights["11a"]
                        self._note("11a", [(0, al), (1, c1), (0, b1), (1, c2), (0, b2), (1, be2)], cut, s)
                        for (f0, f1, f2), c in self._slots([(al, c1), (b1, c2), (b2, be2)]):
                            self._two_form(f0, f1, f2, HALF * s * c, out)
                for a1, a2 in deconcat(al):
                    for c1, c2 in deconcat(be2):
                        if not a2 and not c1:
                            continue
                        items = [(0, a1), (0, a2), SUSP, (0, be), (1, al2), SUSP, (1, c1), (1, c2)]
                        s = s_i * self._arrange(items, [0, 4, 2, 1, 6, 5, 3, 7]) * self.weights["11b"]
                        self._note("11b", [(0, a1), (1, al2), (0, a2), (1, c1), (0, be), (1, c2)], cut, s)
                        for (f0, f1, f2), c in self._slots([(a1, al2), (a2, c1), (be, c2)]):
                            self._two_form(f0, f1, f2, -HALF * s * c, out)

    def sign_table(self, pairs):
        """Signature -> sign over the given basis pairs.  A signature is the
        family, the degree parities of the blocks and of the rotation cuts."""
        self.record = {}
        try:
            for kx, ky in pairs:
                self(kx, ky)
            table = {}
            for sig, signs in self.record.items():
                if len(signs) != 1:
                    raise SignMismatch("signature %r carries both signs" % (sig,))
                table[sig] = next(iter(signs))
            return table
        finally:
            self.record = None


class SignMismatch(AssertionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def eta_residual(T, E, kx, ky):
    """Compositional pairing minus the explicit one on a basis pair."""
    return sub(T(kx, ky), E(kx, ky))


__all__ = [
    "enumerate_partitions", "Puschnigg", "XPairing", "tensor_d", "x_degree",
    "pushforward_forms", "arrange_sign", "combinations", "part", "tag",
    "iota_parts", "EtaExplicit", "SignMismatch", "eta_residual",
]
