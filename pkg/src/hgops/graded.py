"""
Graded bookkeeping: linear combinations, the Koszul sign rule, tensor
coalgebras T(W) with deconcatenation, tensor products of coalgebras and the
cofree lifting of a degree-one component to a coalgebra map.

A linear combination is a plain ``dict`` key -> Fraction.  Words are tuples
of letters; every coalgebra here carries a degree function on letters which
already includes the shift (a degree-0 algebra element has letter degree -1
in its bar construction).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product


class MixedDegree(ValueError):
    pass


class TruncationOverflow(RuntimeError):
    """An operation produced a word longer than the declared window."""


# ----------------------------------------------------------------------
# linear combinations

def lin(*pairs):
    out = {}
    for k, c in pairs:
        addto(out, {k: c})
    return out


def addto(acc, x, c=1):
    """acc += c * x (in place); returns acc."""
    if not c:
        return acc
    for k, v in x.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def addterm(acc, k, c):
    if c:
        nv = acc.get(k, 0) + c
        if nv:
            acc[k] = nv
        else:
            del acc[k]
    return acc


def scale(x, c):
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


def sub(x, y):
    return addto(dict(x), y, -1)


def apply_linear(op, x):
    """Extend op: key -> lincomb linearly to the lincomb x."""
    out = {}
    for k, v in x.items():
        addto(out, op(k), v)
    return out


def clean(x):
    return {k: Fraction(v) for k, v in x.items() if v}


def sgn(e):
    return -1 if e & 1 else 1


# ----------------------------------------------------------------------
# graded bases

@dataclass(frozen=True)
class GradedBasis:
    labels: tuple
    degree: dict = field(hash=False)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        missing = [l for l in self.labels if l not in self.degree]
        if missing:
            raise ValueError("no degree for %r" % (missing,))


def homogeneous_degree(x, degree):
    """Common degree of the terms of x (None for 0); MixedDegree otherwise."""
    degs = {degree(k) for k in x}
    if len(degs) > 1:
        raise MixedDegree("element has terms of degrees %s" % sorted(degs))
    return degs.pop() if degs else None


def koszul_sign(permutation, degrees):
    """Sign of moving items with the given degrees into the order
    ``[degrees[p] for p in permutation]``; the product of (-1)^{|a||b|}
    over inverted pairs."""
    n = len(degrees)
    if sorted(permutation) != list(range(n)):
        raise ValueError("not a permutation of range(%d)" % n)
    e = 0
    for i in range(n):
        for j in range(i + 1, n):
            if permutation[i] > permutation[j]:
                e += degrees[permutation[i]] * degrees[permutation[j]]
    return sgn(e)


# ----------------------------------------------------------------------
# tensor coalgebras

def deconcat(word):
    """Deconcatenation coproduct: list of (left, right), all coefficients +1."""
    return [(word[:i], word[i:]) for i in range(len(word) + 1)]


class Coalgebra:
    """Coalgebra with a basis, a distinguished group-like basis element
    ``one`` (counit 1 on it and 0 on every other basis key) and an optional
    degree +1 coderivation."""

    one = None

    def degree(self, key):
        raise NotImplementedError

    def coproduct(self, key):
        """Iterable of (coef, left_key, right_key)."""
        raise NotImplementedError

    def counit(self, key):
        return 1 if key == self.one else 0

    def differential(self, key):
        return {}

    def size(self, key):
        """Word length used for truncation windows."""
        raise NotImplementedError

    def reduced_coproduct(self, key):
        return [(c, l, r) for c, l, r in self.coproduct(key) if l != self.one and r != self.one]


class TensorCoalgebra(Coalgebra):
    """T(W) on letters with degrees ``letter_degree`` (shift already applied).

    ``differential`` is an optional callable word -> lincomb of words.
    """

    one = ()

    def __init__(self, letter_degree, differential=None, letters=None, name="T"):
        self.letter_degree = letter_degree
        self._d = differential
        self.letters = letters
        self.name = name

    def degree(self, word):
        return sum(self.letter_degree(x) for x in word)

    def coproduct(self, word):
        return [(1, l, r) for l, r in deconcat(word)]

    def differential(self, word):
        return self._d(word) if self._d else {}

    def size(self, word):
        return len(word)

    def basis(self, max_len, min_len=0):
        if self.letters is None:
            raise ValueError("letters unknown; cannot enumerate a window")
        out = []
        for n in range(min_len, max_len + 1):
            out.extend(product(self.letters, repeat=n))
        return out


class TrivialCoalgebra(Coalgebra):
    """The ground field k as a coalgebra; unit object for tensor products."""

    one = ()

    def degree(self, key):
        return 0

    def coproduct(self, key):
        return [(1, (), ())]

    def size(self, key):
        return 0

    def basis(self, max_len, min_len=0):
        return [()] if min_len == 0 else []


class TensorProductCoalgebra(Coalgebra):
    """C (x) D with coproduct (1 (x) R (x) 1)(Delta_C (x) Delta_D), R the
    signed exchange, and differential d_C (x) 1 + 1 (x) d_D."""

    def __init__(self, C, D):
        self.C, self.D = C, D
        self.one = (C.one, D.one)

    def degree(self, key):
        return self.C.degree(key[0]) + self.D.degree(key[1])

    def coproduct(self, key):
        c, d = key
        D = self.D
        out = []
        for a, c1, c2 in self.C.coproduct(c):
            s2 = self.C.degree(c2)
            for b, d1, d2 in D.coproduct(d):
                out.append((a * b * sgn(s2 * D.degree(d1)), (c1, d1), (c2, d2)))
        return out

    def counit(self, key):
        return self.C.counit(key[0]) * self.D.counit(key[1])

    def differential(self, key):
        c, d = key
        out = {}
        for k, v in self.C.differential(c).items():
            addterm(out, (k, d), v)
        s = sgn(self.C.degree(c))
        for k, v in self.D.differential(d).items():
            addterm(out, (c, k), s * v)
        return out

    def size(self, key):
        return self.C.size(key[0]) + self.D.size(key[1])

    def basis(self, max_len, min_len=0):
        out = []
        for a in self.C.basis(max_len):
            la = self.C.size(a)
            for b in self.D.basis(max_len - la):
                if la + self.D.size(b) >= min_len:
                    out.append((a, b))
        return out


def tensor_coalgebra(C, D):
    return TensorProductCoalgebra(C, D)


def apply_coproduct(C, x):
    """Delta on a lincomb; keys of the result are (left, right)."""
    out = {}
    for k, v in x.items():
        for c, l, r in C.coproduct(k):
            addterm(out, (l, r), c * v)
    return out


def check_coassociative(C, keys):
    """Residual keys where (Delta (x) 1)Delta != (1 (x) Delta)Delta."""
    bad = []
    for k in keys:
        lhs, rhs = {}, {}
        for c, l, r in C.coproduct(k):
            for c2, ll, lr in C.coproduct(l):
                addterm(lhs, (ll, lr, r), c * c2)
            for c2, rl, rr in C.coproduct(r):
                addterm(rhs, (l, rl, rr), c * c2)
        if lhs != rhs:
            bad.append(k)
    return bad


def check_counit(C, keys):
    bad = []
    for k in keys:
        left, right = {}, {}
        for c, l, r in C.coproduct(k):
            addterm(left, r, c * C.counit(l))
            addterm(right, l, c * C.counit(r))
        if left != {k: 1} or right != {k: 1}:
            bad.append(k)
    return bad


def check_coderivation(C, keys):
    """Keys where Delta d != (d (x) 1 + 1 (x) d) Delta (Koszul signs)."""
    bad = []
    for k in keys:
        lhs = apply_coproduct(C, C.differential(k))
        rhs = {}
        for c, l, r in C.coproduct(k):
            for dl, v in C.differential(l).items():
                addterm(rhs, (dl, r), c * v)
            s = sgn(C.degree(l))
            for dr, v in C.differential(r).items():
                addterm(rhs, (l, dr), c * v * s)
        if lhs != rhs:
            bad.append(k)
    return bad


def check_square_zero(C, keys):
    bad = []
    for k in keys:
        if apply_linear(C.differential, C.differential(k)):
            bad.append(k)
    return bad


# ----------------------------------------------------------------------
# cofree lifting

def cofree_lift(m, letter_degree, max_len=None):
    """Coalgebra map T(W) (x) T(W) -> T(W) with degree-one component m.

    m(alpha, beta) -> lincomb of letters, of total degree 0, with
    m((), ()) = 0.  The n-th component is m^{(x) n} applied to the
    (n-1)-fold coproduct of T(W) (x) T(W); the sign is the Koszul sign of
    interleaving alpha_1..alpha_n beta_1..beta_n into pairs.
    Returns cup(alpha, beta) -> lincomb of words; a word longer than
    ``max_len`` raises TruncationOverflow.
    """

    def wdeg(w):
        return sum(letter_degree(x) for x in w)

    @lru_cache(maxsize=None)
    def cup(alpha, beta):
        if not alpha and not beta:
            return {(): Fraction(1)}
        out = {}
        for i in range(len(alpha) + 1):
            a1, arest = alpha[:i], alpha[i:]
            da = wdeg(arest)
            for j in range(len(beta) + 1):
                if i == 0 and j == 0:
                    continue
                b1, brest = beta[:j], beta[j:]
                head = m(a1, b1)
                if not head:
                    continue
                tail = cup(arest, brest)
                if not tail:
                    continue
                s = sgn(wdeg(b1) * da)
                for x, u in head.items():
                    for w, v in tail.items():
                        addterm(out, (x,) + w, s * u * v)
        if max_len is not None:
            for w in out:
                if len(w) > max_len:
                    raise TruncationOverflow("word of length %d > %d" % (len(w), max_len))
        return out

    def lift(alpha, beta):
        return dict(cup(tuple(alpha), tuple(beta)))

    lift.cache = cup
    return lift


def degree_one_component(cup, alpha, beta):
    """Length-one part of cup(alpha, beta), as a lincomb of letters."""
    return {w[0]: v for w, v in cup(alpha, beta).items() if len(w) == 1}
