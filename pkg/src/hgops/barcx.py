"""
Bar constructions of DG algebras.

A ``LetterAlgebra`` describes the letters of a bar construction: their
shifted degree, the product component ``mu`` (bar length 2 -> 1) and the
internal component ``d1`` (length 1 -> 1).  Both have degree +1 in the
shifted grading.  The bar differential is the coderivation

    D(x_1..x_n) = sum_i (-1)^{|x_1|+..+|x_{i-1}|} (.., d1 x_i, ..)
                + sum_i (-1)^{|x_1|+..+|x_{i-1}|} (.., mu(x_i, x_{i+1}), ..)

with shifted degrees |.|.  For an ungraded algebra (letters of degree -1)
the second sum is the classical b'(a_1..a_n) = sum (-1)^{i-1}(.., a_i a_{i+1}, ..).
"""

from functools import lru_cache
from itertools import product

from .algebra import arity, cochain_basis
from .brace import cup_words, word_degree
from .graded import TensorCoalgebra, TruncationOverflow, addterm, addto, sgn, sub


class LetterAlgebra:
    def __init__(self, degree, mu, d1=None, letters=None, unit=None, name="V"):
        self.degree = degree
        self.mu = mu
        self._d1 = d1
        self.letters = tuple(letters) if letters is not None else None
        self.unit = unit
        self.name = name

    def d1(self, x):
        return self._d1(x) if self._d1 else {}

    def word_degree(self, w):
        return sum(self.degree(x) for x in w)

    def unit_label(self):
        if self.unit and len(self.unit) == 1:
            (k, c), = self.unit.items()
            if c == 1:
                return k
        return None


def algebra_letters(A):
    """Letters of BA: basis labels of A in shifted degree -1."""
    return LetterAlgebra(lambda _: -1, A.product, None, A.labels, dict(A.unit), name="B" + A.name)


def _intify(x):
    return {k: int(v) if v.denominator == 1 else v for k, v in x.items()}


def cochain_letters(S, max_arity=2):
    """Letters of BV for V = C(A, A) with the structure of an MCStructure S:
    mu(x, y) = m{x, y}, d1 = [m, -]."""
    B = S.B
    A = B.A

    # results are shared between callers and must not be mutated; integral
    # coefficients are stored as int, which keeps arithmetic exact and fast
    @lru_cache(maxsize=None)
    def mu(x, y):
        return _intify(B.brace_elem(S.m, [{x: 1}, {y: 1}]))

    @lru_cache(maxsize=None)
    def d1(x):
        return _intify(S.bar_d1({x: 1}))

    letters = cochain_basis(A, max_arity)
    unit = {((), l): c for l, c in A.unit.items()}
    return LetterAlgebra(B.degree, mu, d1, letters, unit, name="BC(%s)" % A.name)


# ----------------------------------------------------------------------
# differentials

def bar_b_prime(W, word):
    word = tuple(word)
    out = {}
    e = 0
    for i in range(len(word) - 1):
        for k, c in W.mu(word[i], word[i + 1]).items():
            addterm(out, word[:i] + (k,) + word[i + 2:], sgn(e) * c)
        e += W.degree(word[i])
    return out


def bar_delta(W, word):
    word = tuple(word)
    out = {}
    e = 0
    for i, x in enumerate(word):
        for k, c in W.d1(x).items():
            addterm(out, word[:i] + (k,) + word[i + 1:], sgn(e) * c)
        e += W.degree(x)
    return out


def bar_d(W, word):
    return addto(bar_b_prime(W, word), bar_delta(W, word))


def bar_coalgebra(W):
    """BV as a DG coalgebra: deconcatenation and differential b' + delta."""
    return TensorCoalgebra(W.degree, lambda w: bar_d(W, w), W.letters, name="B" + W.name)


def apply_words(op, x):
    out = {}
    for w, c in x.items():
        addto(out, op(w), c)
    return out


def words(letters, max_len, min_len=0):
    out = []
    for n in range(min_len, max_len + 1):
        out.extend(product(letters, repeat=n))
    return out


# ----------------------------------------------------------------------
# the derivation property of the bar differential

def check_leibniz(W, cup, alpha, beta):
    """D(alpha cup beta) - D(alpha) cup beta - (-1)^{|alpha|} alpha cup D(beta)
    on words alpha, beta; ``cup(alpha, beta)`` returns a lincomb of words."""
    D = lambda w: bar_d(W, w)
    out = apply_words(D, cup(alpha, beta))
    for a, c in D(alpha).items():
        addto(out, cup(a, beta), -c)
    s = sgn(W.word_degree(alpha))
    for b, c in D(beta).items():
        addto(out, cup(alpha, b), -s * c)
    return out


# ----------------------------------------------------------------------
# the restricted product cup_1 : BV (x) BA -> BA

def cup1(S, omega, a, max_len=None):
    """Omega cup_1 a for a word Omega of cochains and a word a over A,
    as the part of Omega cup a landing in words of 0-cochains.  On
    0-cochains m{a, b} = ab, so BV_0 is BA."""
    a0 = tuple(((), l) for l in a)
    out = {}
    for w, c in cup_words(S.B, tuple(omega), a0).items():
        if all(not k[0] for k in w):
            addterm(out, tuple(k[1] for k in w), c)
    if max_len is not None:
        for w in out:
            if len(w) > max_len:
                raise TruncationOverflow("cup_1 output of length %d > %d" % (len(w), max_len))
    return out


def cup1_explicit(A, omega, a):
    """Closed formula: sum over placements of blocks of width d_p = arity(x_p)
    starting after i_p letters of a, of sign (-1)^{sum (d_p - 1) i_p}, times
    (a_1.., x_1(a_{i_1+1}..), ..)."""
    omega, a = tuple(omega), tuple(a)
    out = {}

    def rec(p, pos, prefix, coef, eps):
        if p == len(omega):
            rest = a[pos:]
            for w, c in prefix:
                addterm(out, w + rest, c * coef * sgn(eps))
            return
        ins, o = omega[p]
        d = len(ins)
        for i in range(pos, len(a) - d + 1):
            if a[i:i + d] != ins:
                continue
            nprefix = [(w + a[pos:i] + (o,), c) for w, c in prefix]
            rec(p + 1, i + d, nprefix, coef, eps + (d - 1) * i)

    rec(0, 0, [((), 1)], 1, 0)
    return out


def cup1_leibniz_residual(S, W_A, omega, a, WV=None):
    """b'(Omega cup_1 a) - (D Omega) cup_1 a - (-1)^{|Omega|} Omega cup_1 b'(a)."""
    WV = WV or cochain_letters(S)
    out = apply_words(lambda w: bar_b_prime(W_A, w), cup1(S, omega, a))
    for w, c in bar_d(WV, omega).items():
        addto(out, cup1(S, w, a), -c)
    s = sgn(word_degree(S.B, omega))
    for w, c in bar_b_prime(W_A, a).items():
        addto(out, cup1(S, omega, w), -s * c)
    return out


def bar_square(W, word):
    memo = W.__dict__.setdefault("_bar_d_memo", {})

    def d(w):
        hit = memo.get(w)
        if hit is None:
            hit = memo[w] = bar_d(W, w)
        return hit

    return apply_words(d, d(tuple(word)))


def anticommutator(W, word):
    """b' delta + delta b' on a word."""
    out = apply_words(lambda w: bar_delta(W, w), bar_b_prime(W, word))
    addto(out, apply_words(lambda w: bar_b_prime(W, w), bar_delta(W, word)))
    return out


__all__ = [
    "LetterAlgebra", "algebra_letters", "cochain_letters", "bar_b_prime",
    "bar_delta", "bar_d", "bar_coalgebra", "check_leibniz", "cup1",
    "cup1_explicit", "cup1_leibniz_residual", "bar_square", "anticommutator",
    "apply_words", "words", "sub", "arity",
]
