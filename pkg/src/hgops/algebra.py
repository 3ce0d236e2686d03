"""
Finite-dimensional algebras given by structure constants, and the
Hochschild cochain spaces C^n(A, A) = Hom(A^{(x) n}, A).

A basis cochain is the key ``(inputs, out)``: it sends the basis tuple
``inputs`` to the basis vector ``out`` and every other basis tuple to 0.
Its arity is ``len(inputs)``; a general cochain is a lincomb of such keys.
"""

from fractions import Fraction
from itertools import product

from .graded import addterm, addto


class ValidationError(ValueError):
    pass


def exact(c):
    """A rational scalar as int when integral, else as Fraction."""
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


class FdAlgebra:
    """Algebra with basis ``labels``, structure constants ``mul[(i, j)]``
    (a lincomb of labels) and a unit lincomb."""

    def __init__(self, labels, mul, unit, name="A"):
        self.labels = tuple(labels)
        self.name = name
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("duplicate basis labels")
        self.mul = {}
        for (i, j), v in mul.items():
            for l in (i, j, *v):
                if l not in self.labels:
                    raise ValidationError("unknown basis label %r in product" % (l,))
            v = {k: exact(c) for k, c in v.items() if c}
            if v:
                self.mul[i, j] = v
        self.unit = {k: exact(c) for k, c in unit.items() if c}
        for l in self.unit:
            if l not in self.labels:
                raise ValidationError("unknown basis label %r in unit" % (l,))

    @property
    def dim(self):
        return len(self.labels)

    def product(self, i, j):
        return self.mul.get((i, j), {})

    def multiply(self, x, y):
        out = {}
        for i, u in x.items():
            for j, v in y.items():
                addto(out, self.product(i, j), u * v)
        return out

    def unit_label(self):
        """The unit as a basis label, when it is one (else None)."""
        if len(self.unit) == 1:
            (k, c), = self.unit.items()
            if c == 1:
                return k
        return None

    def unit_violations(self):
        bad = []
        for l in self.labels:
            e = {l: Fraction(1)}
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                bad.append(l)
        return bad

    def associator_violations(self):
        bad = []
        for a, b, c in product(self.labels, repeat=3):
            x, y, z = {a: 1}, {b: 1}, {c: 1}
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                bad.append((a, b, c))
        return bad

    def is_associative(self):
        return not self.associator_violations()

    def validate(self, require_associative=False):
        if not self.unit:
            raise ValidationError("algebra %s has zero unit" % self.name)
        bad = self.unit_violations()
        if bad:
            raise ValidationError("unit law fails on %r" % (bad,))
        if require_associative and not self.is_associative():
            raise ValidationError("algebra %s is not associative" % self.name)
        return self

    def __repr__(self):
        return "FdAlgebra(%s, dim=%d)" % (self.name, self.dim)


# ----------------------------------------------------------------------
# standard examples

def ground_field():
    return FdAlgebra(["1"], {("1", "1"): {"1": 1}}, {"1": 1}, name="Q")


def dual_numbers():
    """Q[x]/(x^2) on the basis (1, x)."""
    mul = {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}}
    return FdAlgebra(["1", "x"], mul, {"1": 1}, name="Q[x]/(x^2)")


def q_times_q():
    """Q x Q on the idempotent basis (e1, e2); the unit is e1 + e2."""
    mul = {("e1", "e1"): {"e1": 1}, ("e2", "e2"): {"e2": 1}}
    return FdAlgebra(["e1", "e2"], mul, {"e1": 1, "e2": 1}, name="QxQ")


def nonassociative_example():
    """Unital but not associative: 1, x, y with x*y = x, y*x = 0, x*x = y,
    y*y = 0.  (x*x)*x = y*x = 0 while x*(x*x) = x*y = x."""
    mul = {("1", "1"): {"1": 1}}
    for l in ("x", "y"):
        mul["1", l] = {l: 1}
        mul[l, "1"] = {l: 1}
    mul["x", "y"] = {"x": 1}
    mul["x", "x"] = {"y": 1}
    return FdAlgebra(["1", "x", "y"], mul, {"1": 1}, name="nonassoc")


BUILTIN = {
    "Q": ground_field,
    "dual": dual_numbers,
    "QxQ": q_times_q,
}


# ----------------------------------------------------------------------
# cochains

def arity(key):
    return len(key[0])


def cochain_basis(A, max_arity, min_arity=0):
    out = []
    for n in range(min_arity, max_arity + 1):
        for ins in product(A.labels, repeat=n):
            for o in A.labels:
                out.append((ins, o))
    return out


def multiplication_cochain(A):
    m = {}
    for (i, j), v in A.mul.items():
        for k, c in v.items():
            addterm(m, ((i, j), k), c)
    return m


def element_cochain(A, a):
    """An element a of A (lincomb of labels) viewed as a 0-cochain."""
    return {((), l): Fraction(c) for l, c in a.items() if c}


def evaluate(A, x, args):
    """Value of the cochain lincomb x on basis labels ``args``."""
    args = tuple(args)
    out = {}
    for (ins, o), c in x.items():
        if ins == args:
            addterm(out, o, c)
    return out


def evaluate_on(A, x, vectors):
    """Multilinear evaluation of x on lincombs of labels."""
    out = {}
    for tup in product(*[list(v.items()) for v in vectors]):
        labels = tuple(l for l, _ in tup)
        c = 1
        for _, u in tup:
            c *= u
        addto(out, evaluate(A, x, labels), c)
    return out


def is_normalized(A, x):
    """True iff x vanishes whenever some input is the unit basis vector."""
    u = A.unit_label()
    if u is None:
        raise ValidationError("normalization needs the unit to be a basis vector")
    return all(u not in ins for (ins, _o) in x)


def hochschild_coboundary(A, phi):
    """Textbook coboundary:
    (d phi)(a_1..a_{n+1}) = a_1 phi(a_2..) + sum_i (-1)^i phi(.., a_i a_{i+1}, ..)
                            + (-1)^{n+1} phi(a_1..a_n) a_{n+1}."""
    out = {}
    by_arity = {}
    for k, c in phi.items():
        by_arity.setdefault(arity(k), {})[k] = c
    for n, part in by_arity.items():
        for args in product(A.labels, repeat=n + 1):
            val = {}
            rest = evaluate(A, part, args[1:])
            addto(val, A.multiply({args[0]: 1}, rest))
            for i in range(1, n + 1):
                merged = A.product(args[i - 1], args[i])
                for l, c in merged.items():
                    addto(val, evaluate(A, part, args[: i - 1] + (l,) + args[i + 1:]), (-1) ** i * c)
            addto(val, A.multiply(evaluate(A, part, args[:n]), {args[n]: 1}), (-1) ** (n + 1))
            for o, c in val.items():
                addterm(out, (args, o), c)
    return out


def cup_product(A, phi, psi):
    """(phi cup psi)(a..) = phi(a_1..a_p) psi(a_{p+1}..)."""
    out = {}
    for (i1, o1), c1 in phi.items():
        for (i2, o2), c2 in psi.items():
            for o, c in A.product(o1, o2).items():
                addterm(out, (i1 + i2, o), c1 * c2 * c)
    return out
