"""
Brace algebras and homotopy Gerstenhaber structures.

Degrees here are brace degrees, i.e. degrees in the desuspended space on
which the braces have degree zero.  For Hochschild cochains the brace
degree of an arity-n cochain is n - 1.
"""

from functools import lru_cache
from itertools import combinations, product

from .algebra import arity, multiplication_cochain
from .graded import addterm, addto, cofree_lift, scale, sgn, sub


class MaurerCartanViolated(ValueError):
    def __init__(self, residual):
        super().__init__("m{m} != 0 (%d nonzero terms)" % len(residual))
        self.residual = residual


class ArityOverflow(ValueError):
    pass


def expand(elems):
    """Multilinear expansion: yields (keys, coefficient)."""
    for tup in product(*[list(e.items()) for e in elems]):
        c = 1
        for _, v in tup:
            c *= v
        yield tuple(k for k, _ in tup), c


class BraceStructure:
    """Interface: ``degree(key)`` and ``brace(key, keys)`` on basis keys."""

    def degree(self, key):
        raise NotImplementedError

    def brace(self, x, xs):
        raise NotImplementedError

    def brace_elem(self, x, xs):
        out = {}
        for keys, c in expand([x] + list(xs)):
            addto(out, self.brace(keys[0], keys[1:]), c)
        return out

    def max_args(self, key):
        """Upper bound on the number of brace arguments that can give a
        nonzero result (None if unbounded)."""
        return None

    def elem_degree(self, x):
        degs = {self.degree(k) for k in x}
        if len(degs) > 1:
            from .graded import MixedDegree
            raise MixedDegree("inhomogeneous element")
        return degs.pop() if degs else 0


class HochschildBraces(BraceStructure):
    """Getzler's braces on C(A, A):

    x{x_1..x_m}(a_1..a_n) = sum (-1)^eps x(a_1, .., x_1(a_{i_1+1}..a_{i_1+d_1}), .., a_n)

    with d_p = arity(x_p), eps = sum_p (arity(x_p) - 1) i_p, and
    non-overlapping insertion blocks.
    """

    def __init__(self, A, arity_bound=None):
        self.A = A
        self.arity_bound = arity_bound
        self._cache = {}

    def degree(self, key):
        return len(key[0]) - 1

    def max_args(self, key):
        return len(key[0])

    def brace(self, x, xs):
        key = (x, tuple(xs))
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._brace(x, tuple(xs))
        return hit

    def _brace(self, x, xs):
        ins, out = x
        n = len(ins)
        m = len(xs)
        if m == 0:
            return {x: 1}
        if m > n:
            return {}
        result = {}
        if self.arity_bound is not None:
            total = n + sum(len(k[0]) - 1 for k in xs)
            if total > self.arity_bound:
                raise ArityOverflow("brace output arity %d > %d" % (total, self.arity_bound))
        for slots in combinations(range(n), m):
            ok = all(xs[p][1] == ins[slots[p]] for p in range(m))
            if not ok:
                continue
            new_ins = []
            eps = 0
            p = 0
            for k in range(n):
                if p < m and slots[p] == k:
                    eps += (len(xs[p][0]) - 1) * len(new_ins)
                    new_ins.extend(xs[p][0])
                    p += 1
                else:
                    new_ins.append(ins[k])
            addterm(result, (tuple(new_ins), out), sgn(eps))
        return result


# ----------------------------------------------------------------------
# identities

@lru_cache(maxsize=None)
def _interleavings(m, n):
    """All 0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n as a tuple of pairs."""
    def rec(p, lo):
        if p == m:
            yield ()
            return
        for i in range(lo, n + 1):
            for j in range(i, n + 1):
                for rest in rec(p + 1, j):
                    yield ((i, j),) + rest
    return tuple(rec(0, 0))


def pre_jacobi_rhs(B, x, xs, ys):
    """Right-hand side of the higher pre-Jacobi identity, for basis keys."""
    out = {}
    m, n = len(xs), len(ys)
    ydeg = [B.degree(y) for y in ys]
    for pos in _interleavings(m, n):
        eps = 0
        args = []
        prev = 0
        for p, (i, j) in enumerate(pos):
            eps += B.degree(xs[p]) * sum(ydeg[:i])
            args.extend({y: 1} for y in ys[prev:i])
            args.append(B.brace(xs[p], ys[i:j]))
            prev = j
        args.extend({y: 1} for y in ys[prev:])
        addto(out, B.brace_elem({x: 1}, args), sgn(eps))
    return out


def pre_jacobi_keys(B, x, xs, ys):
    """LHS - RHS of the pre-Jacobi identity on basis keys (fast path)."""
    xs, ys = tuple(xs), tuple(ys)
    out = {}
    for t, c in B.brace(x, xs).items():
        addto(out, B.brace(t, ys), c)
    ydeg = [B.degree(y) for y in ys]
    cap = B.max_args(x)
    slack = len(xs) + len(ys) - (cap if cap is not None else len(xs) + len(ys))
    for pos in _interleavings(len(xs), len(ys)):
        if slack > 0 and sum(j - i for i, j in pos) < slack:
            continue
        eps = 0
        parts = []
        prev = 0
        for p, (i, j) in enumerate(pos):
            eps += B.degree(xs[p]) * sum(ydeg[:i])
            inner = B.brace(xs[p], ys[i:j])
            if not inner:
                break
            parts.append((ys[prev:i], inner))
            prev = j
        else:
            s = -sgn(eps)
            tail = ys[prev:]
            for choice in product(*[list(inner.items()) for _, inner in parts]):
                args = []
                c = s
                for (head, _), (k, v) in zip(parts, choice):
                    args.extend(head)
                    args.append(k)
                    c *= v
                args.extend(tail)
                addto(out, B.brace(x, tuple(args)), c)
    return out


def pre_jacobi_exhaustive(B, keys, max_len):
    """Run the pre-Jacobi check over all basis x, all lists xs and ys of
    basis keys of length <= max_len.  Returns (cases, failures) where
    failures lists (x, xs, ys, residual).

    When xs is nonempty and x{xs} = 0 every term on both sides vanishes
    too (each RHS term feeds the outputs of xs, in order, into slots of
    x), so those cases are counted without evaluation.
    """
    lists = [()]
    for n in range(1, max_len + 1):
        lists.extend(product(keys, repeat=n))
    cases = 0
    failures = []
    for x in keys:
        for xs in lists:
            if xs and not B.brace(x, xs):
                cases += len(lists)
                continue
            for ys in lists:
                cases += 1
                r = pre_jacobi_keys(B, x, xs, ys)
                if r:
                    failures.append((x, xs, ys, r))
    return cases, failures


def check_pre_jacobi(B, x, xs, ys):
    """LHS - RHS of x{xs}{ys} = sum (-1)^eps x{.., x_p{..}, ..}; multilinear
    in the lincombs x, xs, ys."""
    out = {}
    for keys, c in expand([x] + list(xs) + list(ys)):
        kx, kxs, kys = keys[0], keys[1:1 + len(xs)], keys[1 + len(xs):]
        lhs = B.brace_elem(B.brace(kx, kxs), [{y: 1} for y in kys])
        addto(out, sub(lhs, pre_jacobi_rhs(B, kx, kxs, kys)), c)
    return out


def lie_bracket(B, x, y):
    """[x, y] = x{y} - (-1)^{|x||y|} y{x}."""
    out = {}
    for (kx, ky), c in expand([x, y]):
        addto(out, B.brace(kx, (ky,)), c)
        addto(out, B.brace(ky, (kx,)), -c * sgn(B.degree(kx) * B.degree(ky)))
    return out


def jacobi_residual(B, x, y, z):
    """[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] for homogeneous inputs."""
    dx, dy = B.elem_degree(x), B.elem_degree(y)
    r = sub(lie_bracket(B, x, lie_bracket(B, y, z)), lie_bracket(B, lie_bracket(B, x, y), z))
    return addto(r, lie_bracket(B, y, lie_bracket(B, x, z)), -sgn(dx * dy))


# ----------------------------------------------------------------------
# the coalgebra map T(V[1]) (x) T(V[1]) -> T(V[1])

def cup_words(B, alpha, beta):
    """(x_1..x_m) cup (y_1..y_n) = sum (-1)^eps (y_1..y_{i_1}, x_1{y_{i_1+1}..y_{j_1}}, .., y_n)
    over 0 <= i_1 <= j_1 <= .. <= i_m <= j_m <= n, eps as in pre-Jacobi."""
    alpha, beta = tuple(alpha), tuple(beta)
    m, n = len(alpha), len(beta)
    ydeg = [B.degree(y) for y in beta]
    out = {}
    for pos in _interleavings(m, n):
        eps = 0
        pieces = []
        prev = 0
        for p, (i, j) in enumerate(pos):
            eps += B.degree(alpha[p]) * sum(ydeg[:i])
            pieces.extend({y: 1} for y in beta[prev:i])
            pieces.append(B.brace(alpha[p], beta[i:j]))
            prev = j
        pieces.extend({y: 1} for y in beta[prev:])
        s = sgn(eps)
        for keys, c in expand(pieces):
            addterm(out, keys, s * c)
    return out


def brace_component(B):
    """The degree-one component m of the cup product: m((), (y,)) = y,
    m((x,), beta) = x{beta}, zero otherwise (left increasing)."""

    def m(alpha, beta):
        if not alpha:
            return {beta[0]: 1} if len(beta) == 1 else {}
        if len(alpha) == 1:
            return B.brace(alpha[0], tuple(beta))
        return {}

    return m


def cup_via_lift(B, max_len=None):
    return cofree_lift(brace_component(B), B.degree, max_len)


def word_degree(B, w):
    return sum(B.degree(x) for x in w)


def cup_elem(B, a, b):
    out = {}
    for (wa, wb), c in expand([a, b]):
        addto(out, cup_words(B, wa, wb), c)
    return out


# ----------------------------------------------------------------------
# Maurer-Cartan elements

class MCStructure:
    """DG algebra from a Maurer-Cartan element m (m{m} = 0):

    delta x = (-1)^{|x|} [m, x],   x y = m{x, y}.

    ``bar_d1`` = [m, -] and ``product`` are the length-one and length-two
    components of the bar differential ad(m) on T(V[1]).
    """

    def __init__(self, B, m):
        self.B = B
        self.m = m
        res = B.brace_elem(m, [m])
        if res:
            raise MaurerCartanViolated(res)

    def degree(self, key):
        return self.B.degree(key)

    def bar_d1(self, x):
        return lie_bracket(self.B, self.m, x)

    def delta(self, x):
        out = {}
        for k, c in x.items():
            addto(out, lie_bracket(self.B, self.m, {k: 1}), c * sgn(self.B.degree(k)))
        return out

    def product(self, x, y):
        return self.B.brace_elem(self.m, [x, y])

    def bracket(self, x, y):
        return lie_bracket(self.B, x, y)


def mc_dg_structure(B, m):
    """(delta, product) of the DG algebra defined by m; raises
    MaurerCartanViolated when m{m} != 0."""
    s = MCStructure(B, m)
    return s.delta, s.product


def hochschild_mc(A, arity_bound=None):
    B = HochschildBraces(A, arity_bound)
    return MCStructure(B, multiplication_cochain(A))


# ----------------------------------------------------------------------
# homotopy G axioms

def distributivity_residual(S, x1, x2, ys):
    """(x1 x2){y_1..y_n} - sum_k (-1)^eps x1{y_1..y_k} x2{y_k+1..y_n},
    eps = |x2| (|y_1| + .. + |y_k|) in brace degrees."""
    B = S.B
    out = B.brace_elem(S.product(x1, x2), ys)
    d2 = B.elem_degree(x2)
    for k in range(len(ys) + 1):
        eps = d2 * sum(B.elem_degree(y) for y in ys[:k])
        term = S.product(B.brace_elem(x1, ys[:k]), B.brace_elem(x2, ys[k:]))
        addto(out, term, -sgn(eps))
    return out


def homotopy_leibniz_residual(S, x, xs):
    """Homotopy Leibniz rule for braces x{x_1..x_{n+1}}, n >= 0.

    With D = [m, -] (the length-one part of the bar differential) and
    brace degrees |.|, eps_i = |x_1| + .. + |x_{i-1}|:

      D(x{xs}) - D(x){xs} - (-1)^{|x|} sum_i (-1)^{eps_i} x{.., D x_i, ..}
        = - (-1)^{|x||x_1|} x_1 . x{x_2..}
          + (-1)^{|x|} sum_i (-1)^{eps_i} x{.., x_i x_{i+1}, ..}
          - x{x_1..x_n} . x_{n+1}

    which is the length-one component of the derivation property of the
    bar differential on (x) cup (x_1..x_{n+1}).  Returns LHS - RHS.
    """
    B = S.B
    D = S.bar_d1
    dx = B.elem_degree(x)
    degs = [B.elem_degree(y) for y in xs]
    n1 = len(xs)
    lhs = D(B.brace_elem(x, xs))
    addto(lhs, B.brace_elem(D(x), xs), -1)
    for i in range(n1):
        eps = dx + sum(degs[:i])
        addto(lhs, B.brace_elem(x, xs[:i] + [D(xs[i])] + xs[i + 1:]), -sgn(eps))
    rhs = {}
    addto(rhs, S.product(xs[0], B.brace_elem(x, xs[1:])), -sgn(dx * degs[0]))
    for i in range(n1 - 1):
        eps = dx + sum(degs[:i])
        merged = S.product(xs[i], xs[i + 1])
        addto(rhs, B.brace_elem(x, xs[:i] + [merged] + xs[i + 2:]), sgn(eps))
    addto(rhs, S.product(B.brace_elem(x, xs[:-1]), xs[-1]), -1)
    return sub(lhs, rhs)
