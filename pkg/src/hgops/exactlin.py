"""
Exact sparse linear algebra over the rationals.

Matrices are stored as dicts {(row, col): Fraction} with no zero entries.
Elimination is plain Gaussian elimination with a Markowitz-style pivot
choice (fewest entries in pivot row times pivot column) to keep fill low.
"""

from fractions import Fraction


class CompositionNonzero(ValueError):
    """Raised when d_out * d_in != 0 for a would-be complex."""


class SparseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        assert rows >= 0 and cols >= 0
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError("entry (%d, %d) outside %dx%d" % (i, j, rows, cols))
                v = Fraction(v)
                if v:
                    self.entries[i, j] = v

    @classmethod
    def from_dense(cls, rows):
        m = len(rows)
        n = len(rows[0]) if m else 0
        return cls(m, n, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def transpose(self):
        return SparseMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other):
        assert self.cols == other.rows, "shape mismatch"
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + u * v
        return SparseMatrix(self.rows, other.cols, out)

    def is_zero(self):
        return not self.entries

    def to_dense(self):
        A = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            A[i][j] = v
        return A

    def __eq__(self, other):
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, len(self.entries))


def _row_dicts(M):
    rows = {}
    for (i, j), v in M.entries.items():
        rows.setdefault(i, {})[j] = v
    return rows


def row_echelon(M):
    """Eliminate M; returns (pivots, reduced_rows) with pivots a list of
    (row_dict, pivot_col). Rows are reduced against earlier pivots only."""
    rows = _row_dicts(M)
    col_count = {}
    for r in rows.values():
        for j in r:
            col_count[j] = col_count.get(j, 0) + 1
    pivots = []
    active = dict(rows)
    while active:
        # Markowitz pivot: minimise (row_len - 1) * (col_count - 1)
        best = None
        for i, r in active.items():
            lr = len(r)
            for j in r:
                cost = (lr - 1) * (col_count[j] - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
                    if cost == 0:
                        break
            if best is not None and best[0] == 0:
                break
        _, pi, pj = best
        prow = active.pop(pi)
        for j in prow:
            col_count[j] -= 1
        pv = prow[pj]
        pivots.append((prow, pj))
        for i in [i for i, r in active.items() if pj in r]:
            r = active[i]
            f = r[pj] / pv
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    if j not in r:
                        col_count[j] = col_count.get(j, 0) + 1
                    r[j] = nv
                else:
                    if j in r:
                        del r[j]
                        col_count[j] -= 1
            if not r:
                del active[i]
    return pivots


def rank(M):
    """Exact rank over Q."""
    return len(row_echelon(M))


def rank_dense(M):
    """Textbook column-by-column elimination on a dense copy; independent
    elimination order, used as a cross-check."""
    A = M.to_dense()
    m, n = M.rows, M.cols
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, m):
            if A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r


def kernel_basis(M):
    """Basis of {v : M v = 0} as a list of dicts col -> Fraction."""
    A = M.to_dense()
    m, n = M.rows, M.cols
    pivcols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        A[r] = [a / pv for a in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivcols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in set(pivcols)]
    basis = []
    for fc in free:
        v = {fc: Fraction(1)}
        for row, pc in enumerate(pivcols):
            if A[row][fc]:
                v[pc] = -A[row][fc]
        basis.append(v)
    return basis


def homology_dim(d_in, d_out):
    """dim ker(d_out) - rank(d_in) for C' --d_in--> C --d_out--> C''."""
    assert d_in.rows == d_out.cols, "middle dimensions disagree"
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzero("d_out * d_in != 0")
    n = d_out.cols
    return n - rank(d_out) - rank(d_in)


def matrix_of(op, domain, codomain):
    """Matrix of a linear map given on basis keys.

    op(key) -> dict key -> coefficient; domain/codomain are lists of keys.
    Output terms outside the codomain raise KeyError (no silent truncation).
    """
    index = {k: i for i, k in enumerate(codomain)}
    entries = {}
    for j, key in enumerate(domain):
        for k, v in op(key).items():
            if v:
                entries[index[k], j] = v
    return SparseMatrix(len(codomain), len(domain), entries)
