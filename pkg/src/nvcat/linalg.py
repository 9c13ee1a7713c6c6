"""Dense exact linear algebra over a coefficient field.

Matrices are lists of row lists of field elements.  Everything is
deterministic: pivots are always the first nonzero entry in scan order,
so repeated runs give identical bases.
"""

from __future__ import annotations


def zeros(field, rows: int, cols: int):
    z = field.zero()
    return [[z for _ in range(cols)] for _ in range(rows)]


def identity(field, n: int):
    m = zeros(field, n, n)
    one = field.one()
    for i in range(n):
        m[i][i] = one
    return m


def mat_vec(A, v, field):
    out = []
    z = field.zero()
    for row in A:
        s = z
        for a, x in zip(row, v):
            if a != z and x != z:
                s = s + a * x
        out.append(s)
    return out


def mat_mul(A, B, field):
    if not A or not B:
        return []
    n, m, k = len(A), len(B), len(B[0])
    z = field.zero()
    out = zeros(field, n, k)
    for i in range(n):
        Ai = A[i]
        for j in range(m):
            a = Ai[j]
            if a == z:
                continue
            Bj = B[j]
            row = out[i]
            for c in range(k):
                row[c] = row[c] + a * Bj[c]
    return out


def rref(A, field):
    """Row-reduce a copy of A; returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    z = field.zero()
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if R[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = field.one() / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != z:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A, field) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A, field)[1])


def kernel_basis(A, field, cols: int | None = None):
    """Basis of the null space of A (vectors of length cols)."""
    if cols is None:
        cols = len(A[0]) if A else 0
    if cols == 0:
        return []
    if not A:
        return [
            [field.one() if i == j else field.zero() for i in range(cols)]
            for j in range(cols)
        ]
    R, pivots = rref(A, field)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    z = field.zero()
    for fc in free:
        v = [z] * cols
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][fc]
        basis.append(v)
    return basis


def solve(A, b, field):
    """One solution x of A x = b, or None.  Free variables are set to zero."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [A[i][:] + [b[i]] for i in range(rows)]
    R, pivots = rref(aug, field)
    z = field.zero()
    # inconsistent iff a pivot lands in the augmented column
    if cols in pivots:
        return None
    x = [z] * cols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][cols]
    return x


def column_space_coords(columns, v, field):
    """Coordinates of v in the span of the given column vectors, or None."""
    if not columns:
        n = len(v)
        z = field.zero()
        return [] if all(x == z for x in v) else None
    A = [[col[i] for col in columns] for i in range(len(v))]
    return solve(A, v, field)


class Subquotient:
    """The space (cycles)/(boundaries) inside an ambient k^n.

    ``cycles`` and ``boundaries`` are lists of ambient vectors with
    span(boundaries) contained in span(cycles).  Chooses representative
    vectors deterministically and maps any cycle to quotient coordinates.
    """

    def __init__(self, cycles, boundaries, field, ambient_dim: int):
        self.field = field
        self.ambient_dim = ambient_dim
        z = field.zero()
        # greedily extend a basis of the boundary space by cycle vectors
        span = [b[:] for b in boundaries]
        self._boundary_count = 0
        R, _ = rref(span, field) if span else ([], [])
        span = [row for row in R if any(x != z for x in row)]
        self._boundary_count = len(span)
        self.representatives = []
        for v in cycles:
            cand = span + [v[:]]
            R, piv = rref(cand, field)
            new_rank = len(piv)
            if new_rank > len(span):
                span = [row for row in R if any(x != z for x in row)]
                self.representatives.append(v[:])
        self.dim = len(self.representatives)
        self._boundaries = boundaries

    def coords(self, v):
        """Quotient coordinates of cycle v; None if v is not in the cycle span."""
        cols = self._boundaries + self.representatives
        sol = column_space_coords(cols, v, self.field)
        if sol is None:
            return None
        return sol[len(self._boundaries):]

    def is_zero_class(self, v) -> bool:
        c = self.coords(v)
        if c is None:
            raise ValueError("vector is not a cycle in this subquotient")
        z = self.field.zero()
        return all(x == z for x in c)
