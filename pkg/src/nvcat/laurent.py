"""Exact arithmetic and Smith normal form over Laurent polynomials k[t, t^-1].

The ring is a PID (even Euclidean, with norm = exponent span of the
normalized polynomial), which is what makes the cover homology
computations possible.  Units are c * t^m with c != 0; the canonical
associate of a nonzero polynomial has lowest exponent 0 and leading
coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Field, FpElement


class LaurentPoly:
    """Laurent polynomial as a map exponent -> nonzero field element."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: dict | None = None):
        self.field = field
        z = field.zero()
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != z}

    # ---- constructors ----
    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def one(cls, field):
        return cls(field, {0: field.one()})

    @classmethod
    def t(cls, field, exp: int = 1):
        return cls(field, {exp: field.one()})

    @classmethod
    def const(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def from_int_coeffs(cls, field, coeffs: dict):
        return cls(field, {e: field.of(c) for e, c in coeffs.items()})

    # ---- basic queries ----
    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def span(self) -> int:
        """Euclidean norm: degree spread of the normalized polynomial."""
        return self.max_exp() - self.min_exp()

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def size(self) -> int:
        """Coefficient-size proxy used for pivot selection."""
        total = 0
        for c in self.coeffs.values():
            if isinstance(c, Fraction):
                total += c.numerator.bit_length() + c.denominator.bit_length()
            else:
                total += 1
        return total

    # ---- arithmetic ----
    def __add__(self, other):
        out = dict(self.coeffs)
        z = self.field.zero()
        for e, c in other.coeffs.items():
            s = out.get(e, z) + c
            if s == z:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.field, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.field, {e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out: dict = {}
            z = self.field.zero()
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    s = out.get(e, z) + c1 * c2
                    if s == z:
                        out.pop(e, None)
                    else:
                        out[e] = s
            return LaurentPoly(self.field, out)
        # scalar
        return LaurentPoly(self.field, {e: c * other for e, c in self.coeffs.items()})

    def shifted(self, k: int):
        return LaurentPoly(self.field, {e + k: c for e, c in self.coeffs.items()})

    def scaled(self, c):
        return LaurentPoly(self.field, {e: x * c for e, x in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # ---- normalization ----
    def canonical(self):
        """Canonical associate: lowest exponent 0, leading coefficient 1."""
        if self.is_zero():
            return self
        lead = self.coeffs[self.max_exp()]
        return self.shifted(-self.min_exp()).scaled(self.field.one() / lead)

    def unit_to_canonical(self):
        """Unit u with u * self == self.canonical()."""
        if self.is_zero():
            raise ValueError("zero has no canonical unit")
        lead = self.coeffs[self.max_exp()]
        return LaurentPoly(self.field, {-self.min_exp(): self.field.one() / lead})

    def evaluate(self, a, field=None):
        """Value at t = a (a nonzero for negative exponents)."""
        field = field or self.field
        out = field.zero()
        for e, c in sorted(self.coeffs.items()):
            out = out + c * field.power(a, e)
        return out

    def degree(self) -> int:
        """k-dimension of Lambda/(self): the span, for nonzero input."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        return self.span()

    # ---- display ----
    def __repr__(self):
        return self.to_str()

    def to_str(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            cs = self.field.fmt(c)
            if e == 0:
                term = cs
            else:
                te = "t" if e == 1 else f"t^{e}"
                if cs == "1":
                    term = te
                elif cs == "-1":
                    term = f"-{te}"
                else:
                    term = f"{cs}*{te}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


def divmod_laurent(a: LaurentPoly, b: LaurentPoly):
    """q, r with a = q*b + r and (r == 0 or span(r) < span(b))."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    field = a.field
    q = LaurentPoly.zero(field)
    r = a
    bspan = b.span()
    blead = b.coeffs[b.max_exp()]
    while not r.is_zero() and r.span() >= bspan:
        k = r.max_exp() - b.max_exp()
        c = r.coeffs[r.max_exp()] / blead
        term = LaurentPoly(field, {k: c})
        q = q + term
        r = r - term * b
    return q, r


def poly_divides(d: LaurentPoly, a: LaurentPoly) -> bool:
    if d.is_zero():
        return a.is_zero()
    _, r = divmod_laurent(a, d)
    return r.is_zero()


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Canonical-associate gcd via the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        _, r = divmod_laurent(a, b)
        a, b = b, r
    return a.canonical()


def poly_lcm(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero() or q.is_zero():
        return LaurentPoly.zero(p.field)
    g = poly_gcd(p, q)
    quot, rem = divmod_laurent(p * q, g)
    assert rem.is_zero()
    return quot.canonical()


class LaurentMatrix:
    """Dense matrix of Laurent polynomials."""

    def __init__(self, field: Field, rows: int, cols: int, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = LaurentPoly.zero(field)
            self.entries = [[z for _ in range(cols)] for _ in range(rows)]
        else:
            assert len(entries) == rows and all(len(r) == cols for r in entries)
            self.entries = [row[:] for row in entries]

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __setitem__(self, ij, value):
        self.entries[ij[0]][ij[1]] = value

    def copy(self):
        return LaurentMatrix(self.field, self.rows, self.cols, self.entries)

    @classmethod
    def identity(cls, field, n):
        m = cls(field, n, n)
        one = LaurentPoly.one(field)
        for i in range(n):
            m.entries[i][i] = one
        return m

    def mul(self, other: "LaurentMatrix") -> "LaurentMatrix":
        assert self.cols == other.rows
        out = LaurentMatrix(self.field, self.rows, other.cols)
        for i in range(self.rows):
            for k in range(self.cols):
                a = self.entries[i][k]
                if a.is_zero():
                    continue
                for j in range(other.cols):
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    out.entries[i][j] = out.entries[i][j] + a * b
        return out

    def mul_vector(self, vec):
        assert len(vec) == self.cols
        out = [LaurentPoly.zero(self.field) for _ in range(self.rows)]
        for i in range(self.rows):
            for j, v in enumerate(vec):
                if v.is_zero():
                    continue
                a = self.entries[i][j]
                if not a.is_zero():
                    out[i] = out[i] + a * v
        return out

    def specialize(self, a, target_field=None):
        """Evaluate every entry at t = a; returns a plain field matrix."""
        field = target_field or self.field
        return [
            [e.evaluate(a, field) for e in row]
            for row in self.entries
        ]

    def dump(self) -> str:
        return "\n".join(
            "[" + ", ".join(e.to_str() for e in row) + "]" for row in self.entries
        )


class LaurentSNF:
    """Result of the Smith normal form: U * A * V = diag(diagonal)."""

    def __init__(self, diagonal, U, V, Vinv, rank):
        self.diagonal = diagonal
        self.U = U
        self.V = V
        self.Vinv = Vinv
        self.rank = rank

    def invariant_factors(self):
        """Non-unit nonzero diagonal entries."""
        return [
            d for d in self.diagonal
            if not d.is_zero() and not d.is_unit()
        ]


def _pivot_key(p: LaurentPoly, i: int, j: int):
    return (p.span(), p.size(), i, j)


def smith_normal_form(A: LaurentMatrix) -> LaurentSNF:
    """Smith normal form with unit-determinant transforms.

    Deterministic: the pivot is always the entry of minimal
    (degree span, coefficient size, row, column).
    """
    field = A.field
    n, m = A.rows, A.cols
    M = A.copy()
    U = LaurentMatrix.identity(field, n)
    V = LaurentMatrix.identity(field, m)
    Vinv = LaurentMatrix.identity(field, m)
    E = M.entries

    def row_swap(i, j):
        E[i], E[j] = E[j], E[i]
        U.entries[i], U.entries[j] = U.entries[j], U.entries[i]

    def col_swap(i, j):
        for r in range(n):
            E[r][i], E[r][j] = E[r][j], E[r][i]
        for r in range(m):
            V.entries[r][i], V.entries[r][j] = V.entries[r][j], V.entries[r][i]
        Vinv.entries[i], Vinv.entries[j] = Vinv.entries[j], Vinv.entries[i]

    def row_addmul(dst, src, q: LaurentPoly):
        # row_dst += q * row_src
        for c in range(m):
            E[dst][c] = E[dst][c] + q * E[src][c]
        for c in range(n):
            U.entries[dst][c] = U.entries[dst][c] + q * U.entries[src][c]

    def col_addmul(dst, src, q: LaurentPoly):
        # col_dst += q * col_src
        for r in range(n):
            E[r][dst] = E[r][dst] + q * E[r][src]
        for r in range(m):
            V.entries[r][dst] = V.entries[r][dst] + q * V.entries[r][src]
        # Vinv row_src -= q * row_dst
        for c in range(m):
            Vinv.entries[src][c] = Vinv.entries[src][c] - q * Vinv.entries[dst][c]

    def row_scale(i, u: LaurentPoly):
        for c in range(m):
            E[i][c] = u * E[i][c]
        for c in range(n):
            U.entries[i][c] = u * U.entries[i][c]

    t = 0
    while t < min(n, m):
        # locate pivot candidate
        best = None
        for i in range(t, n):
            for j in range(t, m):
                p = E[i][j]
                if not p.is_zero():
                    key = _pivot_key(p, i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        # normalize pivot to its canonical associate; keeps coefficients small
        row_scale(t, E[t][t].unit_to_canonical())

        dirty = False
        for i in range(t + 1, n):
            if E[i][t].is_zero():
                continue
            q, r = divmod_laurent(E[i][t], E[t][t])
            row_addmul(i, t, -q)
            if not E[i][t].is_zero():
                dirty = True
        for j in range(t + 1, m):
            if E[t][j].is_zero():
                continue
            q, r = divmod_laurent(E[t][j], E[t][t])
            col_addmul(j, t, -q)
            if not E[t][j].is_zero():
                dirty = True
        if dirty:
            continue  # a smaller-norm entry appeared; redo pivot selection
        # enforce the divisibility chain
        offender = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if not E[i][j].is_zero() and not poly_divides(E[t][t], E[i][j]):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_addmul(t, offender, LaurentPoly.one(field))
            continue
        t += 1

    diagonal = []
    rank = 0
    for i in range(min(n, m)):
        d = E[i][i]
        if not d.is_zero():
            row_scale(i, d.unit_to_canonical())
            d = E[i][i]
            rank += 1
        diagonal.append(d)
    return LaurentSNF(diagonal, U, V, Vinv, rank)


def module_presentation(A: LaurentMatrix):
    """Decompose the module with one generator per column and one relation
    per row: Lambda^free_rank + sum of Lambda/(d_i).

    Returns (free_rank, invariant_factors).
    """
    snf = smith_normal_form(A)
    return A.cols - snf.rank, snf.invariant_factors()
