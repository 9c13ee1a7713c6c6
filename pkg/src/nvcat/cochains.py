"""Cochains, twisted coboundaries, cohomology bases, and cup products.

The rank-one local system attached to a nonzero field element a and an
integral 1-cocycle has coboundary

    (delta_a u)([v0..v_{q+1}]) = a^(xi(v0, v1)) * u(d0) + sum_{i>=1} (-1)^i u(di),

the transpose of the cover boundary specialized at t = a.  The cup
product of an a-twisted cochain and a b-twisted cochain transports the
back face to the leading vertex:

    (u cup v)(sigma) = u(front) * b^(w_p) * v(back),

with w_p the cocycle sum along the leading edge path.  This convention
satisfies the Leibniz identity on the nose, which the test suite checks
at cochain level.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .complexes import InputError, IntegralCocycle, SimplicialComplex
from .fields import Field


@dataclass
class Cochain:
    X: SimplicialComplex
    field: Field
    degree: int
    values: list       # dense, aligned with X.simplices_of_dim(degree)
    twist: object      # field element a; field.one() means untwisted

    def value(self, simplex):
        return self.values[self.X.index_of(simplex)]

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(v == z for v in self.values)

    def __add__(self, other):
        assert self.degree == other.degree and self.twist == other.twist
        return Cochain(self.X, self.field, self.degree,
                       [a + b for a, b in zip(self.values, other.values)],
                       self.twist)

    def __sub__(self, other):
        assert self.degree == other.degree and self.twist == other.twist
        return Cochain(self.X, self.field, self.degree,
                       [a - b for a, b in zip(self.values, other.values)],
                       self.twist)

    def __neg__(self):
        return Cochain(self.X, self.field, self.degree,
                       [-a for a in self.values], self.twist)

    def scaled(self, c):
        return Cochain(self.X, self.field, self.degree,
                       [a * c for a in self.values], self.twist)

    def sparse(self):
        """Sparse export: list of [simplex, value-string] pairs."""
        z = self.field.zero()
        return [
            [list(s), self.field.fmt(v)]
            for s, v in zip(self.X.simplices_of_dim(self.degree), self.values)
            if v != z
        ]


def zero_cochain(X, field, q, twist=None):
    n = len(X.simplices_of_dim(q))
    return Cochain(X, field, q, [field.zero()] * n, twist if twist is not None else field.one())


def cochain_from_sparse(X, field, q, entries, twist=None):
    u = zero_cochain(X, field, q, twist)
    for simplex, val in entries:
        idx = X.index_of(tuple(simplex))
        u.values[idx] = field.parse(val) if isinstance(val, str) else val
    return u


def integral_cocycle_cochain(X, xi: IntegralCocycle, field: Field) -> Cochain:
    """Field-coefficient image of an integral 1-cocycle (untwisted)."""
    vals = [field.of(xi.value(i, j)) for (i, j) in X.simplices_of_dim(1)]
    return Cochain(X, field, 1, vals, field.one())


def delta_matrix(X: SimplicialComplex, xi, field: Field, a, q: int):
    """Matrix of delta_a from q-cochains to (q+1)-cochains.

    xi may be None for the untwisted coboundary (equivalently a = 1).
    """
    if a == field.zero():
        raise InputError("twist value must be nonzero")
    lower = X.simplices_of_dim(q)
    upper = X.simplices_of_dim(q + 1)
    lower_index = {s: i for i, s in enumerate(lower)}
    z = field.zero()
    M = [[z] * len(lower) for _ in range(len(upper))]
    for row, sigma in enumerate(upper):
        for i in range(q + 2):
            face = sigma[:i] + sigma[i + 1:]
            col = lower_index[face]
            if i == 0:
                coeff = field.power(a, xi.value(sigma[0], sigma[1])) if xi is not None else field.one()
            else:
                coeff = field.of((-1) ** i)
            M[row][col] = M[row][col] + coeff
    return M


def twisted_coboundary(u: Cochain, xi) -> Cochain:
    M = delta_matrix(u.X, xi, u.field, u.twist, u.degree)
    vals = linalg.mat_vec(M, u.values, u.field)
    return Cochain(u.X, u.field, u.degree + 1, vals, u.twist)


def cup(u: Cochain, v: Cochain, xi) -> Cochain:
    """Cup product; result carries twist u.twist * v.twist.

    xi may be None only when v is untwisted.
    """
    if u.X is not v.X and u.X != v.X:
        raise InputError("cup product of cochains on different complexes")
    field = u.field
    p, q = u.degree, v.degree
    b = v.twist
    X = u.X
    out = zero_cochain(X, field, p + q, u.twist * v.twist)
    if p + q > X.dim:
        return out
    one = field.one()
    for idx, sigma in enumerate(X.simplices_of_dim(p + q)):
        front = sigma[:p + 1]
        back = sigma[p:]
        uval = u.value(front)
        vval = v.value(back)
        if uval == field.zero() or vval == field.zero():
            continue
        if xi is not None and b != one:
            w = sum(xi.value(sigma[j], sigma[j + 1]) for j in range(p))
            transport = field.power(b, w)
        else:
            transport = one
        out.values[idx] = out.values[idx] + uval * transport * vval
    return out


class CohomologyRing:
    """Cohomology of X with coefficients in the local system a^xi.

    With a = 1 (or xi = None) this is ordinary cohomology over the field.
    Bases and class coordinates are deterministic.
    """

    def __init__(self, X: SimplicialComplex, xi, a, field: Field):
        if a == field.zero():
            raise InputError("twist value must be nonzero")
        self.X = X
        self.xi = xi
        self.a = a
        self.field = field
        self._deltas: dict = {}
        self._spaces: dict = {}

    def delta(self, q: int):
        if q not in self._deltas:
            self._deltas[q] = delta_matrix(self.X, self.xi, self.field, self.a, q)
        return self._deltas[q]

    def space(self, q: int) -> linalg.Subquotient:
        if q not in self._spaces:
            n = len(self.X.simplices_of_dim(q))
            if n == 0:
                self._spaces[q] = linalg.Subquotient([], [], self.field, 0)
            else:
                cycles = linalg.kernel_basis(self.delta(q), self.field, n)
                if q == 0:
                    boundaries = []
                else:
                    prev = self.delta(q - 1)
                    ncols = len(prev[0]) if prev else 0
                    boundaries = [
                        [prev[r][c] for r in range(len(prev))] for c in range(ncols)
                    ]
                    boundaries = [b for b in boundaries
                                  if any(x != self.field.zero() for x in b)]
                self._spaces[q] = linalg.Subquotient(cycles, boundaries, self.field, n)
        return self._spaces[q]

    def dim(self, q: int) -> int:
        if q < 0 or q > self.X.dim:
            return 0
        return self.space(q).dim

    def basis(self, q: int):
        """Representative cocycles forming a basis of H^q."""
        return [
            Cochain(self.X, self.field, q, rep[:], self.a)
            for rep in self.space(q).representatives
        ]

    def coords(self, u: Cochain):
        """Class coordinates of a cocycle; raises if u is not closed."""
        c = self.space(u.degree).coords(u.values)
        if c is None:
            raise InputError("cochain is not a cocycle")
        return c

    def is_zero_class(self, u: Cochain) -> bool:
        z = self.field.zero()
        return all(x == z for x in self.coords(u))

    def solve_coboundary(self, target: Cochain):
        """Cochain x with delta x = target, or None; deterministic choice."""
        q = target.degree - 1
        if q < 0:
            return None if not target.is_zero() else zero_cochain(self.X, self.field, 0, self.a)
        M = self.delta(q)
        sol = linalg.solve(M, target.values, self.field)
        if sol is None:
            return None
        return Cochain(self.X, self.field, q, sol, self.a)


def untwisted_cohomology(X: SimplicialComplex, field: Field, q: int):
    """Basis of ordinary H^q(X; k)."""
    ring = CohomologyRing(X, None, field.one(), field)
    return ring.basis(q)


def twisted_cohomology(X: SimplicialComplex, xi: IntegralCocycle, a,
                       field: Field, q: int):
    """Basis of H^q of the local system a^xi."""
    ring = CohomologyRing(X, xi, a, field)
    return ring.basis(q)


def _primes():
    yield 2
    yield 3
    n = 5
    while True:
        for d in range(2, int(n ** 0.5) + 1):
            if n % d == 0:
                break
        else:
            yield n
        n += 2


def pick_generic(supp, field: Field, count: int, seed: int):
    """Deterministic generic twist values avoiding the given support set.

    Guarantees that both a and 1/a avoid the set.  ``supp`` is a list of
    field elements (e.g. TorsionSummary.supp).
    """
    supp_set = list(supp)

    def ok(a):
        if a == field.zero():
            return False
        inv = field.one() / a
        return a not in supp_set and inv not in supp_set

    out = []
    if field.is_rationals:
        gen = _primes()
        candidates = []
        # rotate a fixed window of small primes by the seed for variety
        window = [field.of(next(gen)) for _ in range(max(32, count + len(supp_set) + 8))]
        k = seed % len(window)
        ordered = window[k:] + window[:k]
        for a in ordered:
            if ok(a) and a not in out:
                out.append(a)
                if len(out) == count:
                    return out
        raise InputError("could not find enough generic values")
    p = field.p
    if p <= len(supp_set) + count:
        raise InputError("prime field too small for generic sampling")
    residues = [field.of(v) for v in range(2, p)] + [field.one()]
    k = seed % len(residues)
    ordered = residues[k:] + residues[:k]
    for a in ordered:
        if ok(a) and a not in out:
            out.append(a)
            if len(out) == count:
                return out
    raise InputError("prime field too small for generic sampling")
