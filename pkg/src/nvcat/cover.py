"""The infinite cyclic cover as a chain complex of free Lambda-modules.

A 1-cocycle with indivisible class determines a lift of every simplex to
the cover; the deck transformation acts as multiplication by t.  With the
twist placed on the 0th face, the boundary of a q-simplex [v0..vq] is

    t^(xi(v0, v1)) * d0 + sum_{i >= 1} (-1)^i * di,

and the composite boundary vanishes exactly because of the cocycle
condition on triangles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import InputError, IntegralCocycle, SimplicialComplex, validate_cocycle
from .factor import field_roots, irreducible_factorization, nth_roots_in_field
from .fields import Field
from .laurent import (
    LaurentMatrix,
    LaurentPoly,
    divmod_laurent,
    module_presentation,
    poly_gcd,
    poly_lcm,
    smith_normal_form,
)


@dataclass
class TwistedChainComplex:
    X: SimplicialComplex
    xi: IntegralCocycle
    field: Field
    # q -> boundary matrix C_q -> C_{q-1}; for q = 0 a 0 x n0 matrix
    boundaries: dict

    def boundary(self, q: int) -> LaurentMatrix:
        return self.boundaries[q]

    def chain_rank(self, q: int) -> int:
        return len(self.X.simplices_of_dim(q))


def build_twisted_complex(X: SimplicialComplex, xi: IntegralCocycle,
                          field: Field) -> TwistedChainComplex:
    report = validate_cocycle(X, xi)
    if not report["ok"]:
        raise InputError(f"cocycle violates triangles {report['violations']}")
    boundaries = {0: LaurentMatrix(field, 0, len(X.simplices_of_dim(0)))}
    for q in range(1, X.dim + 1):
        lower = X.simplices_of_dim(q - 1)
        upper = X.simplices_of_dim(q)
        lower_index = {s: i for i, s in enumerate(lower)}
        mat = LaurentMatrix(field, len(lower), len(upper))
        for col, sigma in enumerate(upper):
            for i in range(q + 1):
                face = sigma[:i] + sigma[i + 1:]
                row = lower_index[face]
                if i == 0:
                    coeff = LaurentPoly.t(field, xi.value(sigma[0], sigma[1]))
                else:
                    coeff = LaurentPoly.const(field, field.of((-1) ** i))
                mat.entries[row][col] = mat.entries[row][col] + coeff
        boundaries[q] = mat
    return TwistedChainComplex(X, xi, field, boundaries)


@dataclass
class DegreeHomology:
    q: int
    free_rank: int
    invariant_factors: list
    # internals kept for movability tests and class coordinates
    boundary_snf: object        # SNF of the boundary leaving degree q
    kernel_rank: int            # dim of the cycle module
    relation_matrix: LaurentMatrix   # columns = relations in kernel coords
    relation_snf: object


@dataclass
class CoverHomology:
    field: Field
    degrees: dict  # q -> DegreeHomology

    def free_rank(self, q: int) -> int:
        d = self.degrees.get(q)
        return d.free_rank if d else 0

    def invariant_factors(self, q: int):
        d = self.degrees.get(q)
        return d.invariant_factors if d else []

    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else -1


def cover_homology(C: TwistedChainComplex) -> CoverHomology:
    field = C.field
    degrees = {}
    top = C.X.dim
    for q in range(top + 1):
        nq = C.chain_rank(q)
        if nq == 0:
            continue
        snf_q = smith_normal_form(C.boundary(q))
        r = snf_q.rank
        k = nq - r
        if q + 1 <= top:
            B = C.boundary(q + 1)
        else:
            B = LaurentMatrix(field, nq, 0)
        coords = snf_q.Vinv.mul(B)  # nq x n_{q+1}
        for i in range(r):
            for j in range(B.cols):
                assert coords.entries[i][j].is_zero(), "image not inside the cycles"
        rel = LaurentMatrix(field, k, B.cols,
                            [coords.entries[r + i] for i in range(k)] if k else [])
        # presentation: generators = kernel basis (k of them), relations = columns
        transposed = LaurentMatrix(
            field, rel.cols, rel.rows,
            [[rel.entries[i][j] for i in range(rel.rows)] for j in range(rel.cols)],
        )
        free_rank, factors = module_presentation(transposed)
        degrees[q] = DegreeHomology(
            q=q,
            free_rank=free_rank,
            invariant_factors=factors,
            boundary_snf=snf_q,
            kernel_rank=k,
            relation_matrix=rel,
            relation_snf=smith_normal_form(rel),
        )
    return CoverHomology(field, degrees)


@dataclass
class TorsionSummary:
    field: Field
    lam: int
    factors_by_degree: dict      # q -> list of LaurentPoly
    delta: LaurentPoly           # product of all invariant factors
    torsion_dim: int
    supp_indivisible: list       # Supp(X, eta) inside the base field
    supp: list                   # Supp(X, xi) after the divisibility rule
    factorization: list          # irreducible factors of delta with multiplicity


def _sort_key(field):
    if field.is_rationals:
        return lambda x: x
    return lambda x: x.value


def torsion_summary(H: CoverHomology, lam: int, field: Field) -> TorsionSummary:
    factors_by_degree = {q: list(d.invariant_factors) for q, d in H.degrees.items()}
    delta = LaurentPoly.one(field)
    torsion_dim = 0
    all_roots = []
    for q in sorted(factors_by_degree):
        for f in factors_by_degree[q]:
            delta = delta * f
            torsion_dim += f.degree()
            for r in field_roots(f, field):
                if r not in all_roots:
                    all_roots.append(r)
    one = field.one()
    supp_eta = sorted({one / r for r in all_roots if r != field.zero()},
                      key=_sort_key(field))
    if lam == 1:
        supp = list(supp_eta)
    else:
        supp = []
        for s in supp_eta:
            for a in nth_roots_in_field(s, lam, field):
                if a != field.zero() and a not in supp:
                    supp.append(a)
        supp = sorted(supp, key=_sort_key(field))
    factorization = (
        irreducible_factorization(delta, field) if not delta.is_unit() else []
    )
    return TorsionSummary(
        field=field,
        lam=lam,
        factors_by_degree=factors_by_degree,
        delta=delta.canonical(),
        torsion_dim=torsion_dim,
        supp_indivisible=supp_eta,
        supp=supp,
        factorization=factorization,
    )


def _kernel_coordinates(z, d: DegreeHomology, C: TwistedChainComplex, q: int):
    """Coordinates of the cycle z in the SNF kernel basis of degree q."""
    snf = d.boundary_snf
    full = snf.Vinv.mul_vector(z)
    r = snf.rank
    for i in range(r):
        if not full[i].is_zero():
            raise InputError("z is not a cycle")
    return full[r:]


def is_movable(z, C: TwistedChainComplex, H: CoverHomology, q: int):
    """Torsion test for the class of the cycle z in degree q.

    Returns (movable, annihilator) with the minimal monic annihilator
    when the class is torsion, None otherwise.
    """
    field = C.field
    bq = C.boundary(q)
    if not all(v.is_zero() for v in bq.mul_vector(z)):
        raise InputError("z is not a cycle")
    d = H.degrees[q]
    c = _kernel_coordinates(z, d, C, q)
    snf_m = d.relation_snf  # SNF of the k x n_{q+1} relation matrix
    y = snf_m.U.mul_vector(c)
    k = d.kernel_rank
    rank = snf_m.rank
    ann = LaurentPoly.one(field)
    for i in range(k):
        yi = y[i]
        if i < rank:
            di = snf_m.diagonal[i]
            if yi.is_zero() or di.is_unit():
                continue
            g = poly_gcd(di, yi)
            pi, rem = divmod_laurent(di, g)
            assert rem.is_zero()
            ann = poly_lcm(ann, pi.canonical())
        else:
            if not yi.is_zero():
                return False, None
    return True, ann.canonical()


def movable_bruteforce(z, C: TwistedChainComplex, q: int,
                       max_poly_degree: int, window: int, field: Field):
    """Independent torsion oracle: search for p != 0 with deg <= max_poly_degree
    and p(t) * z in the image of the next boundary, by plain linear algebra
    over the coefficient field on a bounded exponent window."""
    from . import linalg

    nq = C.chain_rank(q)
    if q + 1 <= C.X.dim:
        B = C.boundary(q + 1)
    else:
        B = LaurentMatrix(field, nq, 0)
    z_min = min((v.min_exp() for v in z if not v.is_zero()), default=0)
    z_max = max((v.max_exp() for v in z if not v.is_zero()), default=0)
    b_span = 0
    for row in B.entries:
        for e in row:
            if not e.is_zero():
                b_span = max(b_span, abs(e.min_exp()), abs(e.max_exp()))
    lo = z_min - window - b_span
    hi = z_max + max_poly_degree + window + b_span
    exps = list(range(lo, hi + 1))
    pos = {e: i for i, e in enumerate(exps)}
    n_rows = nq * len(exps)
    p_unknowns = max_poly_degree + 1
    w_unknowns = B.cols * len(exps)
    cols = p_unknowns + w_unknowns
    zf = field.zero()
    A = [[zf] * cols for _ in range(n_rows)]

    def add(simplex_i, exp, col, val):
        if exp in pos:
            A[simplex_i * len(exps) + pos[exp]][col] = (
                A[simplex_i * len(exps) + pos[exp]][col] + val
            )

    # columns for p-coefficients: p_d contributes t^d * z
    for dcol in range(p_unknowns):
        for i, v in enumerate(z):
            for e, cval in v.coeffs.items():
                add(i, e + dcol, dcol, cval)
    # columns for boundary chains: -B * (t^e * basis_j)
    for j in range(B.cols):
        for e in exps:
            col = p_unknowns + j * len(exps) + pos[e]
            for i in range(nq):
                entry = B.entries[i][j]
                for be, bc in entry.coeffs.items():
                    add(i, be + e, col, -bc)
    ker = linalg.kernel_basis(A, field, cols)
    for vec in ker:
        if any(vec[i] != zf for i in range(p_unknowns)):
            return True
    return False
