import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nvcat.fields import Field
from nvcat.laurent import (
    LaurentMatrix,
    LaurentPoly,
    divmod_laurent,
    module_presentation,
    poly_divides,
    poly_gcd,
    poly_lcm,
    smith_normal_form,
)

Q = Field.rationals()
F5 = Field.prime(5)


def P(field, coeffs):
    return LaurentPoly.from_int_coeffs(field, coeffs)


def test_poly_arith():
    t_minus_1 = P(Q, {1: 1, 0: -1})
    assert t_minus_1 + LaurentPoly.one(Q) == LaurentPoly.t(Q)
    t_plus_1 = P(Q, {1: 1, 0: 1})
    assert t_minus_1 * t_plus_1 == P(Q, {2: 1, 0: -1})
    assert LaurentPoly.t(Q, -1) * LaurentPoly.t(Q) == LaurentPoly.one(Q)


def test_poly_gcd_examples():
    t1 = P(Q, {1: 1, 0: -1})
    assert poly_gcd(t1, P(Q, {2: 1, 0: -1})) == t1
    assert poly_gcd(P(Q, {1: 1, 0: -2}), P(Q, {1: 1, 0: -3})) == LaurentPoly.one(Q)
    a = LaurentPoly.t(Q, 3) * t1
    b = LaurentPoly.t(Q, -2) * t1 * t1
    assert poly_gcd(a, b) == t1


def test_divmod():
    a = P(Q, {3: 1, 0: -1})
    b = P(Q, {1: 1, 0: -1})
    q, r = divmod_laurent(a, b)
    assert r.is_zero()
    assert q * b == a
    with pytest.raises(ZeroDivisionError):
        divmod_laurent(a, LaurentPoly.zero(Q))


def test_canonical():
    p = LaurentPoly(Q, {-2: Q.of(3), 1: Q.of(-6)})
    c = p.canonical()
    assert c.min_exp() == 0
    assert c.coeffs[c.max_exp()] == Q.one()
    assert c == p * p.unit_to_canonical()


def test_snf_examples():
    A = LaurentMatrix(Q, 2, 2, [
        [LaurentPoly.t(Q), LaurentPoly.one(Q)],
        [LaurentPoly.zero(Q), P(Q, {1: 1, 0: -1})],
    ])
    snf = smith_normal_form(A)
    assert snf.rank == 2
    assert snf.diagonal[0] == LaurentPoly.one(Q)
    assert snf.diagonal[1] == P(Q, {1: 1, 0: -1})

    Z = LaurentMatrix(Q, 2, 3)
    snfz = smith_normal_form(Z)
    assert snfz.rank == 0 and all(d.is_zero() for d in snfz.diagonal)

    B = LaurentMatrix(Q, 1, 1, [[P(Q, {1: 1, 0: -1})]])
    assert smith_normal_form(B).diagonal == [P(Q, {1: 1, 0: -1})]


def test_module_presentation_examples():
    t1 = P(Q, {1: 1, 0: -1})
    A = LaurentMatrix(Q, 1, 1, [[t1]])
    assert module_presentation(A) == (0, [t1])
    assert module_presentation(LaurentMatrix(Q, 1, 1)) == (1, [])
    prod = t1 * P(Q, {1: 1, 0: -2})
    B = LaurentMatrix(Q, 2, 2, [
        [prod, LaurentPoly.zero(Q)],
        [LaurentPoly.zero(Q), LaurentPoly.one(Q)],
    ])
    free, factors = module_presentation(B)
    assert free == 0
    assert factors == [prod.canonical()]


def random_poly(field, rng, max_span=2, allow_zero=True):
    if allow_zero and rng.random() < 0.3:
        return LaurentPoly.zero(field)
    lo = rng.randint(-2, 1)
    coeffs = {}
    for e in range(lo, lo + rng.randint(0, max_span) + 1):
        coeffs[e] = rng.randint(-3, 3)
    if not any(coeffs.values()):
        coeffs[lo] = 1
    return LaurentPoly.from_int_coeffs(field, coeffs)


def random_matrix(field, rng, max_size=3):
    n = rng.randint(1, max_size)
    m = rng.randint(1, max_size)
    return LaurentMatrix(field, n, m, [
        [random_poly(field, rng) for _ in range(m)] for _ in range(n)
    ])


def check_snf(A):
    snf = smith_normal_form(A)
    D = snf.U.mul(A).mul(snf.V)
    for i in range(A.rows):
        for j in range(A.cols):
            expect = snf.diagonal[i] if i == j and i < len(snf.diagonal) \
                else LaurentPoly.zero(A.field)
            assert D.entries[i][j] == expect
    for i in range(len(snf.diagonal) - 1):
        d, e = snf.diagonal[i], snf.diagonal[i + 1]
        if not d.is_zero():
            assert poly_divides(d, e)
        else:
            assert e.is_zero()
    # V * Vinv = identity
    I = snf.V.mul(snf.Vinv)
    for i in range(A.cols):
        for j in range(A.cols):
            expect = LaurentPoly.one(A.field) if i == j else LaurentPoly.zero(A.field)
            assert I.entries[i][j] == expect
    return snf


@settings(deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([None, 5, 7]))
def test_snf_random(seed, p):
    field = Field.rationals() if p is None else Field.prime(p)
    rng = random.Random(seed)
    A = random_matrix(field, rng)
    snf = check_snf(A)
    # idempotence on the diagonal matrix
    D = snf.U.mul(A).mul(snf.V)
    snf2 = smith_normal_form(D)
    assert [d.coeffs for d in snf2.diagonal] == [d.coeffs for d in snf.diagonal]


def _det(M: LaurentMatrix, rows, cols):
    if not rows:
        return LaurentPoly.one(M.field)
    out = LaurentPoly.zero(M.field)
    r0 = rows[0]
    for k, c in enumerate(cols):
        minor = _det(M, rows[1:], cols[:k] + cols[k + 1:])
        term = M.entries[r0][c] * minor
        out = out + (term if k % 2 == 0 else -term)
    return out


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_snf_minor_gcd(seed):
    """Product of invariant factors = gcd of maximal-rank minors, size <= 4."""
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    m = rng.randint(1, 4)
    A = LaurentMatrix(Q, n, m, [
        [random_poly(Q, rng, max_span=1) for _ in range(m)] for _ in range(n)
    ])
    snf = smith_normal_form(A)
    r = snf.rank
    if r == 0:
        return
    prod = LaurentPoly.one(Q)
    for i in range(r):
        prod = prod * snf.diagonal[i]
    g = None
    for rows in combinations(range(n), r):
        for cols in combinations(range(m), r):
            d = _det(A, list(rows), list(cols))
            if d.is_zero():
                continue
            g = d.canonical() if g is None else poly_gcd(g, d)
    assert g is not None
    assert g == prod.canonical()


def _xgcd(a, b):
    """Extended Euclid in Laurent polynomials."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = LaurentPoly.one(field), LaurentPoly.zero(field)
    t0, t1 = LaurentPoly.zero(field), LaurentPoly.one(field)
    while not r1.is_zero():
        q, r = divmod_laurent(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_gcd_bezout(seed):
    rng = random.Random(seed)
    p = random_poly(Q, rng, allow_zero=False)
    q = random_poly(Q, rng, allow_zero=False)
    g = poly_gcd(p, q)
    assert poly_divides(g, p) and poly_divides(g, q)
    raw, s, t = _xgcd(p, q)
    assert (s * p + t * q).canonical() == g
    # independent oracle: sympy gcd of the shifted integer polynomials
    x = sympy.Symbol("x")
    sp = sum(sympy.Rational(c) * x ** (e - p.min_exp())
             for e, c in p.coeffs.items())
    sq = sum(sympy.Rational(c) * x ** (e - q.min_exp())
             for e, c in q.coeffs.items())
    sg = sympy.gcd(sympy.Poly(sp, x), sympy.Poly(sq, x))
    expect = LaurentPoly(Q, {e: Q.parse(str(c)) for (e,), c
                             in sympy.Poly(sg, x).terms()})
    assert g == expect.canonical()


def test_lcm():
    t1 = P(Q, {1: 1, 0: -1})
    t2 = P(Q, {1: 1, 0: -2})
    assert poly_lcm(t1, t1) == t1
    assert poly_lcm(t1, t2) == (t1 * t2).canonical()
