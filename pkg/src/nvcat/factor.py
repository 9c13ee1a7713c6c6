"""Root finding and irreducible factorization for Laurent polynomials.

Base-field roots are found directly (rational root theorem over Q, brute
force over F_p); the irreducible factorization used for closure-level
reporting is delegated to sympy.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .fields import Field, FpElement
from .laurent import LaurentPoly


def _integer_coeff_poly(p: LaurentPoly):
    """Shift to k[t] with nonzero constant term and clear denominators.

    Returns coefficient list c0..cn (integers) for rational input.
    """
    q = p.shifted(-p.min_exp())
    deg = q.max_exp()
    coeffs = [q.coeffs.get(e, Fraction(0)) for e in range(deg + 1)]
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    return [int(c * denom) for c in coeffs]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def field_roots(p: LaurentPoly, field: Field):
    """Nonzero roots of p in the base field (deterministically sorted)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if field.is_rationals:
        coeffs = _integer_coeff_poly(p)
        # constant term is nonzero after the shift in _integer_coeff_poly
        a0, an = coeffs[0], coeffs[-1]
        roots = []
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if p.evaluate(cand, field) == field.zero() and cand not in roots:
                        roots.append(cand)
        return sorted(r for r in roots if r != 0)
    return sorted(
        (a for a in field.elements()[1:] if p.evaluate(a, field) == field.zero()),
        key=lambda x: x.value,
    )


def nth_roots_in_field(s, n: int, field: Field):
    """All a in the field with a**n == s."""
    if not field.is_rationals:
        return [a for a in field.elements()[1:] if field.power(a, n) == s]
    assert isinstance(s, Fraction)
    if s == 0:
        return [Fraction(0)]
    if s < 0 and n % 2 == 0:
        return []
    num, den = abs(s.numerator), s.denominator
    rn = _int_nth_root(num, n)
    rd = _int_nth_root(den, n)
    if rn is None or rd is None:
        return []
    r = Fraction(rn, rd)
    if n % 2 == 1:
        return [r if s > 0 else -r]
    return [r, -r]


def _int_nth_root(m: int, n: int):
    if m == 0:
        return 0
    r = round(m ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** n == m:
            return cand
    return None


def irreducible_factorization(p: LaurentPoly, field: Field):
    """Irreducible factors of the canonical associate, with multiplicities.

    Returns a list of (LaurentPoly, multiplicity), factors canonical and
    sorted by (degree, text) for deterministic reports.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    q = p.canonical()
    t = sympy.Symbol("t")
    if field.is_rationals:
        expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** e
                   for e, c in q.coeffs.items())
        _, factors = sympy.factor_list(sympy.Poly(expr, t, domain=sympy.QQ))
    else:
        expr = sum(int(c.value) * t ** e for e, c in q.coeffs.items())
        _, factors = sympy.factor_list(
            sympy.Poly(expr, t, domain=sympy.GF(field.p))
        )
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, t)
        coeffs = {}
        for (e,), c in poly.terms():
            if field.is_rationals:
                r = sympy.Rational(c)
                coeffs[e] = Fraction(int(r.p), int(r.q))
            else:
                coeffs[e] = FpElement(int(c), field.p)
        lp = LaurentPoly(field, coeffs).canonical()
        if lp.is_unit():
            continue
        out.append((lp, int(mult)))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].to_str()))
    return out
