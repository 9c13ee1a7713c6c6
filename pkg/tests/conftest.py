"""Shared test helpers: seeded random complexes, cocycles and cochains."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from nvcat import linalg
from nvcat.complexes import IntegralCocycle, make_complex
from nvcat.fields import Field


def random_complex(rng: random.Random, max_vertices: int = 6, max_dim: int = 3):
    """Small random complex with at least one edge."""
    n = rng.randint(3, max_vertices)
    cells = []
    pool = []
    for size in range(2, min(max_dim, n - 1) + 2):
        pool.extend(combinations(range(n), size))
    rng.shuffle(pool)
    take = rng.randint(1, max(1, len(pool) // 3))
    cells = [list(c) for c in pool[:take]]
    if not any(len(c) >= 2 for c in cells):
        cells.append([0, 1])
    return make_complex(n, cells)


def integral_cocycles_basis(X):
    """Integer basis of the space of 1-cocycles (triangle condition kernel)."""
    F = Field.rationals()
    edges = list(X.edges())
    index = {e: i for i, e in enumerate(edges)}
    rows = []
    for (i, j, k) in X.simplices_of_dim(2):
        row = [Fraction(0)] * len(edges)
        row[index[(i, j)]] += 1
        row[index[(j, k)]] += 1
        row[index[(i, k)]] -= 1
        rows.append(row)
    if not rows:
        rows = []
    kernel = linalg.kernel_basis(rows, F, len(edges))
    out = []
    for vec in kernel:
        denom = 1
        for v in vec:
            denom = denom * v.denominator // _gcd(denom, v.denominator)
        out.append([int(v * denom) for v in vec])
    return edges, out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def random_cocycle(X, rng: random.Random) -> IntegralCocycle:
    """Random integral 1-cocycle (valid on every triangle by construction)."""
    edges, basis = integral_cocycles_basis(X)
    values = {e: 0 for e in edges}
    for vec in basis:
        c = rng.randint(-2, 2)
        if c == 0:
            continue
        for e, v in zip(edges, vec):
            values[e] += c * v
    return IntegralCocycle(values)


def random_field_element(field: Field, rng: random.Random, nonzero=False):
    if field.is_rationals:
        while True:
            num = rng.randint(-4, 4)
            den = rng.randint(1, 3)
            x = Fraction(num, den)
            if not nonzero or x != 0:
                return x
    while True:
        x = field.of(rng.randint(0, field.p - 1))
        if not nonzero or x != field.zero():
            return x


def random_cochain(X, field: Field, q: int, rng: random.Random, twist=None):
    from nvcat.cochains import Cochain

    n = len(X.simplices_of_dim(q))
    vals = [random_field_element(field, rng) for _ in range(n)]
    return Cochain(X, field, q, vals, twist if twist is not None else field.one())


CSASZAR_TORUS = [sorted([i % 7, (i + 1) % 7, (i + 3) % 7]) for i in range(7)] + [
    sorted([i % 7, (i + 2) % 7, (i + 3) % 7]) for i in range(7)
]


@pytest.fixture
def rationals():
    return Field.rationals()
