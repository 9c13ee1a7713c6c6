import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CSASZAR_TORUS, random_cocycle, random_complex
from nvcat.complexes import (
    InputError,
    IntegralCocycle,
    SimplicialComplex,
    divisibility,
    exactness_witness,
    integrate_path,
    load_document,
    make_complex,
    periods,
    validate_cocycle,
)

C3_DOC = {
    "vertices": 3,
    "maximal_simplices": [[0, 1], [1, 2], [0, 2]],
    "xi": [{"edge": [0, 1], "value": 1}],
}


def c3_with(values):
    X, _ = load_document(C3_DOC)
    return X, IntegralCocycle(values)


def test_load_circle():
    X, xi = load_document(C3_DOC)
    assert X.f_vector() == (3, 3)
    assert xi.value(0, 1) == 1
    assert xi.value(1, 0) == -1
    assert xi.value(1, 2) == 0  # unlisted edges default to 0


def test_face_closure():
    X = make_complex(3, [[0, 1, 2]])
    assert X.f_vector() == (3, 3, 1)


def test_seven_vertex_torus():
    X = make_complex(7, CSASZAR_TORUS)
    assert X.f_vector() == (7, 21, 14)
    assert X.euler_characteristic() == 0
    # every edge of a closed surface bounds exactly two triangles
    for e in X.edges():
        count = sum(1 for t in X.simplices_of_dim(2)
                    if e[0] in t and e[1] in t)
        assert count == 2


def test_load_errors():
    with pytest.raises(InputError):
        load_document({"vertices": 2, "maximal_simplices": [[0, 5]]})
    with pytest.raises(InputError):
        load_document({"vertices": 3, "maximal_simplices": [[0, 0, 1]]})
    with pytest.raises(InputError):
        load_document({"vertices": 3, "maximal_simplices": [[0, 1], [0, 1]]})
    with pytest.raises(InputError):
        load_document("{not valid json")
    with pytest.raises(InputError):
        load_document({"vertices": 3, "maximal_simplices": [[0, 1]],
                       "xi": [{"edge": [1, 0], "value": 1}]})


def test_validate_cocycle_cases():
    X, xi = c3_with({(0, 1): 1, (1, 2): 0, (0, 2): 0})
    assert validate_cocycle(X, xi)["ok"]  # no triangles to check

    T = make_complex(3, [[0, 1, 2]])
    ok = IntegralCocycle({(0, 1): 1, (1, 2): 1, (0, 2): 2})
    assert validate_cocycle(T, ok)["ok"]
    bad = IntegralCocycle({(0, 1): 1, (1, 2): 1, (0, 2): 0})
    rep = validate_cocycle(T, bad)
    assert rep == {"ok": False, "violations": [[0, 1, 2]]}


def test_integrate_path():
    X, xi = c3_with({(0, 1): 1, (1, 2): 0, (0, 2): 0})
    assert integrate_path(X, xi, [0]) == 0
    assert integrate_path(X, xi, [0, 1, 2, 0]) == 1
    assert integrate_path(X, xi, [0, 2, 1, 0]) == -1
    with pytest.raises(InputError):
        integrate_path(X, xi, [0, 0])


def test_periods():
    X, xi = c3_with({(0, 1): 1, (1, 2): 0, (0, 2): 0})
    assert periods(X, xi) == 1
    assert periods(X, xi.scaled(3)) == 3
    exact = IntegralCocycle({(0, 1): 1, (1, 2): 1, (0, 2): 2})
    assert periods(X, exact) == 0


def test_exactness_witness():
    X, _ = load_document(C3_DOC)
    zero = IntegralCocycle({e: 0 for e in X.edges()})
    assert exactness_witness(X, zero) == ("exact", [0, 0, 0])
    exact = IntegralCocycle({(0, 1): 1, (1, 2): 1, (0, 2): 2})
    assert exactness_witness(X, exact) == ("exact", [0, 1, 2])
    kind, loop = exactness_witness(X, IntegralCocycle({(0, 1): 1, (1, 2): 0,
                                                       (0, 2): 0}))
    assert kind == "inexact"
    assert integrate_path(X, IntegralCocycle({(0, 1): 1, (1, 2): 0,
                                              (0, 2): 0}), loop) != 0


def test_divisibility():
    X, xi = c3_with({(0, 1): 1, (1, 2): 0, (0, 2): 0})
    lam, eta = divisibility(X, xi)
    assert lam == 1 and periods(X, eta) == 1

    lam, eta = divisibility(X, xi.scaled(3))
    assert lam == 3 and periods(X, eta) == 1

    mixed = IntegralCocycle({(0, 1): 4, (1, 2): 0, (0, 2): 2})  # period 2
    lam, eta = divisibility(X, mixed)
    assert lam == 2 and periods(X, eta) == 1

    exact = IntegralCocycle({(0, 1): 1, (1, 2): 1, (0, 2): 2})
    with pytest.raises(InputError):
        divisibility(X, exact)


def test_disconnected_rejected():
    X = make_complex(4, [[0, 1], [2, 3]])
    assert not X.is_connected()
    with pytest.raises(InputError):
        X.spanning_tree()


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_face_closure_invariants(seed):
    rng = random.Random(seed)
    X = random_complex(rng)
    for q, cells in X.simplices.items():
        assert len(set(cells)) == len(cells)
        for s in cells:
            assert list(s) == sorted(s) and len(s) == q + 1
            if q > 0:
                for i in range(q + 1):
                    assert X.has_simplex(s[:i] + s[i + 1:])


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_integrate_additivity_and_reversal(seed):
    rng = random.Random(seed)
    X = random_complex(rng)
    xi = random_cocycle(X, rng)
    adj = {v: [] for v in range(X.vertex_count)}
    for i, j in X.edges():
        adj[i].append(j)
        adj[j].append(i)
    start = rng.choice([v for v in range(X.vertex_count) if adj[v]])
    path = [start]
    for _ in range(rng.randint(1, 6)):
        path.append(rng.choice(adj[path[-1]]))
    cut = rng.randint(1, len(path) - 1)
    a = integrate_path(X, xi, path[:cut + 1])
    b = integrate_path(X, xi, path[cut:])
    assert integrate_path(X, xi, path) == a + b
    assert integrate_path(X, xi, list(reversed(path))) == -(a + b)


@settings(deadline=None)
@given(st.integers(0, 10**6))
def test_exactness_iff_trivial_periods(seed):
    rng = random.Random(seed)
    X = random_complex(rng)
    if not X.is_connected():
        return
    xi = random_cocycle(X, rng)
    g = periods(X, xi)
    kind, data = exactness_witness(X, xi)
    assert (kind == "exact") == (g == 0)
    if kind == "exact":
        for (i, j) in X.edges():
            assert data[j] - data[i] == xi.value(i, j)
