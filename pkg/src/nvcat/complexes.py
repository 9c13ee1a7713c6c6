"""Finite simplicial complexes and integral 1-cocycles.

A complex is stored as graded lists of strictly increasing vertex tuples,
closed under faces.  A cocycle assigns an integer to every edge (i, j)
with i < j; the value on the reversed edge is the negative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations


class InputError(ValueError):
    """Malformed input document or invalid combinatorial data."""


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    # dim -> tuple of simplices, each a strictly increasing vertex tuple
    simplices: dict

    @property
    def dim(self) -> int:
        return max(self.simplices) if self.simplices else -1

    def simplices_of_dim(self, q: int):
        return self.simplices.get(q, ())

    def f_vector(self):
        return tuple(len(self.simplices.get(q, ())) for q in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * len(s) for q, s in self.simplices.items())

    def index_of(self, simplex) -> int:
        return self._index_maps()[len(simplex) - 1][simplex]

    def _index_maps(self):
        maps = getattr(self, "_cached_index_maps", None)
        if maps is None:
            maps = {
                q: {s: i for i, s in enumerate(ss)}
                for q, ss in self.simplices.items()
            }
            object.__setattr__(self, "_cached_index_maps", maps)
        return maps

    def has_simplex(self, simplex) -> bool:
        q = len(simplex) - 1
        return simplex in self._index_maps().get(q, {})

    def edges(self):
        return self.simplices_of_dim(1)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 0:
            return True
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges():
            parent[find(i)] = find(j)
        root = find(0)
        return all(find(v) == root for v in range(n))

    def spanning_tree(self):
        """Edges of a BFS spanning tree plus parent map; requires connectivity."""
        if not self.is_connected():
            raise InputError("complex is not connected")
        adj = {v: [] for v in range(self.vertex_count)}
        for i, j in self.edges():
            adj[i].append(j)
            adj[j].append(i)
        parent = {0: None}
        order = [0]
        queue = [0]
        while queue:
            v = queue.pop(0)
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
        tree_edges = {
            (min(v, parent[v]), max(v, parent[v])) for v in parent if parent[v] is not None
        }
        return tree_edges, parent, order


@dataclass(frozen=True)
class IntegralCocycle:
    """Integer values on oriented edges (i, j) with i < j."""

    values: dict

    def value(self, i: int, j: int) -> int:
        """Value on the directed edge i -> j."""
        if i < j:
            key = (i, j)
            sign = 1
        else:
            key = (j, i)
            sign = -1
        if key not in self.values:
            raise InputError(f"no cocycle value for edge {key}")
        return sign * self.values[key]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def scaled(self, c: int) -> "IntegralCocycle":
        return IntegralCocycle({e: c * v for e, v in self.values.items()})


def _check_simplex(verts, vertex_count: int):
    t = tuple(verts)
    if len(set(t)) != len(t):
        raise InputError(f"simplex {list(verts)} has repeated vertices")
    t = tuple(sorted(t))
    for v in t:
        if not (0 <= v < vertex_count):
            raise InputError(f"vertex index {v} out of range [0, {vertex_count})")
    return t


def make_complex(vertex_count: int, maximal_simplices) -> SimplicialComplex:
    """Build a complex from maximal simplices, completing the face closure."""
    if vertex_count < 0:
        raise InputError("vertex count must be non-negative")
    graded: dict = {}
    seen = set()
    for s in maximal_simplices:
        t = _check_simplex(s, vertex_count)
        if t in seen:
            raise InputError(f"duplicate simplex {list(t)}")
        seen.add(t)
    closure = set()
    for t in seen:
        for k in range(1, len(t) + 1):
            for face in combinations(t, k):
                closure.add(face)
    for v in range(vertex_count):
        closure.add((v,))
    for face in closure:
        graded.setdefault(len(face) - 1, []).append(face)
    for q in graded:
        graded[q] = tuple(sorted(graded[q]))
    return SimplicialComplex(vertex_count, graded)


def load_document(doc) -> tuple:
    """Parse an input document into (complex, cocycle-or-None).

    ``doc`` may be a dict, a JSON string, or a path to a JSON file.
    """
    if isinstance(doc, str):
        text = doc
        if not text.lstrip().startswith("{"):
            with open(doc) as fh:
                text = fh.read()
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON document: {e}") from e
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    if "vertices" not in doc or "maximal_simplices" not in doc:
        raise InputError("document needs 'vertices' and 'maximal_simplices'")
    X = make_complex(int(doc["vertices"]), doc["maximal_simplices"])
    xi = None
    if "xi" in doc:
        values = {}
        for item in doc["xi"]:
            i, j = item["edge"]
            if not (isinstance(i, int) and isinstance(j, int) and i < j):
                raise InputError(f"edge {item['edge']} must satisfy i < j")
            if (i, j) in values:
                raise InputError(f"duplicate edge {item['edge']} in xi")
            values[(i, j)] = int(item["value"])
        extra = set(values) - set(X.edges())
        if extra:
            raise InputError(f"xi lists edges not in the complex: {sorted(extra)}")
        for e in X.edges():
            values.setdefault(e, 0)  # unlisted edges carry value 0
        xi = IntegralCocycle(values)
    return X, xi


def load_complex(doc) -> SimplicialComplex:
    return load_document(doc)[0]


def validate_cocycle(X: SimplicialComplex, xi: IntegralCocycle) -> dict:
    """Check the triangle condition on every 2-simplex.

    Returns {"ok": bool, "violations": [triangle, ...]}.
    """
    for e in X.edges():
        if e not in xi.values:
            raise InputError(f"missing cocycle value for edge {e}")
    violations = []
    for (i, j, k) in X.simplices_of_dim(2):
        if xi.value(i, j) + xi.value(j, k) != xi.value(i, k):
            violations.append([i, j, k])
    return {"ok": not violations, "violations": violations}


def integrate_path(X: SimplicialComplex, xi: IntegralCocycle, path) -> int:
    """Signed sum of cocycle values along a vertex path."""
    total = 0
    for u, v in zip(path, path[1:]):
        e = (min(u, v), max(u, v))
        if not X.has_simplex(e):
            raise InputError(f"vertices {u}, {v} do not span an edge")
        total += xi.value(u, v)
    return total


def _tree_potential(X: SimplicialComplex, xi: IntegralCocycle):
    """Integer potential obtained by integrating xi along a spanning tree."""
    tree_edges, parent, order = X.spanning_tree()
    f = {0: 0}
    for v in order[1:]:
        f[v] = f[parent[v]] + xi.value(parent[v], v)
    return f, tree_edges, parent


def _loop_through_tree(parent, i, j):
    """Closed loop 0-based: tree path to i, edge (i, j), tree path back."""

    def path_to_root(v):
        out = [v]
        while parent[v] is not None:
            v = parent[v]
            out.append(v)
        return out

    up = path_to_root(i)      # i .. root
    down = path_to_root(j)    # j .. root
    return list(reversed(up)) + down


def periods(X: SimplicialComplex, xi: IntegralCocycle) -> int:
    """Non-negative generator of the subgroup of Z spanned by loop integrals."""
    f, tree_edges, _parent = _tree_potential(X, xi)
    g = 0
    for (i, j) in X.edges():
        if (i, j) in tree_edges:
            continue
        period = xi.value(i, j) - (f[j] - f[i])
        g = _gcd(g, period)
    return abs(g)


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def exactness_witness(X: SimplicialComplex, xi: IntegralCocycle):
    """Vertex potential f with f(j) - f(i) = xi(i, j), or a witness loop.

    Returns ("exact", potential_list) or ("inexact", loop) where the loop
    has nonzero integral.
    """
    f, tree_edges, parent = _tree_potential(X, xi)
    for (i, j) in X.edges():
        if (i, j) in tree_edges:
            continue
        if xi.value(i, j) != f[j] - f[i]:
            loop = _loop_through_tree(parent, i, j)
            return ("inexact", loop)
    # normalize so the least vertex sits at 0
    shift = f[0]
    return ("exact", [f[v] - shift for v in range(X.vertex_count)])


def divisibility(X: SimplicialComplex, xi: IntegralCocycle):
    """Write the class of xi as lambda * eta with eta indivisible.

    Returns (lam, eta).  Requires a nonzero period subgroup.
    """
    g = periods(X, xi)
    if g == 0:
        raise InputError("xi is exact; divisibility is undefined")
    f, tree_edges, _parent = _tree_potential(X, xi)
    # xi minus the exact correction df vanishes on tree edges and equals the
    # loop period on every other edge, so all its values are divisible by g
    values = {}
    for (i, j) in X.edges():
        reduced = xi.value(i, j) - (f[j] - f[i])
        assert reduced % g == 0
        values[(i, j)] = reduced // g
    return g, IntegralCocycle(values)
