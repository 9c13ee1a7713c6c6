"""Built-in example inputs.

Each builder returns a plain document dict in the input schema
({"vertices", "maximal_simplices", "xi"}), so the JSON files shipped in
corpus/ can be regenerated verbatim.  The five examples:

  c3                   smallest triangulated circle, winding cocycle
  torus                9-vertex torus, class winding once in one direction
  mapping_torus_deg2   mapping torus of the degree-2 circle self-map
  genus2               closed orientable genus-2 surface, class supported
                       on one handle
  bouquet              9-vertex torus wedge a circle, class on the circle
"""

from __future__ import annotations


def _torus_cells(v):
    """Triangles of the 9-vertex torus for a vertex labeling v(i, j)."""
    tris = []
    for i in range(3):
        for j in range(3):
            i1, j1 = (i + 1) % 3, (j + 1) % 3
            tris.append(sorted([v(i, j), v(i1, j), v(i1, j1)]))
            tris.append(sorted([v(i, j), v(i, j1), v(i1, j1)]))
    return tris


def _torus_seam(v):
    """Edges crossing the seam between rows i=2 and i=0, directed 2 -> 0.

    The associated cocycle represents the class winding once in the
    i-direction: value +1 on each listed directed edge, 0 elsewhere.
    """
    out = []
    for j in range(3):
        out.append((v(2, j), v(0, j)))            # horizontal crossing
        out.append((v(2, j), v(0, (j + 1) % 3)))  # diagonal crossing
    return out


def _xi_entries(directed_edges, value=1):
    entries = []
    for (u, w) in directed_edges:
        if u < w:
            entries.append({"edge": [u, w], "value": value})
        else:
            entries.append({"edge": [w, u], "value": -value})
    entries.sort(key=lambda e: e["edge"])
    return entries


def c3() -> dict:
    return {
        "name": "c3",
        "description": "circle on 3 vertices; the cocycle winds once",
        "vertices": 3,
        "maximal_simplices": [[0, 1], [0, 2], [1, 2]],
        "xi": [{"edge": [0, 1], "value": 1}],
    }


def torus() -> dict:
    v = lambda i, j: 3 * i + j
    return {
        "name": "torus",
        "description": "9-vertex torus; the class winds once in the "
                       "i-direction (a circle fibration over the circle)",
        "vertices": 9,
        "maximal_simplices": _torus_cells(v),
        "xi": _xi_entries(_torus_seam(v)),
    }


def mapping_torus_deg2() -> dict:
    """Mapping torus of the degree-2 self-map of the circle.

    Three cylinders glued in a cycle: a hexagon (vertices 0-5) runs down
    to a triangle (12-14) by the degree-2 simplicial map, the triangle
    climbs back to a second hexagon (6-11) by the degree-1 collapse of
    the subdivision, and a prism joins the two hexagons.  The cocycle is
    +1 on every mixed edge of the degree-2 cylinder, oriented triangle to
    hexagon, and 0 elsewhere, so it integrates to 1 around the base (the
    orientation under which the deck generator halves the fiber class).
    """
    a = lambda k: k % 6
    c = lambda k: 6 + (k % 6)
    b = lambda j: 12 + (j % 3)
    tris = []
    # degree-2 cylinder: hexagon a down to triangle b, a_k -> b_{k mod 3}
    deg2_mixed = []
    for k in range(6):
        p, q = b(k), b(k + 1)
        tris.append(sorted([a(k), a(k + 1), q]))
        tris.append(sorted([a(k), q, p]))
        deg2_mixed.append((p, a(k)))
        deg2_mixed.append((q, a(k)))
    # prism between the two hexagons
    for k in range(6):
        tris.append(sorted([a(k), a(k + 1), c(k + 1)]))
        tris.append(sorted([a(k), c(k + 1), c(k)]))
    # degree-1 cylinder: hexagon c down to triangle b, collapsing odd
    # vertices onto their even neighbours
    for m in range(3):
        even, odd, nxt = c(2 * m), c(2 * m + 1), c(2 * m + 2)
        p, q = b(m), b(m + 1)
        tris.append(sorted([even, odd, p]))
        tris.append(sorted([odd, nxt, q]))
        tris.append(sorted([odd, q, p]))
    xi = _xi_entries(sorted(set(deg2_mixed)))
    return {
        "name": "mapping_torus_deg2",
        "description": "mapping torus of the degree-2 circle self-map "
                       "(telescope); the class is the base direction",
        "vertices": 15,
        "maximal_simplices": tris,
        "xi": xi,
    }


def genus2() -> dict:
    """Closed genus-2 surface as two 9-vertex tori glued along a triangle.

    One triangle is removed from each torus and the boundary triangles
    are identified.  The cocycle is the seam cocycle of the second torus
    (the handle), so it vanishes on the first torus and on the glued
    edges and winds once around the handle's i-direction.
    """
    vA = lambda i, j: 3 * i + j
    labels_B = {(0, 0): 0, (1, 0): 3, (1, 1): 4,
                (0, 1): 9, (0, 2): 10, (1, 2): 11,
                (2, 0): 12, (2, 1): 13, (2, 2): 14}
    vB = lambda i, j: labels_B[(i % 3, j % 3)]
    removed_A = sorted([vA(0, 0), vA(1, 0), vA(1, 1)])
    removed_B = sorted([vB(0, 0), vB(1, 0), vB(1, 1)])
    tris = []
    for t in _torus_cells(vA):
        if t != removed_A:
            tris.append(t)
    for t in _torus_cells(vB):
        if t != removed_B:
            tris.append(t)
    return {
        "name": "genus2",
        "description": "genus-2 surface (two tori glued along a "
                       "triangle); the class lives on the second handle",
        "vertices": 15,
        "maximal_simplices": tris,
        "xi": _xi_entries(_torus_seam(vB)),
    }


def bouquet() -> dict:
    v = lambda i, j: 3 * i + j
    tris = _torus_cells(v)
    cells = tris + [[0, 9], [9, 10], [0, 10]]
    return {
        "name": "bouquet",
        "description": "9-vertex torus wedge a circle at vertex 0; the "
                       "class winds once around the circle",
        "vertices": 11,
        "maximal_simplices": cells,
        "xi": [{"edge": [0, 9], "value": 1}],
    }


BUILDERS = {
    "c3": c3,
    "torus": torus,
    "mapping_torus_deg2": mapping_torus_deg2,
    "genus2": genus2,
    "bouquet": bouquet,
}


def document(name: str) -> dict:
    return BUILDERS[name]()
