"""Certified lower bounds for the category of a pair (X, xi).

Two sources of bounds are searched:

  * a nonzero product u cup v cup w_1 ... cup w_r with u, v twisted by
    generic values a, b and the w_j untwisted of positive degree gives
    a bound of r + 1;
  * a nonzero untwisted product w_1 cup ... cup w_r with at least two
    factors whose iterated Massey powers against xi vanish gives r - 1.

Every emitted certificate carries sparse cochain representatives and a
pairing witness cycle, and can be replayed from the raw input document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import linalg
from .cochains import (
    Cochain,
    CohomologyRing,
    cochain_from_sparse,
    cup,
    integral_cocycle_cochain,
    pick_generic,
    twisted_coboundary,
)
from .complexes import (
    InputError,
    IntegralCocycle,
    SimplicialComplex,
    divisibility,
    load_document,
    periods,
    validate_cocycle,
)
from .cover import build_twisted_complex, cover_homology, torsion_summary
from .fields import Field
from .massey import survivor_check

SCHEMA = "nvcat-report/1"


# ---------------------------------------------------------------------------
# saturation of product subspaces


@dataclass
class SpanItem:
    cochain: Cochain
    provenance: tuple  # tuple of ("u"|"w"|"s", degree, basis_index)


class ClassSpan:
    """Rank-increasing set of cohomology classes, graded by degree."""

    def __init__(self, ring: CohomologyRing):
        self.ring = ring
        self.rows: dict = {}
        self.items: list[SpanItem] = []

    def try_add(self, cochain: Cochain, provenance: tuple) -> bool:
        coords = self.ring.coords(cochain)
        z = self.ring.field.zero()
        if all(c == z for c in coords):
            return False
        d = cochain.degree
        rows = self.rows.setdefault(d, [])
        before = linalg.rank(rows, self.ring.field) if rows else 0
        candidate = rows + [coords]
        if linalg.rank(candidate, self.ring.field) > before:
            self.rows[d] = candidate
            self.items.append(SpanItem(cochain, provenance))
            return True
        return False

    def __len__(self):
        return len(self.items)


def _positive_classes(ring: CohomologyRing):
    out = []
    for d in range(1, ring.X.dim + 1):
        for i, w in enumerate(ring.basis(d)):
            out.append((d, i, w))
    return out


# ---------------------------------------------------------------------------
# pairing witnesses


def _pairing_witness(X: SimplicialComplex, xi, field: Field, product: Cochain):
    """A cycle pairing nontrivially with the product class, or None.

    The cycle lives in the chain complex twisted by the product's twist
    value, so the pairing descends to (co)homology.
    """
    q = product.degree
    c = product.twist
    nq = len(X.simplices_of_dim(q))
    if nq == 0:
        return None
    if q == 0:
        cycles = [[field.one() if i == j else field.zero() for i in range(nq)]
                  for j in range(nq)]
    else:
        bmat = _chain_boundary(X, xi, field, c, q)
        cycles = linalg.kernel_basis(bmat, field, nq)
    z = field.zero()
    for vec in cycles:
        pairing = z
        for a, b in zip(product.values, vec):
            pairing = pairing + a * b
        if pairing != z:
            return vec
    return None


def _chain_boundary(X: SimplicialComplex, xi, field: Field, c, q: int):
    """Matrix of the twisted chain boundary C_q -> C_{q-1} at twist value c."""
    lower = X.simplices_of_dim(q - 1)
    upper = X.simplices_of_dim(q)
    lower_index = {s: i for i, s in enumerate(lower)}
    z = field.zero()
    M = [[z] * len(upper) for _ in range(len(lower))]
    for col, sigma in enumerate(upper):
        for i in range(q + 1):
            face = sigma[:i] + sigma[i + 1:]
            row = lower_index[face]
            if i == 0:
                coeff = field.power(c, xi.value(sigma[0], sigma[1])) if xi is not None else field.one()
            else:
                coeff = field.of((-1) ** i)
            M[row][col] = M[row][col] + coeff
    return M


def _sparse_cycle(X, q, vec, field):
    z = field.zero()
    return [
        [list(s), field.fmt(v)]
        for s, v in zip(X.simplices_of_dim(q), vec)
        if v != z
    ]


def _cochain_json(u: Cochain):
    return {"degree": u.degree, "cochain": u.sparse()}


# ---------------------------------------------------------------------------
# classical cup length


def classical_cup_length(X: SimplicialComplex, field: Field) -> int:
    """Length of the longest nonzero product of positive-degree classes."""
    ring = CohomologyRing(X, None, field.one(), field)
    P = _positive_classes(ring)
    level = ClassSpan(ring)
    for d, i, w in P:
        level.try_add(w, (("w", d, i),))
    length = 0
    while len(level) > 0:
        length += 1
        if length > X.dim:
            break
        nxt = ClassSpan(ring)
        for item in level.items:
            for d, i, w in P:
                if item.cochain.degree + d > X.dim:
                    continue
                nxt.try_add(cup(item.cochain, w, None),
                            item.provenance + (("w", d, i),))
        level = nxt
    return length


# ---------------------------------------------------------------------------
# twisted cup-length bound


@dataclass
class PairContext:
    """Everything the twisted bound search needs, precomputed once."""

    X: SimplicialComplex
    xi: IntegralCocycle
    field: Field
    lam: int
    eta: IntegralCocycle
    summary: object


def analyze_pair(X: SimplicialComplex, xi: IntegralCocycle,
                 field: Field) -> PairContext:
    g = periods(X, xi)
    if g == 0:
        raise InputError("cocycle is exact; use the classical bound")
    lam, eta = divisibility(X, xi)
    C = build_twisted_complex(X, eta, field)
    H = cover_homology(C)
    summary = torsion_summary(H, lam, field)
    ctx = PairContext(X, xi, field, lam, eta, summary)
    ctx.cover_complex = C
    ctx.cover_homology = H
    return ctx


def cup_length_bound(X: SimplicialComplex, xi: IntegralCocycle, field: Field,
                     seed: int = 0, max_r: int | None = None,
                     a=None, b=None, ctx: PairContext | None = None):
    """Largest r with a nonzero product u cup v cup w_1 ... cup w_r.

    Returns (r_best, certificate) or (None, None) when even r = 0 fails.
    The certified bound is r_best + 1.
    """
    if xi.is_zero():
        return classical_cup_length(X, field), None
    if ctx is None:
        ctx = analyze_pair(X, xi, field)
    supp = ctx.summary.supp
    one = field.one()
    if a is None:
        a = pick_generic(supp, field, 1, seed)[0]
    if b is None:
        b = one / a
    for name, val in (("a", a), ("b", b)):
        if val == field.zero():
            raise InputError(f"twist {name} must be nonzero")
        if val in supp or (one / val) in supp:
            raise InputError(f"twist {name}={field.fmt(val)} is not generic")
    if max_r is None:
        max_r = X.dim
    ring_a = CohomologyRing(X, xi, a, field)
    ring_b = CohomologyRing(X, xi, b, field)
    ring_ab = CohomologyRing(X, xi, a * b, field)
    untwisted = CohomologyRing(X, None, one, field)
    P = _positive_classes(untwisted)

    level = ClassSpan(ring_a)
    for q in range(0, X.dim + 1):
        for i, u in enumerate(ring_a.basis(q)):
            level.try_add(u, (("u", q, i),))
    v_classes = []
    for q in range(0, X.dim + 1):
        for i, v in enumerate(ring_b.basis(q)):
            v_classes.append((q, i, v))

    best = None
    m = 0
    while True:
        for item in level.items:
            for (qv, iv, v) in v_classes:
                if item.cochain.degree + qv > X.dim:
                    continue
                prod = cup(item.cochain, v, ctx.xi)
                if not ring_ab.is_zero_class(prod):
                    best = (m, item, (qv, iv, v), prod)
        if m >= max_r:
            break
        nxt = ClassSpan(ring_a)
        for item in level.items:
            for d, i, w in P:
                if item.cochain.degree + d > X.dim:
                    continue
                nxt.try_add(cup(item.cochain, w, ctx.xi),
                            item.provenance + (("w", d, i),))
        if len(nxt) == 0:
            break
        level = nxt
        m += 1
    if best is None:
        return None, None
    r_best, item, (qv, iv, v), prod = best
    witness = _pairing_witness(X, ctx.xi, field, prod)
    assert witness is not None, "nonzero class must admit a pairing witness"
    u_prov = item.provenance[0]
    u = ring_a.basis(u_prov[1])[u_prov[2]]
    w_list = []
    for tag, d, i in item.provenance[1:]:
        w_list.append(untwisted.basis(d)[i])
    certificate = {
        "kind": "cup",
        "r": r_best,
        "a": field.fmt(a),
        "b": field.fmt(b),
        "u": _cochain_json(u),
        "v": _cochain_json(v),
        "w": [_cochain_json(w) for w in w_list],
        "witness_cycle": {
            "degree": prod.degree,
            "twist": field.fmt(prod.twist),
            "chain": _sparse_cycle(X, prod.degree, witness, field),
        },
    }
    return r_best, certificate


# ---------------------------------------------------------------------------
# Massey-survivor bound


def _survivor_pool(X: SimplicialComplex, eta: IntegralCocycle, field: Field,
                   survivor_order: int):
    """Candidate survivor classes per degree with their transcripts."""
    ring = CohomologyRing(X, None, field.one(), field)
    xi_hat = integral_cocycle_cochain(X, eta, field)
    pool = []
    for d in range(1, X.dim + 1):
        basis = ring.basis(d)
        if not basis:
            continue
        # linear condition: class of z cup xi_hat vanishes
        rows = []
        for z in basis:
            rows.append(ring.coords(cup(z, xi_hat, None)))
        cols = len(rows[0]) if rows and rows[0] else 0
        if cols == 0:
            coeff_kernel = [
                [field.one() if i == j else field.zero() for i in range(len(basis))]
                for j in range(len(basis))
            ]
        else:
            mat = [[rows[j][i] for j in range(len(basis))] for i in range(cols)]
            coeff_kernel = linalg.kernel_basis(mat, field, len(basis))
        for vec in coeff_kernel:
            cand = None
            for coeff, z in zip(vec, basis):
                if coeff == field.zero():
                    continue
                term = z.scaled(coeff)
                cand = term if cand is None else cand + term
            if cand is None:
                continue
            is_surv, transcript = survivor_check(ring, cand, xi_hat, survivor_order)
            if is_surv:
                pool.append((d, cand, transcript))
    return ring, pool


def massey_bound(X: SimplicialComplex, xi: IntegralCocycle, field: Field,
                 survivor_order: int = 4, max_r: int | None = None,
                 ctx: PairContext | None = None):
    """Bound r - 1 from a nonzero product with two verified survivors.

    Returns (bound, certificate-or-None); bound 0 means no certificate.
    """
    if ctx is None:
        ctx = analyze_pair(X, xi, field)
    eta = ctx.eta
    if max_r is None:
        max_r = X.dim
    ring, pool = _survivor_pool(X, eta, field, survivor_order)
    untwisted_P = _positive_classes(ring)
    seed_span = ClassSpan(ring)
    for i, (d1, s1, t1) in enumerate(pool):
        for j, (d2, s2, t2) in enumerate(pool):
            if j < i:
                continue
            if d1 + d2 > X.dim:
                continue
            seed_span.try_add(cup(s1, s2, None), (("s", i), ("s", j)))
    if len(seed_span) == 0:
        return 0, None
    best_item = seed_span.items[0]
    best_r = 2
    level = seed_span
    r = 2
    while r < max_r:
        nxt = ClassSpan(ring)
        for item in level.items:
            for d, i, w in untwisted_P:
                if item.cochain.degree + d > X.dim:
                    continue
                nxt.try_add(cup(item.cochain, w, None),
                            item.provenance + (("w", d, i),))
        if len(nxt) == 0:
            break
        level = nxt
        r += 1
        best_item = level.items[0]
        best_r = r
    prod = best_item.cochain
    witness = _pairing_witness(X, None, field, prod)
    assert witness is not None
    factors = []
    for entry in best_item.provenance:
        if entry[0] == "s":
            d, cand, transcript = pool[entry[1]]
            factors.append({
                **_cochain_json(cand),
                "survivor": True,
                "survivor_transcript": transcript,
            })
        else:
            _, d, i = entry
            factors.append({
                **_cochain_json(ring.basis(d)[i]),
                "survivor": False,
            })
    certificate = {
        "kind": "massey",
        "r": best_r,
        "survivor_order": survivor_order,
        "survivor_note": f"survivor status verified through order {survivor_order}",
        "lambda_reduction": ctx.lam,
        "w": factors,
        "witness_cycle": {
            "degree": prod.degree,
            "twist": "1",
            "chain": _sparse_cycle(X, prod.degree, witness, field),
        },
    }
    return best_r - 1, certificate


# ---------------------------------------------------------------------------
# certificate replay


def replay_certificate(doc, field: Field, certificate: dict) -> dict:
    """Re-verify a certificate from the raw input document alone."""
    X, xi = load_document(doc)
    kind = certificate["kind"]
    problems = []
    if kind == "cup":
        ctx = analyze_pair(X, xi, field)
        supp = ctx.summary.supp
        a = field.parse(certificate["a"])
        b = field.parse(certificate["b"])
        one = field.one()
        for name, val in (("a", a), ("b", b)):
            if val in supp or one / val in supp:
                problems.append(f"{name} is not generic")
        u = cochain_from_sparse(X, field, certificate["u"]["degree"],
                                certificate["u"]["cochain"], a)
        v = cochain_from_sparse(X, field, certificate["v"]["degree"],
                                certificate["v"]["cochain"], b)
        if not twisted_coboundary_closed(u, xi):
            problems.append("u is not a twisted cocycle")
        if not twisted_coboundary_closed(v, xi):
            problems.append("v is not a twisted cocycle")
        prod = u
        ws = []
        for wj in certificate["w"]:
            if wj["degree"] <= 0:
                problems.append("w factor of non-positive degree")
            w = cochain_from_sparse(X, field, wj["degree"], wj["cochain"])
            if not twisted_coboundary_closed(w, None):
                problems.append("w factor is not a cocycle")
            ws.append(w)
        for w in ws:
            prod = cup(prod, w, xi)
        prod = cup(prod, v, xi)
        ok_pairing = _replay_pairing(X, xi, field, prod, certificate["witness_cycle"])
        if not ok_pairing:
            problems.append("witness pairing vanished")
    elif kind == "massey":
        if periods(X, xi) == 0:
            return {"ok": False, "problems": ["cocycle is exact"]}
        _lam, eta = divisibility(X, xi)
        ring = CohomologyRing(X, None, field.one(), field)
        xi_hat = integral_cocycle_cochain(X, eta, field)
        prod = None
        survivors = 0
        for wj in certificate["w"]:
            if wj["degree"] <= 0:
                problems.append("w factor of non-positive degree")
            w = cochain_from_sparse(X, field, wj["degree"], wj["cochain"])
            if not twisted_coboundary_closed(w, None):
                problems.append("w factor is not a cocycle")
            if wj.get("survivor"):
                ok, _ = survivor_check(ring, w, xi_hat,
                                       certificate["survivor_order"])
                if ok:
                    survivors += 1
                else:
                    problems.append("claimed survivor failed re-verification")
            prod = w if prod is None else cup(prod, w, None)
        if survivors < 2:
            problems.append("fewer than two verified survivors")
        ok_pairing = _replay_pairing(X, None, field, prod, certificate["witness_cycle"])
        if not ok_pairing:
            problems.append("witness pairing vanished")
    else:
        problems.append(f"unknown certificate kind {kind!r}")
    return {"ok": not problems, "problems": problems}


def twisted_coboundary_closed(u: Cochain, xi) -> bool:
    return twisted_coboundary(u, xi).is_zero()


def _replay_pairing(X, xi, field, product: Cochain, witness: dict) -> bool:
    vec = [field.zero()] * len(X.simplices_of_dim(witness["degree"]))
    for simplex, val in witness["chain"]:
        vec[X.index_of(tuple(simplex))] = field.parse(val)
    q = witness["degree"]
    if q > 0:
        c = field.parse(witness["twist"])
        bmat = _chain_boundary(X, xi, field, c, q)
        image = linalg.mat_vec(bmat, vec, field)
        if any(x != field.zero() for x in image):
            return False
    pairing = field.zero()
    for a, b in zip(product.values, vec):
        pairing = pairing + a * b
    return pairing != field.zero()


# ---------------------------------------------------------------------------
# report assembly


INTERPRETATION = (
    "any closed 1-form in this class admitting a gradient-like vector field "
    "with no homoclinic cycles has at least {bound} zeros; a representative "
    "with at most one zero always exists, so a smaller zero count forces a "
    "homoclinic cycle"
)


def assemble_report(doc, field: Field, seed: int = 0,
                    max_r: int | None = None, survivor_order: int = 4,
                    a=None, b=None) -> dict:
    """Full bound pipeline; returns the versioned JSON-ready report."""
    X, xi = load_document(doc)
    if xi is None:
        raise InputError("input document has no cocycle")
    check = validate_cocycle(X, xi)
    if not check["ok"]:
        raise InputError(f"cocycle violates triangles {check['violations']}")
    g = periods(X, xi)
    report: dict = {
        "schema": SCHEMA,
        "field": repr(field),
        "seed": seed,
        "input": {
            "f_vector": list(X.f_vector()),
            "euler_characteristic": X.euler_characteristic(),
            "periods_generator": g,
        },
        "bounds": [],
        "relations": [],
    }
    cuplen = classical_cup_length(X, field)
    if g == 0:
        report["bounds"].append({
            "value": cuplen + 1,
            "theorem": "classical",
            "statement": "cat(X) >= cup-length + 1",
            "certificate": None,
        })
        report["relations"].append(
            "cat(X, 0) = cat(X): the zero class reduces to the classical category"
        )
        best = cuplen + 1
    else:
        lam, _eta = divisibility(X, xi)
        report["input"]["lambda"] = lam
        ctx = analyze_pair(X, xi, field)
        report["supp"] = supp_json(ctx.summary)
        r_cup, cup_cert = cup_length_bound(
            X, xi, field, seed=seed, max_r=max_r, a=a, b=b, ctx=ctx)
        if r_cup is not None:
            report["bounds"].append({
                "value": r_cup + 1,
                "theorem": "cup",
                "statement": f"nonzero generic twisted product with {r_cup} "
                             "untwisted factors",
                "certificate": cup_cert,
            })
        m_bound, m_cert = massey_bound(
            X, xi, field, survivor_order=survivor_order, max_r=max_r, ctx=ctx)
        if m_bound > 0:
            report["bounds"].append({
                "value": m_bound,
                "theorem": "massey",
                "statement": "nonzero untwisted product with two verified "
                             "survivors",
                "certificate": m_cert,
            })
        if X.is_connected():
            report["relations"].append(
                f"cat(X, xi) <= cat(X) - 1 (connected, nonzero class); "
                f"classical cup-length gives cat(X) >= {cuplen + 1}"
            )
        best = max([b["value"] for b in report["bounds"]], default=0)
    report["best_lower_bound"] = best
    report["interpretation"] = INTERPRETATION.format(bound=best)
    return report


def supp_json(summary) -> dict:
    field = summary.field
    return {
        "lambda": summary.lam,
        "factors_by_degree": {
            str(q): [f.to_str() for f in fs]
            for q, fs in sorted(summary.factors_by_degree.items())
        },
        "delta": summary.delta.to_str(),
        "torsion_dim": summary.torsion_dim,
        "supp_indivisible": [field.fmt(s) for s in summary.supp_indivisible],
        "supp": [field.fmt(s) for s in summary.supp],
        "irreducible_factors": [
            {"factor": f.to_str(), "multiplicity": m}
            for f, m in summary.factorization
        ],
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
