"""Iterated Massey powers <v, c, c, ..., c> of a class against a 1-cocycle.

The tower is built greedily one order at a time.  All bounding cochains
on the left edge of the defining system have the degree of v, and all
middle cochains have degree one, so the order-r representative is

    sgn * sum_k  L_k cup mid_{r+1-k},      sgn = (-1)^(1+deg v),

with delta L_j and delta mid_s prescribed by the lower stages.  At the
top of each order the last-stage freedom (shifting L_r by a degree-q
cocycle, shifting mid_r by a 1-cocycle) is solved exactly, so "vanishes"
is always backed by an explicit defining system and
"nonzero_mod_last_stage" by a class outside the last-stage indeterminacy
subspace.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cochains import Cochain, CohomologyRing, cup, twisted_coboundary

VANISHES = "vanishes"
NONZERO = "nonzero_mod_last_stage"
UNDECIDED = "undecided"


@dataclass
class MasseyResult:
    order: int
    status: str
    representative: Cochain | None


class MasseyOrderError(RuntimeError):
    """Raised when an order is requested before lower orders vanish."""


class MasseyTower:
    def __init__(self, ring: CohomologyRing, v: Cochain, xi_hat: Cochain):
        if ring.a != ring.field.one():
            raise ValueError("Massey powers are computed in untwisted cohomology")
        self.ring = ring
        self.field = ring.field
        self.v = v
        self.sign = ring.field.of((-1) ** (1 + v.degree))
        self.lefts = {1: v}         # degree-q cochains on the left edge
        self.mids = {1: xi_hat}     # degree-1 middle cochains
        self.results: dict[int, MasseyResult] = {}

    def _delta(self, u: Cochain) -> Cochain:
        return twisted_coboundary(u, None)

    def _extend_mid(self, s: int) -> bool:
        """Solve delta mid_s = sum_u mid_u cup mid_{s-u}; False on obstruction."""
        if s in self.mids:
            return True
        target = None
        for u in range(1, s):
            term = cup(self.mids[u], self.mids[s - u], None)
            target = term if target is None else target + term
        assert self._delta(target).is_zero(), "middle stage is not a cocycle"
        x = self.ring.solve_coboundary(target)
        if x is None:
            return False
        self.mids[s] = x
        return True

    def _top_cochain(self, r: int) -> Cochain:
        c = None
        for k in range(1, r + 1):
            term = cup(self.lefts[k], self.mids[r + 1 - k], None).scaled(self.sign)
            c = term if c is None else c + term
        return c

    def compute_order(self, r: int) -> MasseyResult:
        if r in self.results:
            return self.results[r]
        if r < 1:
            raise ValueError("order must be >= 1")
        for lower in range(1, r):
            res = self.compute_order(lower)
            if res.status != VANISHES:
                raise MasseyOrderError(
                    f"order {r} requested but order {lower} is {res.status}"
                )
        for s in range(2, r + 1):
            if not self._extend_mid(s):
                result = MasseyResult(r, UNDECIDED, None)
                self.results[r] = result
                return result
        c = self._top_cochain(r)
        assert self._delta(c).is_zero(), "Massey representative is not a cocycle"
        result = self._resolve_top(r, c)
        self.results[r] = result
        return result

    def _resolve_top(self, r: int, c: Cochain) -> MasseyResult:
        """Kill c with coboundaries plus last-stage class freedom if possible."""
        ring = self.ring
        field = self.field
        q = self.v.degree
        n_target = len(c.values)
        delta_cols = ring.delta(q)  # maps q-cochains into degree q+1
        n_q = len(delta_cols[0]) if delta_cols else 0
        columns = [[delta_cols[i][j] for i in range(n_target)] for j in range(n_q)]
        mod_sources = []
        if r >= 2:
            # L_r and mid_r are chosen bounding cochains, free up to a cocycle;
            # at order 1 both edges are the fixed classes themselves.
            for z in ring.basis(q):
                colvec = cup(z, self.mids[1], None).scaled(self.sign)
                columns.append(colvec.values)
                mod_sources.append(("left", z))
        if r >= 2:
            for y in ring.basis(1):
                colvec = cup(self.v, y, None).scaled(self.sign)
                columns.append(colvec.values)
                mod_sources.append(("mid", y))
        A = [[columns[j][i] for j in range(len(columns))] for i in range(n_target)]
        sol = linalg.solve(A, c.values, field)
        if sol is None:
            return MasseyResult(r, NONZERO, c)
        # apply the class-level adjustments, then store the new left cochain
        x_vals = sol[:n_q]
        adjust = sol[n_q:]
        for coeff, (kind, z) in zip(adjust, mod_sources):
            if coeff == field.zero():
                continue
            if kind == "left":
                self.lefts[r] = self.lefts[r] - z.scaled(coeff)
            else:
                self.mids[r] = self.mids[r] - z.scaled(coeff)
        new_top = self._top_cochain(r)
        new_left = Cochain(c.X, field, q, x_vals, field.one())
        assert self._delta(new_left).values == new_top.values, \
            "adjusted defining system failed to bound the representative"
        self.lefts[r + 1] = new_left
        return MasseyResult(r, VANISHES, None)


def massey_power(ring: CohomologyRing, v: Cochain, xi_hat: Cochain,
                 r: int) -> MasseyResult:
    """The order-r Massey power of v against the 1-cocycle xi_hat.

    r = 1 is the plain cup product class; r >= 2 requires the lower
    orders to vanish and raises MasseyOrderError otherwise.
    """
    tower = MasseyTower(ring, v, xi_hat)
    if r == 1:
        prod = cup(v, xi_hat, None)
        if ring.is_zero_class(prod):
            # seed the tower state so callers can reuse it
            return tower.compute_order(1)
        return MasseyResult(1, NONZERO, prod)
    return tower.compute_order(r)


def survivor_check(ring: CohomologyRing, v: Cochain, xi_hat: Cochain,
                   max_order: int):
    """Verify vanishing of all Massey powers through the given order.

    Returns (is_survivor, transcript) where the transcript lists one
    status per order actually computed.
    """
    tower = MasseyTower(ring, v, xi_hat)
    transcript = []
    for r in range(1, max_order + 1):
        try:
            res = tower.compute_order(r)
        except MasseyOrderError:
            break
        transcript.append({"order": r, "status": res.status})
        if res.status != VANISHES:
            return False, transcript
    return True, transcript
