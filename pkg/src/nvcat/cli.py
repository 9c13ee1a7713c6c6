"""Command line front end.

Six subcommands share one input format (see corpus/ for examples):

  validate   check the document and the triangle condition, print periods
  cover      free ranks and invariant factors of the cover homology
  supp       torsion support and factorization data
  cohom      twisted cohomology dimensions for sampled or given twists
  bound      certified category lower bounds (versioned report schema)
  report     bound report plus certificate replay verification

Exit codes: 0 ok, 2 validation failure, 3 internal limit exceeded.
--json emits compact byte-deterministic JSON; the default text mode
prints the same content pretty-printed.
"""

from __future__ import annotations

import json
import sys

import click

from . import bounds as bounds_mod
from .cochains import CohomologyRing, pick_generic
from .complexes import (
    InputError,
    divisibility,
    exactness_witness,
    load_document,
    periods,
    validate_cocycle,
)
from .cover import build_twisted_complex, cover_homology, torsion_summary
from .fields import Field, FieldError
from .massey import MasseyOrderError
from .util import parallel_map

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_LIMIT = 3


def _emit(obj, as_json: bool):
    if as_json:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")))
        sys.stdout.write("\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2))
        sys.stdout.write("\n")


def _fail(message: str, code: int):
    sys.stderr.write(f"error: {message}\n")
    sys.exit(code)


def common_options(fn):
    fn = click.option("--field", "field_spec", default="q", show_default=True,
                      help="coefficient field: q or fp:P")(fn)
    fn = click.option("--seed", default=0, show_default=True, type=int)(fn)
    fn = click.option("--json", "as_json", is_flag=True,
                      help="compact deterministic JSON output")(fn)
    return fn


def _load(path, need_xi=True):
    try:
        X, xi = load_document(path)
    except OSError as e:
        _fail(str(e), EXIT_VALIDATION)
    except InputError as e:
        _fail(str(e), EXIT_VALIDATION)
    if need_xi and xi is None:
        _fail("input document has no cocycle", EXIT_VALIDATION)
    return X, xi


def _field(spec):
    try:
        return Field.from_spec(spec)
    except (FieldError, ValueError) as e:
        _fail(str(e), EXIT_VALIDATION)


def _guard(fn):
    try:
        return fn()
    except MasseyOrderError as e:
        _fail(str(e), EXIT_LIMIT)
    except RecursionError:
        _fail("internal recursion limit exceeded", EXIT_LIMIT)
    except InputError as e:
        _fail(str(e), EXIT_VALIDATION)


@click.group()
def main():
    """Cover homology, twisted cohomology and category bounds."""


@main.command()
@click.argument("path")
@common_options
def validate(path, field_spec, seed, as_json):
    """Check the input document and print periods and divisibility."""
    X, xi = _load(path)
    report = validate_cocycle(X, xi)
    out = {
        "ok": report["ok"],
        "violations": report["violations"],
        "f_vector": list(X.f_vector()),
        "connected": X.is_connected(),
    }
    if report["ok"]:
        g = periods(X, xi)
        out["periods_generator"] = g
        if g == 0:
            kind, data = exactness_witness(X, xi)
            out["exact"] = True
            out["potential"] = data
        else:
            lam, _eta = divisibility(X, xi)
            out["exact"] = False
            out["lambda"] = lam
    _emit(out, as_json)
    if not report["ok"]:
        sys.exit(EXIT_VALIDATION)


@main.command()
@click.argument("path")
@common_options
def cover(path, field_spec, seed, as_json):
    """Free ranks and invariant factors of the cover homology."""
    X, xi = _load(path)
    field = _field(field_spec)

    def run():
        if periods(X, xi) == 0:
            raise InputError("cocycle is exact; the cover is trivial, "
                             "use untwisted tooling")
        lam, eta = divisibility(X, xi)
        C = build_twisted_complex(X, eta, field)
        H = cover_homology(C)
        degrees = parallel_map(
            lambda q: {
                "degree": q,
                "free_rank": H.free_rank(q),
                "invariant_factors": [f.to_str() for f in H.invariant_factors(q)],
            },
            sorted(H.degrees),
        )
        return {"field": repr(field), "lambda": lam, "degrees": degrees}

    _emit(_guard(run), as_json)


@main.command()
@click.argument("path")
@common_options
def supp(path, field_spec, seed, as_json):
    """Torsion support of the cover homology."""
    X, xi = _load(path)
    field = _field(field_spec)

    def run():
        if periods(X, xi) == 0:
            raise InputError("cocycle is exact; support is undefined, "
                             "use untwisted tooling")
        lam, eta = divisibility(X, xi)
        C = build_twisted_complex(X, eta, field)
        H = cover_homology(C)
        summary = torsion_summary(H, lam, field)
        return {"field": repr(field), **bounds_mod.supp_json(summary)}

    _emit(_guard(run), as_json)


@main.command()
@click.argument("path")
@common_options
@click.option("--a", "a_value", default=None, help="twist value; sampled when omitted")
@click.option("--samples", default=5, show_default=True, type=int,
              help="number of generic twists when --a is omitted")
def cohom(path, field_spec, seed, as_json, a_value, samples):
    """Twisted cohomology dimensions for one or several twist values."""
    X, xi = _load(path)
    field = _field(field_spec)

    def run():
        if a_value is not None:
            values = [field.parse(a_value)]
        else:
            if periods(X, xi) == 0:
                raise InputError("cocycle is exact; pass an explicit --a")
            lam, eta = divisibility(X, xi)
            C = build_twisted_complex(X, eta, field)
            summary = torsion_summary(cover_homology(C), lam, field)
            values = pick_generic(summary.supp, field, samples, seed)

        def dims(a):
            ring = CohomologyRing(X, xi, a, field)
            return {
                "a": field.fmt(a),
                "dims": [ring.dim(q) for q in range(X.dim + 1)],
            }

        return {"field": repr(field), "twists": parallel_map(dims, values)}

    _emit(_guard(run), as_json)


def _bound_report(path, field_spec, seed, max_r, survivor_order, a_value, b_value):
    X, xi = _load(path)
    field = _field(field_spec)
    a = field.parse(a_value) if a_value is not None else None
    b = field.parse(b_value) if b_value is not None else None
    # re-listing every simplex keeps lower-dimensional maximal cells
    # through the closure-based round trip
    doc = {
        "vertices": X.vertex_count,
        "maximal_simplices": [
            list(s) for q in range(X.dim, 0, -1) for s in X.simplices_of_dim(q)
        ],
        "xi": [{"edge": list(e), "value": v}
               for e, v in sorted(xi.values.items())],
    }
    return doc, _guard(lambda: bounds_mod.assemble_report(
        doc, field, seed=seed, max_r=max_r,
        survivor_order=survivor_order, a=a, b=b))


@main.command()
@click.argument("path")
@common_options
@click.option("--max-r", default=None, type=int)
@click.option("--survivor-order", default=4, show_default=True, type=int)
@click.option("--a", "a_value", default=None)
@click.option("--b", "b_value", default=None)
def bound(path, field_spec, seed, as_json, max_r, survivor_order,
          a_value, b_value):
    """Certified lower bounds for the category of (X, xi)."""
    _doc, report = _bound_report(path, field_spec, seed, max_r,
                                 survivor_order, a_value, b_value)
    _emit(report, as_json)


@main.command()
@click.argument("path")
@common_options
@click.option("--max-r", default=None, type=int)
@click.option("--survivor-order", default=4, show_default=True, type=int)
@click.option("--a", "a_value", default=None)
@click.option("--b", "b_value", default=None)
def report(path, field_spec, seed, as_json, max_r, survivor_order,
           a_value, b_value):
    """Bound report plus certificate replay verification."""
    doc, rep = _bound_report(path, field_spec, seed, max_r,
                             survivor_order, a_value, b_value)
    field = _field(field_spec)
    replays = []
    for entry in rep["bounds"]:
        if entry["certificate"] is None:
            continue
        verdict = _guard(lambda: bounds_mod.replay_certificate(
            doc, field, entry["certificate"]))
        replays.append({"theorem": entry["theorem"], **verdict})
    rep["replay"] = replays
    _emit(rep, as_json)
    if any(not r["ok"] for r in replays):
        sys.exit(EXIT_LIMIT)


if __name__ == "__main__":
    main()
