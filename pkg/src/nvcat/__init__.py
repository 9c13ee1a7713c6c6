"""Topology of integral 1-cocycles on finite simplicial complexes.

Computes the homology of the infinite cyclic cover as a module over the
Laurent polynomial ring, its torsion support, rank-one twisted
cohomology with cup products and iterated Massey powers, and certified
lower bounds for the category of a pair (X, xi).
"""

__version__ = "0.1.0"

from .complexes import (  # noqa: F401
    InputError,
    IntegralCocycle,
    SimplicialComplex,
    divisibility,
    exactness_witness,
    load_complex,
    load_document,
    make_complex,
    periods,
    validate_cocycle,
)
from .cover import (  # noqa: F401
    build_twisted_complex,
    cover_homology,
    is_movable,
    torsion_summary,
)
from .cochains import (  # noqa: F401
    CohomologyRing,
    cup,
    pick_generic,
    twisted_cohomology,
    untwisted_cohomology,
)
from .fields import Field  # noqa: F401
from .massey import massey_power, survivor_check  # noqa: F401
from .bounds import (  # noqa: F401
    assemble_report,
    classical_cup_length,
    cup_length_bound,
    massey_bound,
    replay_certificate,
)
