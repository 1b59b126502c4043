"""Exact Lefschetz-property computations for Artinian monomial algebras."""
__version__ = "0.1.0"

from .complex import SimplicialComplex, new_complex, simplex
from .errors import CrossCheckError, InputError, PreconditionError, WlpkitError
from .graphs import classify_components, cremona_shape, daonair_wlp1, monomial_wlp1
from .incidence import (
    facet_ideal_skeleton,
    incidence_ideal,
    incidence_matrix,
    loopgraph_incidence,
    multiplication_matrix,
)
from .lefschetz import has_wlp, slp_degree1, wlp_degree, wlp_report
from .linalg import (
    BACKEND,
    FailureSet,
    IntegerMatrix,
    determinant,
    rank_mod_p,
    rank_q,
    smith_normal_form,
)
from .monomial import Monomial, MonomialAlgebra, MonomialIdeal, squarefree_reduction
from .multiplicity import (
    analytic_spread,
    failure_char_set,
    is_birational,
    last_mixed_mult,
    polytope_normalized_volume,
)

__all__ = [
    "BACKEND", "CrossCheckError", "FailureSet", "InputError", "IntegerMatrix", "Monomial",
    "MonomialAlgebra", "MonomialIdeal", "PreconditionError", "SimplicialComplex",
    "WlpkitError", "analytic_spread", "classify_components", "cremona_shape",
    "daonair_wlp1", "determinant", "facet_ideal_skeleton", "failure_char_set", "has_wlp",
    "incidence_ideal", "incidence_matrix", "is_birational", "last_mixed_mult",
    "loopgraph_incidence", "monomial_wlp1", "multiplication_matrix", "new_complex",
    "polytope_normalized_volume", "rank_mod_p", "rank_q", "simplex", "slp_degree1",
    "smith_normal_form", "squarefree_reduction", "wlp_degree", "wlp_report",
]
