"""Exact ranks, signatures, and restriction bounds of Hermitian forms,
with constructive maps between hyperquadrics.

Everything computes over exact rational (or Gaussian rational)
arithmetic; randomized operations take explicit seeds and report
Schwartz-Zippel style failure bounds instead of hoping.
"""

from .combinat import (
    MacaulayRep,
    compose_K,
    green_G,
    green_K,
    hermitian_R,
    macaulay_lower,
    macaulay_rep,
    rigidity_bound,
    stability_region,
)
from .errors import (
    ConjugateMismatch,
    DimensionMismatch,
    HyperqError,
    IndexOutOfRange,
    NoNegativeComponent,
    NoPivotMonomial,
    NotAdmissible,
    NotReached,
    NotVanishing,
    NonRealDiagonal,
    ParseError,
)
from .formats import (
    dump_form,
    dump_map,
    dump_realpoly,
    load_form,
    load_map,
    load_realpoly,
    parse_form,
    parse_map,
    parse_realpoly,
)
from .forms import (
    HermitianForm,
    SignaturePair,
    WeightedHoloMap,
    compose_linear,
    decompose,
    form_from_entries,
    form_from_real_poly,
    form_inertia,
    form_rank,
    norm_difference,
)
from .quadrics import (
    QuadricMap,
    SignedRealPoly,
    construct_map,
    corner_move,
    dehomogenize,
    grow,
    identity_map,
    is_admissible,
    map_from_form,
    reachable_signatures,
    s_poly,
    tensor_extend,
    verify_map,
)
from .restrict import (
    AffineEmbedding,
    RestrictionMatrix,
    cayley_unitary,
    embedding,
    generic_restriction_rank,
    max_affine_rank,
    quadric_subspace,
    restrict_form,
    restriction_matrix,
    sz_failure_bound,
    veronese_dim,
)
from .scalars import GaussianRational, gr

__all__ = [
    "AffineEmbedding",
    "ConjugateMismatch",
    "DimensionMismatch",
    "GaussianRational",
    "HermitianForm",
    "HyperqError",
    "IndexOutOfRange",
    "MacaulayRep",
    "NoNegativeComponent",
    "NoPivotMonomial",
    "NonRealDiagonal",
    "NotAdmissible",
    "NotReached",
    "NotVanishing",
    "ParseError",
    "QuadricMap",
    "RestrictionMatrix",
    "SignaturePair",
    "SignedRealPoly",
    "WeightedHoloMap",
    "cayley_unitary",
    "compose_K",
    "compose_linear",
    "construct_map",
    "corner_move",
    "decompose",
    "dehomogenize",
    "dump_form",
    "dump_map",
    "dump_realpoly",
    "embedding",
    "form_from_entries",
    "form_from_real_poly",
    "form_inertia",
    "form_rank",
    "generic_restriction_rank",
    "gr",
    "green_G",
    "green_K",
    "grow",
    "hermitian_R",
    "identity_map",
    "is_admissible",
    "load_form",
    "load_map",
    "load_realpoly",
    "macaulay_lower",
    "macaulay_rep",
    "map_from_form",
    "max_affine_rank",
    "norm_difference",
    "parse_form",
    "parse_map",
    "parse_realpoly",
    "quadric_subspace",
    "reachable_signatures",
    "restrict_form",
    "restriction_matrix",
    "rigidity_bound",
    "s_poly",
    "stability_region",
    "sz_failure_bound",
    "tensor_extend",
    "verify_map",
    "veronese_dim",
]
