"""strquiv: bound quivers of string / string-almost-gentle algebras.

Parse quiver presentations, check the string and almost-gentle axioms,
enumerate strings and bands, decide representation type, compute hom-space
dimensions between string modules, and build the arrow-splitting
endomorphism-algebra transform and the Cohen-Macaulay Auslander algebra.
"""

from .classify import Classification, check_s1, check_s2, classify
from .core import (
    Arrow,
    BoundQuiver,
    Path,
    algebra_dim,
    enumerate_paths,
    in_ideal,
    is_finite_dimensional,
)
from .dsl import (
    format_quiver,
    format_walk,
    parse_quiver,
    parse_walk,
    quiver_from_json,
    quiver_to_dot,
    quiver_to_json,
)
from .errors import (
    DanglingEndpoint,
    DuplicateId,
    GenerationExhausted,
    InfiniteDimensional,
    InvalidPath,
    InvalidWalk,
    NonComposableRelation,
    NotForbiddenCycle,
    NotLeftForbidden,
    NotSAG,
    NotStringPair,
    ParseError,
    QuiverError,
    RelationTooShort,
    UnknownArrow,
)
from .forbidden import (
    ForbiddenCycle,
    PerfectIndex,
    forbidden_cycles,
    is_perfect,
    left_forbidden_arrows,
    perfect_index,
)
from .generate import RandomSagSpec, gen_random_sag
from .strmod import (
    SubstringOccurrence,
    arrow_module_string,
    factor_substrings,
    hom_dim,
    image_substrings,
    projective_string,
)
from .transform import (
    RIndex,
    TransformResult,
    TransformedAlgebraReport,
    cma,
    lift_walk,
    r_transform,
    validate_index,
    verify_endo_dimension,
)
from .walks import (
    CyclicWalk,
    Letter,
    Walk,
    band_exists,
    band_problems,
    canonical_band,
    canonical_string,
    enumerate_strings,
    find_band,
    representation_type,
    string_problems,
    validate_band,
    validate_string,
)

__all__ = [
    "Arrow",
    "BoundQuiver",
    "Classification",
    "CyclicWalk",
    "DanglingEndpoint",
    "DuplicateId",
    "ForbiddenCycle",
    "GenerationExhausted",
    "InfiniteDimensional",
    "InvalidPath",
    "InvalidWalk",
    "Letter",
    "NonComposableRelation",
    "NotForbiddenCycle",
    "NotLeftForbidden",
    "NotSAG",
    "NotStringPair",
    "ParseError",
    "Path",
    "PerfectIndex",
    "QuiverError",
    "RIndex",
    "RandomSagSpec",
    "RelationTooShort",
    "SubstringOccurrence",
    "TransformResult",
    "TransformedAlgebraReport",
    "UnknownArrow",
    "Walk",
    "algebra_dim",
    "arrow_module_string",
    "band_exists",
    "band_problems",
    "canonical_band",
    "canonical_string",
    "check_s1",
    "check_s2",
    "classify",
    "cma",
    "enumerate_paths",
    "enumerate_strings",
    "factor_substrings",
    "find_band",
    "forbidden_cycles",
    "format_quiver",
    "format_walk",
    "gen_random_sag",
    "hom_dim",
    "image_substrings",
    "in_ideal",
    "is_finite_dimensional",
    "is_perfect",
    "left_forbidden_arrows",
    "lift_walk",
    "parse_quiver",
    "parse_walk",
    "perfect_index",
    "projective_string",
    "quiver_from_json",
    "quiver_to_dot",
    "quiver_to_json",
    "r_transform",
    "representation_type",
    "string_problems",
    "validate_band",
    "validate_index",
    "validate_string",
    "verify_endo_dimension",
]
