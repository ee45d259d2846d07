"""Exact computations with Cartan matrices of contragredient Lie superalgebras."""

from .cartan import (
    CartanSpec,
    VertexType,
    components,
    is_indecomposable,
    is_regular,
    is_symmetrizable,
    normalize,
    submatrix,
    symmetrizer,
    vertex_type,
)
from .classify import (
    Answer,
    Verdict,
    identify_family,
    is_admissible,
    is_regular_kac_moody,
    two_vertex_scan,
)
from .conditions import ConditionReport, check_lm23, is_gcm
from .families import (
    FamilyTag,
    make_D210,
    make_D210hat,
    make_Q,
    make_q2,
    make_S12,
    make_S120,
    solve_Q,
)
from .freelie import GradedDims, gram, graded_dims, weight_basis
from .growth import (
    GCMType,
    GrowthKind,
    even_gcm_type,
    finite_growth_evidence,
    growth_classify,
    principal_matrix,
    principal_roots,
)
from .orbit import OrbitGraph, canonical_key, explore
from .reflection import BaseState, even_reflect, odd_reflect, verify_consistency
from .scalar import Scalar, compare, field_arith, format_scalar, parse_scalar, solve_quadratic
from .specfile import orbit_to_dot, parse_spec, parse_specfile, print_spec, to_dot

__version__ = "0.1.0"

__all__ = [
    "CartanSpec",
    "VertexType",
    "components",
    "is_indecomposable",
    "is_regular",
    "is_symmetrizable",
    "normalize",
    "submatrix",
    "symmetrizer",
    "vertex_type",
    "Answer",
    "Verdict",
    "identify_family",
    "is_admissible",
    "is_regular_kac_moody",
    "two_vertex_scan",
    "FamilyTag",
    "make_D210",
    "make_D210hat",
    "make_Q",
    "make_q2",
    "make_S12",
    "make_S120",
    "solve_Q",
    "GCMType",
    "GrowthKind",
    "even_gcm_type",
    "finite_growth_evidence",
    "growth_classify",
    "principal_matrix",
    "principal_roots",
    "ConditionReport",
    "check_lm23",
    "is_gcm",
    "GradedDims",
    "gram",
    "graded_dims",
    "weight_basis",
    "OrbitGraph",
    "canonical_key",
    "explore",
    "BaseState",
    "even_reflect",
    "odd_reflect",
    "verify_consistency",
    "Scalar",
    "compare",
    "field_arith",
    "format_scalar",
    "parse_scalar",
    "solve_quadratic",
    "orbit_to_dot",
    "parse_spec",
    "parse_specfile",
    "print_spec",
    "to_dot",
]
