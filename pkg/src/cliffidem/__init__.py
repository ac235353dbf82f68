"""cliffidem: exact idempotent geometry in real Clifford algebras C^{p,q}.

Constructs, classifies and samples idempotents (A*A = A) with exact
rational arithmetic: the mod-8 matrix-ring classification, rank classes
via scalar parts, tangent-space dimensions of idempotent varieties, and
the explicit quadric-parametrized families in low dimension.
"""

from ._kernels import backend_name
from .core import (
    DEFAULT_MAX_DIM,
    Blade,
    Multivector,
    PseudoscalarInfo,
    Signature,
    blade_product,
    geometric_product,
    grade_project,
    multivector_from_json,
    pseudoscalar,
    scalar_part,
)
from .engine import (
    TangentReport,
    central_split,
    is_idempotent,
    rank_class,
    tangent_dimension,
)
from .sampler import (
    PrimitiveFamily,
    canonical_idempotent,
    primitive_family,
    sample_idempotent,
    sample_invertible,
)
from .structure import (
    AlgebraClass,
    RankClass,
    Ring,
    classify_signature,
    idem_dim_formula,
    rank_range,
    validate_rank,
)
from .varieties import (
    FAMILIES,
    ExampleFamily,
    VectorPairPoint,
    XYZPoint,
    example_idempotent,
    extract_point,
    family_element,
    get_family,
    rational_variety_point,
    variety_residuals,
)

__all__ = [
    "DEFAULT_MAX_DIM",
    "FAMILIES",
    "AlgebraClass",
    "Blade",
    "ExampleFamily",
    "Multivector",
    "PrimitiveFamily",
    "PseudoscalarInfo",
    "RankClass",
    "Ring",
    "Signature",
    "TangentReport",
    "VectorPairPoint",
    "XYZPoint",
    "backend_name",
    "blade_product",
    "canonical_idempotent",
    "central_split",
    "classify_signature",
    "example_idempotent",
    "extract_point",
    "family_element",
    "geometric_product",
    "get_family",
    "grade_project",
    "idem_dim_formula",
    "is_idempotent",
    "multivector_from_json",
    "primitive_family",
    "pseudoscalar",
    "rank_class",
    "rank_range",
    "rational_variety_point",
    "sample_idempotent",
    "sample_invertible",
    "scalar_part",
    "tangent_dimension",
    "validate_rank",
    "variety_residuals",
]

__version__ = "0.1.0"
