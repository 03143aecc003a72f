"""Exact classification of 3-forms on R^7 and the split G2 form on X7 ⊂ SU(3)."""

from .classify import TypeReport, Verdict, b_matrix, classify, signature, stabilizer, stabilizer_dim
from .exterior import (
    KForm,
    canonical_g2,
    canonical_split_g2,
    contract,
    evaluate,
    interior_matrix,
    is_multisymplectic,
    pullback,
    wedge,
)
from .liealg import (
    LieAlgebra,
    bracket,
    build_su2,
    build_su3,
    cartan_3form,
    ce_differential,
    is_semisimple,
    jacobi_check,
    killing_form,
)
from .scalar import ComplexScalar, RealScalar, SQRT2
from .x7 import (
    CirclePoint,
    RationalQuaternion,
    SU3Element,
    embed_su2,
    factor_point,
    in_x7,
    restrict_cartan,
    sample_point,
    so2_1,
    tangent_frame,
    translate_check,
    verify_at,
)

__version__ = "0.1.0"
