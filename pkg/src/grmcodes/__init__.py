"""Generalized Reed-Muller codes, derived quantum stabilizer codes,
puncture codes, and the punctured quantum MDS family, with exhaustive
desk-scale verification of every claimed parameter.
"""

__version__ = "0.1.0"

from .errors import GrmError
from .gf import FieldElement, FieldSpec, get_field, quadratic_extension
from .grm import (
    GrmCode,
    MonomialBasis,
    build_grm,
    dual_order,
    grm_dimension,
    grm_distance,
    nesting_weight_check,
)
from .lincode import (
    DEFAULT_CAP,
    LinearCode,
    WeightDistribution,
    min_weight_difference,
    product_span,
)
from .puncture import (
    PunctureCodeRecord,
    PunctureWitness,
    extended_rs_embedding_check,
    find_weight_witness,
    mds_chain,
    puncture_code_css,
    puncture_code_hermitian,
    puncture_css,
    puncture_hermitian,
)
from .qcode import (
    QuantumCodeRecord,
    StabilizerMatrix,
    css,
    css_grm,
    css_grm_selfdual_pair,
    hermitian,
    hermitian_grm,
    hermitian_self_orthogonal,
    singleton_check,
)

__all__ = [
    "DEFAULT_CAP",
    "FieldElement",
    "FieldSpec",
    "GrmCode",
    "GrmError",
    "LinearCode",
    "MonomialBasis",
    "PunctureCodeRecord",
    "PunctureWitness",
    "QuantumCodeRecord",
    "StabilizerMatrix",
    "WeightDistribution",
    "build_grm",
    "css",
    "css_grm",
    "css_grm_selfdual_pair",
    "dual_order",
    "extended_rs_embedding_check",
    "find_weight_witness",
    "get_field",
    "grm_dimension",
    "grm_distance",
    "hermitian",
    "hermitian_grm",
    "hermitian_self_orthogonal",
    "mds_chain",
    "min_weight_difference",
    "nesting_weight_check",
    "product_span",
    "puncture_code_css",
    "puncture_code_hermitian",
    "puncture_css",
    "puncture_hermitian",
    "quadratic_extension",
    "singleton_check",
]
