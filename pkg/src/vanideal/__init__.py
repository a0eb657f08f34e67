"""Vanishing ideals of finite sets of rational points in projective space over GF(q)."""

from . import kernel
from .codes import (
    AffineCodeParameters,
    CodeParameters,
    GeneratorMatrix,
    affine_code_parameters,
    code_parameters,
    generator_matrix,
    minimum_distance,
)
from .errors import VanidealError
from .gf import FieldElement, FieldSpec, make_field
from .groebner import GroebnerBasis, Stats, collect_stats, groebner_basis, normal_form
from .hilbert import HilbertData, count_common_zeros, degree_of, height_of, hilbert_data, hilbert_function
from .ideal import (
    Ideal,
    affine_field_ideal,
    colon_ideal,
    colon_poly,
    ideal_equal,
    intersect,
    is_saturated,
    maximal_ideal,
    saturate_ideal,
    saturate_poly,
)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, Ring, elim, polynomial_ring
from .projective import (
    PointSet,
    ProjectivePoint,
    TheoremReport,
    check_theorem,
    enumerate_projective_space,
    is_empty_variety,
    point_ideal,
    projective_space_ideal,
    vanishing_ideal_oracle,
    vanishing_ideal_poly,
    vanishing_ideal_saturation,
    variety_points,
)

__all__ = [
    "affine_code_parameters",
    "affine_field_ideal",
    "AffineCodeParameters",
    "check_theorem",
    "code_parameters",
    "CodeParameters",
    "collect_stats",
    "colon_ideal",
    "colon_poly",
    "count_common_zeros",
    "degree_of",
    "elim",
    "enumerate_projective_space",
    "FieldElement",
    "FieldSpec",
    "generator_matrix",
    "GeneratorMatrix",
    "GREVLEX",
    "groebner_basis",
    "GroebnerBasis",
    "height_of",
    "hilbert_data",
    "hilbert_function",
    "HilbertData",
    "Ideal",
    "ideal_equal",
    "intersect",
    "is_empty_variety",
    "is_saturated",
    "kernel",
    "LEX",
    "make_field",
    "maximal_ideal",
    "minimum_distance",
    "MonomialOrder",
    "normal_form",
    "point_ideal",
    "PointSet",
    "Polynomial",
    "polynomial_ring",
    "projective_space_ideal",
    "ProjectivePoint",
    "Ring",
    "saturate_ideal",
    "saturate_poly",
    "Stats",
    "TheoremReport",
    "VanidealError",
    "vanishing_ideal_oracle",
    "vanishing_ideal_poly",
    "vanishing_ideal_saturation",
    "variety_points",
]

__version__ = "0.1.0"
