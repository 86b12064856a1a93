"""Toric rigid spaces from fans, in exact arithmetic.

Builds the dual-cone semigroups and chart algebras attached to a fan of
strongly convex rational cones, glues them into an atlas with
separatedness certificates, and reduces the atlas to toric-scheme chart
data over a prime field.  Everything is exact: integer lattices, rational
coefficients, p-adic valuations.
"""

from .cones import (
    Cone,
    cone_from_generators,
    cone_from_halfspaces,
    cone_sum,
    dual_cone,
    extreme_rays_from_halfspaces,
    faces,
    full_space,
    intersect,
    is_face,
    is_strongly_convex,
    pairing,
    zero_cone,
)
from .elements import (
    PAdicContext,
    ResidueElement,
    ToricElement,
    gauss_norm,
    gauss_valuation,
    include_into,
    leading_exponent,
    monomial,
    p_valuation,
    reduce_mod_p,
    residue_element,
    toric_element,
)
from .errors import (
    DimensionError,
    DomainError,
    InconclusiveSearchError,
    SchemaError,
    ToricError,
)
from .fans import (
    Fan,
    FanMap,
    FanMapViolation,
    FanViolation,
    complete_faces,
    extend_with_faces,
    fan_map_check,
    fans_isomorphic,
    hirzebruch_fan,
    is_complete,
    product_p1_p1_fan,
    projective_fan,
    validate_fan,
)
from .atlas import (
    Atlas,
    Chart,
    Overlap,
    build_atlas,
    separatedness_check,
    torus_chart,
    transition_expression,
)
from .hopf import (
    TensorElement,
    coaction_support_check,
    coinverse,
    comultiply,
    counit,
    tensor_element,
)
from .intlinalg import integer_kernel_basis
from .reduction import (
    ReducedAtlas,
    ReducedChart,
    ToricSchemeChartData,
    reduce_atlas,
    reduce_chart,
    reduction_equals_toric_scheme,
    toric_scheme_charts,
)
from .semigroups import (
    AffineSemigroup,
    CoverCertificate,
    Decomposition,
    binomial_relations,
    contains,
    decompose,
    face_localization,
    face_witness,
    order_basis,
    semigroup_of_cone,
    sum_covers,
    term_order_compare,
    torus_semigroup,
)

__version__ = "0.1.0"
