"""Exact-arithmetic library for linear codes built from knot diagram
colorings: diagrams and Reidemeister moves, Fox/Dehn coloring matrices,
Alexander polynomials, Smith normal forms, coloring counts, code
parameters for torus/pretzel/connected-sum families, and the cable
dimension calculus.
"""

from .laurent import LaurentPoly, int_poly_content_gcd
from .fields import FqElem, FqField, is_prime, poly_gcd
from .exactlin import RingFpT, RingZ, SnfResult, kernel_basis, laurent_det, rank, snf
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    MoveError,
    ValidationReport,
    arcs,
    checkerboard,
    regions,
    region_index,
    reidemeister_r1,
    reidemeister_r1_remove,
    reidemeister_r2,
    reidemeister_r2_remove,
    validate_diagram,
)
from .generators import (
    builtin,
    connected_sum,
    from_braid,
    is_pretzel_knot,
    pretzel_diagram,
    torus_diagram,
)
from .coloring import (
    DehnMatrix,
    FoxMatrix,
    IntMod,
    PolyMod,
    alexander_polynomial,
    count_colorings_mod,
    count_colorings_poly_mod,
    dehn_matrix,
    dehn_to_fox,
    fox_matrix,
    fox_to_dehn,
    is_colorable,
    knot_determinant,
    minor_family,
)
from .codes import (
    BudgetExceeded,
    LinearCode,
    WeightEnumerator,
    code_from_diagram,
    dimension_via_ideals,
    dual,
    dual_knot_feasibility,
    ldpc_profile,
    min_distance,
    subcode_last_zero,
    sum_code,
    sum_min_distance,
    sum_weight_enumerator,
    weight_enumerator,
)
from .cable import (
    EvaluatedIdealSeq,
    cable_alexander,
    cable_ideal_seq,
    ideal_seq_from_diagram,
    iterated_cable_length,
    torus_alexander,
    torus_delta,
    unknot_ideal_seq,
)

__version__ = "0.1.0"
