"""Exact computations in lengths coordinates on the character space of
type-preserving representations of the four-punctured sphere group."""

from ._rat import BACKEND, QQ, parse_rat, rat_str
from .algorithms import (
    Certificate,
    CertificationFailure,
    ReductionLogEntry,
    certify_hyperbolic,
    markov_residual,
    reduction_monotonicity_audit,
    sample_counterexample,
    signed_distinguished_traces,
    trace_reduction,
)
from .coords import (
    ComponentLabel,
    LengthsCoord,
    PairTriple,
    SimplexPoint,
    classify_component,
    eps_from_negatives,
    euler_class,
    pair_quantities,
    peripheral_entry,
    puncture_signs,
    rescale,
    simplex_point,
)
from .dynamics import (
    ChartPointE0,
    ChartPointE1,
    chart_switch_e0,
    conic_k_e0,
    conic_k_e1,
    conic_k_y_e1,
    dx_map_e0,
    dx_map_e1,
    dy_map_e1,
    dydz_map_e0,
    psi_cover,
    psi_equivariance_residual,
    quartic_k_e0,
    rotation_number,
    wp_density,
)
from .errors import (
    CharcoordsError,
    DegenerateOrbit,
    InternalInconsistency,
    InvalidStep,
    MaxStepsExceeded,
    NotAdmissible,
    NotClosed,
    NotTypePreserving,
    OffDomain,
    RetryLimitExceeded,
)
from .surface import (
    AXES,
    EDGES,
    PAIRS,
    PUNCTURES,
    MappingClassWord,
    Slope,
    TetraTriangulation,
    base_triangulation,
    expand_mapping_class,
    farey_path,
    reduce_word,
    slope_color,
    slopes_to_depth,
    word_from_labels,
    word_to_labels,
)
from .switches import (
    QuadState,
    SwitchOutcome,
    anti_tri_check,
    apply_word,
    diagonal_switch,
    pair_trace_rows,
    simultaneous_switch,
    tri_check,
)
from .trace import (
    DominanceReport,
    TraceResult,
    TurnStep,
    Witness,
    closed_form_distinguished,
    curve_trace,
    distinguished_trace,
    dominance_check,
    holonomy_oracle,
    make_step,
    parabolic_entry_sign,
    peripheral_matrix,
    peripheral_trace,
    slope_trace,
    turn_matrix,
)

__version__ = "0.1.0"
