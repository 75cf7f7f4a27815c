"""Exact quiver mutation, long mutation cycles, and structural certificates."""

from .errors import (
    ConstraintError,
    IsoSearchLimitError,
    NotInFamilyError,
    QuiverError,
    TranscriptionError,
    UnsupportedClassError,
    UsageError,
)
from .quiver import (
    Permutation,
    Quiver,
    canonical_form_upto_iso,
    equals,
    iso_upto_reversal,
    make_quiver,
    mutate,
    mutate_seq,
    relabel,
    restrict,
    reverse_all,
    validate_steps,
)
from .three_vertex import (
    ChebyshevSeq,
    DescentSeq,
    VertexClass,
    alternating_base,
    alternating_weights,
    chebyshev,
    chebyshev_value,
    classify_vertices,
    descent_sequence,
    elbow,
)
from .factory import (
    CycleParams,
    CycleSpec,
    build_acyclic_rotation,
    build_gallery,
    build_generalized_sink_source,
    build_theorem1,
    build_theorem4,
    gallery_names,
    theorem_sequence,
)
from .verifier import (
    CycleTrace,
    DistinctnessReport,
    LemmaReport,
    ShortCycleResult,
    check_distinct_upto_iso,
    check_minimal,
    check_no_short_cycles,
    inspect_trace_lemmas,
    verify_cycle,
)
from .structure import (
    ConditionReport,
    StructureReport,
    analyze,
    certify_exit,
    check_conditions,
    cyclic_triples,
    find_vortices,
    global_descent,
    is_vortex_free,
    orientation_determinism,
    propagate,
)
from .degrees import DegreeState, DegreeStep, track_degrees
from .genericity import ParamVector, double_cycle_transform, parametrize, unparametrize

__version__ = "0.1.0"
