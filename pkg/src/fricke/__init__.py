"""Exact trace coordinates and braid dynamics for SL(2) character varieties.

Layers, bottom up: scalar backends (exact Gaussian rationals / complex
floats), 2x2 matrices, a finitely presented groupoid engine with the two
built-in presentations, the seven-coordinate (tame) and six-coordinate
(wild) trace charts with their reconstructions and braid moves, orbit
iteration with cycle detection, and a deterministic CLI.
"""

from .errors import (
    BadWordError,
    BoundaryPointError,
    CharVarietyError,
    GaugeConstraintError,
    NonGenericPointError,
    NotARootError,
    OffSurfaceError,
    ParseError,
    ResonantEigenvalueError,
    ResonantTraceError,
    SingularMatrixError,
    SpanningTreeError,
    WordCompositionError,
)
from .scalars import EXACT, FLOAT, GaussianRational, backend
from .matrices import Mat2, mat_inv, mat_mul, random_sl2, trace_of_word
from .groupoid import (
    GaugeAssignment,
    GroupoidAutomorphism,
    GroupoidPresentation,
    GroupoidRep,
    Word,
    apply_automorphism,
    braid_automorphism_tame,
    braid_automorphism_wild,
    gauge,
    normalize,
    tame_presentation,
    wild_presentation,
    word,
)
from .tame import (
    TamePoint,
    TameTriple,
    TripleInvariants,
    braid_coord_action,
    braid_coord_action_inverse,
    braid_matrix_action,
    braid_matrix_action_inverse,
    extended_traces,
    extended_traces_formula,
    fricke_P_Q,
    fricke_residual,
    pure_braid_relation_diagnostic,
    tame_eigenvalue_float,
    tame_reconstruct,
    tame_traces,
    triple_invariants,
)
from .wild import (
    WildInvariants,
    WildPoint,
    WildRep,
    chart_swap,
    chart_swap_matrix,
    full_braid_coords,
    full_braid_matrix,
    full_braid_via_groupoid,
    pure_braid_coords,
    pure_braid_coords_inverse,
    pure_braid_matrix,
    pure_braid_via_groupoid,
    wild_equiv_invariants,
    wild_fiber_coordinates,
    wild_reconstruct,
    wild_residual,
    wild_residual_truncated,
    wild_traces,
)
from .orbit import BraidWord, OrbitRecord, detect_cycle, iterate, residual_drift

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
