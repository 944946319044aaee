"""Brauer-graph algebras with fractional multiplicities.

Ribbon graphs carry a degree function; when the induced rotation-power
permutation is compatible with the edge pairing the pair defines a
symmetric algebra.  This package builds those algebras' quiver
presentations, reduced forms, cyclic coverings, gentle trivial
extensions, invariant fingerprints, and reconstructs the graph from the
Loewy structure of the projectives.
"""

from .afbg import (
    Afbg,
    is_admissible,
    nakayama_permutation,
    reduced_form,
    rep_finite_report,
)
from .covering import (
    BorderedRibbonGraph,
    CoverResult,
    cover_finite,
    cover_window,
    ordering_from_cut,
    quotient_by_nakayama_power,
    smallest_cut,
    verify_covering,
)
from .errors import (
    Ambiguous,
    AmbiguityError,
    CoverNotAdmissible,
    DisconnectedInput,
    Exceptional,
    FbgaError,
    InconsistentInput,
    InputError,
    InvalidCut,
    MathPreconditionError,
    MissingDegree,
    NonDivisorPower,
    NotABrauerGraph,
    NotAdmissible,
    OccurrenceMismatch,
    ParseError,
    QuotientNotAdmissible,
    RibbonStructureError,
    SizeLimitExceeded,
    UnboundedPath,
    UnknownVertex,
)
from .gentle import (
    GentlePresentation,
    augmented_vertex_set,
    gentle_cover,
    maximal_paths,
    r_fold_trivial_extension,
    repetitive_window,
    ribbon_graph_of_gentle,
    trivial_extension,
    validate_gentle,
)
from .invariants import Fingerprint, compare, fingerprint
from .presentation import (
    Presentation,
    basis,
    build_presentation,
    dimension,
    loewy_table,
    nakayama_on_presentation,
    oracle_dimension,
    presentation_isomorphism,
    special_cycles,
)
from .reconstruct import (
    LoewyData,
    Reconstruction,
    cyclic_sequences,
    loewy_data_of,
    reconstruct_afbg,
    roundtrip_check,
)
from .ribbon import RibbonGraph, canonical_code, is_isomorphic

__version__ = "0.1.0"
