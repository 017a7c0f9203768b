"""Exact multiplicity bounds from resolution shift data of monomial ideals.

The upper bound e <= M_1...M_c/c! and the Cohen-Macaulay lower bound
e >= m_1...m_c/c! are evaluated with exact rational arithmetic against
Taylor or minimal-resolution shifts, equality cases are classified, and
exhaustive sweeps over enumerated small instances re-check the supporting
theorems.
"""

from .complexes import (
    BalanceSpec,
    FVector,
    SimplicialComplex,
    codimension,
    delete_vertex,
    f_vector,
    from_squarefree_ideal,
    h_vector,
    induced,
    intersection,
    is_balanced,
    is_cone,
    is_flag,
    is_generalized_tree,
    join,
    link,
    minimal_nonfaces,
    multiplicity,
    nonfaces_ideal,
    parse_facets,
    format_facets,
    shift_labels,
    union,
)
from .conjecture import (
    EqualityClass,
    HomRedCertificate,
    Report,
    boundary_join_decomposition,
    check_tensor_equality_conditions,
    check_union_inequality,
    classify_lower_equality,
    classify_upper_equality,
    homred_applicable,
    huneke_miller_check,
    ideal_codimension,
    is_cohen_macaulay,
    verify_bounds,
)
from .enumeration import (
    CanonicalForm,
    SweepConfig,
    SweepResult,
    canonical_data,
    canonical_form,
    clique_complex,
    enum_complex_data,
    enum_complexes,
    enum_graphs,
    flag_complexes,
    parse_sweep_config,
    sweep,
    verify_graph_census,
)
from .errors import (
    CounterexampleError,
    DimensionMismatchError,
    EmptyInputError,
    InputError,
    LabelCollisionError,
    MalformedTableError,
    MultiboundError,
    NotAFaceError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    UndefinedCodimensionRowError,
    UnitIdealError,
    ZeroIdealError,
)
from .homology import (
    GF2,
    GF3,
    QQ,
    FieldSpec,
    HomologyProfile,
    boundary_matrix,
    reduced_homology,
    subcomplex_profiles,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    format_ideal,
    is_squarefree,
    lcm_of,
    minimalize,
    parse_ideal,
    polarize,
    squarefree_monomial,
)
from .shifts import (
    BettiTable,
    DEFAULT_MAX_LATTICE,
    DEFAULT_MAX_SUBSETS,
    ShiftSequence,
    bound_value,
    complex_shifts,
    extremal_shifts,
    hochster_betti,
    is_pure,
    leray_t,
    lower_join,
    taylor_betti,
    taylor_shifts,
    upper_join,
)

__version__ = "0.1.0"
