"""Ideals, fuzzy ideals and binary codes of finite Wajsberg algebras."""

from .algebra import (
    BooleanRingView,
    FiniteResiduatedLattice,
    MVAlgebra,
    ValidationReport,
    Violation,
    WajsbergAlgebra,
    as_residuated,
    boolean_algebra_from_ring,
    boolean_ring_view,
    mv_to_wajsberg,
    product_wajsberg,
    residuated_to_wajsberg,
    validate_boolean_ring,
    validate_mv,
    validate_residuated_lattice,
    validate_wajsberg,
    wajsberg_isomorphism,
    wajsberg_to_mv,
    wajsberg_to_residuated,
)
from .channel import (
    ChannelConfig,
    decode_min_distance,
    encode,
    exhaustive_correction,
    run_channel,
)
from .codes import (
    BinaryCode,
    CodeParams,
    boolean_form_matrix,
    boolean_from_matrix,
    build_hadamard,
    code_params,
    codeword,
    columns_all_bitvectors,
    generator_matrix,
    gf2_rank,
    is_hadamard_type,
    min_distance,
    row_equivalent,
)
from .errors import (
    BudgetExceededError,
    DuplicateIdealError,
    EmptySubsetError,
    FuzzIdealError,
    InvariantBreach,
    NotALatticeError,
    NotAnIdealError,
    NotBooleanError,
    NotBooleanFormError,
    ParseError,
    RankDeficientError,
    StructureError,
)
from .fixtures import load_fixture
from .fuzzy import (
    FuzzySubset,
    characteristic,
    constant,
    fuzzy_closure,
    fuzzy_subset,
    is_fuzzy_ideal,
    is_fuzzy_ideal_alt,
    is_fuzzy_ideal_boxplus,
    is_fuzzy_ideal_bound,
    two_level,
)
from .fuzzy_lattice import (
    ValueGrid,
    brouwerian_check,
    fi_join,
    fi_meet,
    heyting_arrow,
    heyting_axioms_check,
)
from .ideals import (
    IdealSet,
    enumerate_ideals,
    ideal_closure,
    is_ideal,
    is_prime_ideal,
    make_ideal,
)
from .textio import format_algebra, load_algebra, parse_algebra

__version__ = "0.1.0"
