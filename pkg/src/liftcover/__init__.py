"""Liftability of mapping classes under regular cyclic covers.

Exact symplectic criteria for when a twist word lifts through the standard
k-sheeted cyclic cover, the normal series and unit-group quotient that the
criterion induces, orbit verification of the underlying transitive action,
constructive genus-2 membership reductions, and Penner-style pseudo-Anosov
words with exact Perron data.
"""

from .errors import (
    CapExceededError,
    ConvergenceError,
    GeneratorRangeError,
    InternalCheckError,
    LiftCoverError,
    MembershipError,
    NotSymplecticError,
    ShapeError,
    WordSyntaxError,
)
from .linalg import (
    ExactPolynomial,
    ResidueMatrix,
    SquareMatrix,
    SymplecticForm,
    char_poly,
    count_primitive,
    is_primitive_vector,
    is_symplectic,
    largest_real_root,
    mat_mul,
    mat_vec,
    spectral_radius,
    symplectic_inverse,
    totient,
)
from .words import (
    BasisConvention,
    Generator,
    MCGWord,
    format_word,
    iota_matrix,
    parse_word,
    psi,
    psi_k,
    twist_matrix,
    twist_power,
    word,
)
from .criteria import (
    CongruenceFlags,
    LiftReport,
    congruence_class_g1,
    in_level_k,
    in_stab_e1,
    in_umod,
    index_lmod,
    index_stab_e1,
    is_liftable,
    lcm_intersection_check,
    level_k_witness,
    lift_report,
    liftable_witness,
    stab_e1_witness,
    stabilizes_e1_class,
)
from .series import (
    CosetRep,
    IotaExtension,
    coset_rep,
    iota_extension_data,
    quotient_class,
    units,
    verify_coset_system,
)
from .orbits import (
    ORBIT_MODES,
    OrbitResult,
    available_backends,
    expected_orbit_size,
    orbit_primitive_classes,
    orbit_primitive_vectors,
    select_backend,
)
from .reduction import (
    Factor,
    Factorization,
    ReductionWitness,
    eta_embed,
    express_via_generators,
    reduce_to_eta,
)
from .penner import (
    AdmissibleTuple,
    PennerSystem,
    PolyReport,
    RecoveryResult,
    base_tuple,
    build_word,
    bump_tuple,
    char_poly_report,
    curve_order,
    generator_recovery_check,
    homological_dilatation,
    incidence_matrix,
    penner_liftable,
    perron_matrix,
    stretch_factor,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
