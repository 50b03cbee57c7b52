"""Exact-arithmetic Dehn-surgery calculus on lens spaces."""

from .distance import (
    ASSERTED,
    CRITERION_VERIFIED,
    EQUAL,
    EXACTLY_TWO,
    ONE_ASSERTED,
    UNDETERMINED,
    DistanceReport,
    Evidence,
    WitnessPair,
    berge_pair,
    betti_lower_bound,
    d_lens,
    dh_bounds,
    enumerate_dh1_family,
)
from .errors import InapplicableError, InvalidInputError, LensdistError
from .lens import (
    CONVENTIONS,
    ORIENTED,
    UNORIENTED,
    LensSpace,
    RawLensParams,
    betti1,
    is_homeomorphic,
    normalize,
    q_orbit,
    qr_obstructed,
)
from .onebridge import (
    HYPERBOLIC,
    HYPOTHESIS_UNVERIFIED,
    TOROIDAL,
    TORUS_KNOT,
    BasicSequence,
    KnotInvariants,
    OneBridgeKnotSpec,
    basic_sequence,
    classify,
    phi,
    phi_tilde,
    phi_tilde_parts,
    psi,
    s3_longitudinal_candidates,
)
from .presentations import (
    DEFAULT_FUEL,
    CYCLIC_GROUP,
    INCONCLUSIVE,
    TRIVIAL_GROUP,
    GroupPresentation,
    SimplifyOutcome,
    Word,
    abelianization,
    cyclic_reduce,
    free_reduce,
    invert_word,
    power_notation,
    presentation,
    simplify,
    word_from_string,
    word_to_string,
)
from .surgery import (
    PSEUDO_ANOSOV,
    BraidFamily,
    ClosedFormFamily,
    FillingCoefficients,
    Slope,
    braid_surgery_lens,
    family_eval,
    family_info,
    family_names,
    filling_coefficients,
    parse_slope,
    pseudo_anosov_candidate,
    slope_distance,
    wu_hyperbolic_guarantee,
)

__version__ = "0.1.0"
