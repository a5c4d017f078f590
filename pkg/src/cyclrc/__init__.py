"""Binary cyclic locally repairable codes over GF(2), built from defining sets in GF(2^m)."""

from .analysis import SearchResult, analyze, search_defining_sets
from .bounds import (
    BoundReport,
    disjoint_d6_dimension_bound,
    disjoint_d10_dimension_bound,
    evaluate_bounds,
    f4_hamming_size_bound,
    lrc_singleton_bound,
)
from .constructions import (
    ConstructionError,
    ConstructionResult,
    available,
    construct,
    distance6,
    distance10,
    singleton_optimal,
)
from .cyclic import (
    CodeError,
    CyclicCode,
    DistanceEstimate,
    bch_bound,
    build_code,
    code_from_dict,
    code_to_dict,
    dual_code,
    load_code,
    min_distance,
    save_code,
)
from .gf import (
    CyclotomicCoset,
    FieldError,
    GaloisField,
    cyclotomic_cosets,
    gf_inv,
    gf_mul,
    make_field,
    minimal_polynomial,
)
from .locality import (
    AvailabilityCertificate,
    AvailabilityError,
    F4Image,
    ParityCheck,
    RepairGroup,
    contract_to_f4,
    extract_independent_cover,
    find_disjoint_groups,
    find_low_weight_duals,
    verify_availability,
    verify_locality,
)
from .poly import BinaryPolynomial, poly_divrem, poly_eval, poly_mul
from .repair import (
    ErasureDecodingError,
    RepairTrace,
    choose_repair_set,
    erasure_decode,
    local_repair,
)

__version__ = "0.1.0"
