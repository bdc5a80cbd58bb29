"""Nilpotent-orbit duality maps, special pieces, wavefront-set invariants,
and the packets they cut out, over validated group-data bundles."""

from .data import (
    GroupBundle,
    ValidationReport,
    dual_pair,
    load_builtin_bundle,
    load_bundle,
    parameter_set,
    serialize_bundle,
    validate_bundle,
)
from .duality import (
    DualPair,
    achar_dual,
    embed,
    is_special_pair,
    min_special_cover,
    pair_leq,
    sommers_dual,
)
from .errors import (
    BundleValidationError,
    GroupMismatchError,
    InconsistentDataError,
    MissingTableError,
    NonUniqueCoverError,
    OrbitDualityError,
    SchemaError,
    UnknownLabelError,
)
from .orbits import (
    BundlePoset,
    ClassicalPoset,
    bvls_dual,
    classical_poset,
    closure_leq,
    is_special,
    special_closure,
    special_piece_of,
)
from .packets import (
    Parameter,
    ParameterSet,
    arthur_packet,
    az_dual,
    check_infl_sum,
    check_jiang,
    cuwf,
    geometric_wf,
    is_tempered,
    weak_packet,
)
from .rootdata import Coweight, dominant_rep, root_system, weyl_conjugate

__version__ = "0.1.0"

__all__ = [
    "BundlePoset",
    "BundleValidationError",
    "ClassicalPoset",
    "Coweight",
    "DualPair",
    "GroupBundle",
    "GroupMismatchError",
    "InconsistentDataError",
    "MissingTableError",
    "NonUniqueCoverError",
    "OrbitDualityError",
    "Parameter",
    "ParameterSet",
    "SchemaError",
    "UnknownLabelError",
    "ValidationReport",
    "achar_dual",
    "arthur_packet",
    "az_dual",
    "bvls_dual",
    "check_infl_sum",
    "check_jiang",
    "classical_poset",
    "closure_leq",
    "cuwf",
    "dominant_rep",
    "dual_pair",
    "embed",
    "geometric_wf",
    "is_special",
    "is_special_pair",
    "is_tempered",
    "load_builtin_bundle",
    "load_bundle",
    "min_special_cover",
    "pair_leq",
    "parameter_set",
    "root_system",
    "serialize_bundle",
    "sommers_dual",
    "special_closure",
    "special_piece_of",
    "validate_bundle",
    "weak_packet",
    "weyl_conjugate",
]
