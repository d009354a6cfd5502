"""Bases as commutative Frobenius structures.

A basis of a finite-dimensional complex inner-product space is the same
data as a commutative Frobenius structure of the matching type: the
comultiplication copies the basis vectors, the counit deletes them, and
the basis is recovered as the set of vectors the comultiplication copies.
This package builds the structure from a basis, verifies every defining
law numerically, extracts the basis back, classifies structures into the
three basis types, and realizes the finite-set semantics of the
comultiplication-preserving maps.
"""

from ._kernels import BACKEND
from .errors import (
    BasisError,
    ContractViolation,
    ConvergenceError,
    ExtractionError,
    FileFormatError,
    FrobasisError,
    HomomorphismError,
    MatchingError,
    ShapeError,
    ToleranceError,
)
from .extraction import (
    BasisRoundtrip,
    ExtractionResult,
    NonCopyableWitness,
    OrthogonalityCheck,
    check_orthogonality,
    extract_copyables,
    non_copyable_witness,
    roundtrip_algebra,
    roundtrip_basis,
)
from .finset import (
    FullHomReport,
    HomCheckReport,
    NormProfileIso,
    SetFunction,
    check_comonoid_hom,
    check_full_hom_unitary,
    compose_functions,
    function_to_hom,
    hom_to_function,
    identity_function,
    iso_by_norm_profile,
)
from .frobenius import (
    AxiomReport,
    BasisKind,
    BasisSpec,
    FrobeniusStructure,
    StructureClass,
    check_axioms,
    classify,
    conjugate_element,
    conjugate_morphism,
    conjugate_structure,
    from_basis,
    norm_profile,
    right_action,
    standard_structure,
    trivial_structure,
)
from .linalg import (
    DEFAULT_TOL,
    GeneralEigenpair,
    Tolerance,
    adjoint,
    eig_general,
    eig_hermitian,
    inner,
    kron,
    matmul,
    operator_norm,
    schmidt_rank,
    swap_map,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # errors
    "FrobasisError",
    "ShapeError",
    "ToleranceError",
    "BasisError",
    "ConvergenceError",
    "ExtractionError",
    "MatchingError",
    "HomomorphismError",
    "ContractViolation",
    "FileFormatError",
    # linear algebra
    "Tolerance",
    "DEFAULT_TOL",
    "matmul",
    "kron",
    "adjoint",
    "swap_map",
    "inner",
    "eig_hermitian",
    "eig_general",
    "GeneralEigenpair",
    "operator_norm",
    "schmidt_rank",
    # structures
    "BasisKind",
    "BasisSpec",
    "FrobeniusStructure",
    "AxiomReport",
    "StructureClass",
    "standard_structure",
    "trivial_structure",
    "from_basis",
    "check_axioms",
    "classify",
    "right_action",
    "conjugate_element",
    "conjugate_morphism",
    "conjugate_structure",
    "norm_profile",
    # extraction
    "ExtractionResult",
    "OrthogonalityCheck",
    "BasisRoundtrip",
    "NonCopyableWitness",
    "extract_copyables",
    "check_orthogonality",
    "roundtrip_basis",
    "roundtrip_algebra",
    "non_copyable_witness",
    # finite-set semantics
    "SetFunction",
    "identity_function",
    "compose_functions",
    "HomCheckReport",
    "check_comonoid_hom",
    "function_to_hom",
    "hom_to_function",
    "FullHomReport",
    "check_full_hom_unitary",
    "NormProfileIso",
    "iso_by_norm_profile",
    # rng
    "SplitMix64",
]
