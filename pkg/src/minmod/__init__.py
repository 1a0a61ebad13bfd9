"""Exact arithmetic for Virasoro minimal models, their fusion rings and
braiding matrices, and the sector structure of the 5A and 3C extension
algebras.  Everything downstream of the cyclotomic layer is computed in
closed form; floats only appear as final renderings."""

from .exact import (
    ComplexApprox,
    CyclotomicNumber,
    DivisionByZero,
    embed,
    parse_exact,
    zeta,
)
from .minimal import (
    FusionMultiset,
    InvalidLabel,
    InvalidModel,
    MinimalModel,
    ModelMismatch,
    ModuleLabel,
    NonUnitaryModel,
    QDim,
    central_charge,
    conformal_weight,
    ffk_pair,
    fuse,
    is_admissible,
    list_labels,
    qdim,
    qdim_tensor,
)
from .braiding import (
    BraidMatrix,
    BracketTable,
    IndexOutOfRange,
    NonIntegerExponent,
    RQuery,
    bracket,
    brackets,
    braid_entry,
    braid_matrix,
    lemma_3c_entry,
    lemma_5a_combos,
    memoized_queries,
    named_label,
    r_matrix,
    r_matrix_variants,
)
from .algebra import (
    ChainCheck,
    DegenerateSystem,
    GradedAlgebra,
    IrreducibleModuleSpec,
    Sector,
    SectorEquation,
    SectorProduct,
    SectorSystem,
    SolutionSet,
    build_algebra,
    build_sector_system,
    check_subalgebra_chain,
    irreducible_modules,
    module_fusion,
    normalization_residuals,
    qdim_module,
    sector_fusion,
    solve_sector_system,
)

__version__ = "0.1.0"

__all__ = [
    "BraidMatrix",
    "BracketTable",
    "ChainCheck",
    "ComplexApprox",
    "CyclotomicNumber",
    "DegenerateSystem",
    "DivisionByZero",
    "FusionMultiset",
    "GradedAlgebra",
    "IndexOutOfRange",
    "InvalidLabel",
    "InvalidModel",
    "IrreducibleModuleSpec",
    "MinimalModel",
    "ModelMismatch",
    "ModuleLabel",
    "NonIntegerExponent",
    "NonUnitaryModel",
    "QDim",
    "RQuery",
    "Sector",
    "SectorEquation",
    "SectorProduct",
    "SectorSystem",
    "SolutionSet",
    "bracket",
    "brackets",
    "braid_entry",
    "braid_matrix",
    "build_algebra",
    "build_sector_system",
    "central_charge",
    "check_subalgebra_chain",
    "conformal_weight",
    "embed",
    "ffk_pair",
    "fuse",
    "irreducible_modules",
    "is_admissible",
    "lemma_3c_entry",
    "lemma_5a_combos",
    "list_labels",
    "memoized_queries",
    "module_fusion",
    "named_label",
    "normalization_residuals",
    "parse_exact",
    "qdim",
    "qdim_module",
    "qdim_tensor",
    "r_matrix",
    "r_matrix_variants",
    "sector_fusion",
    "solve_sector_system",
    "zeta",
]
