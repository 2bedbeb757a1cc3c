"""Exact structure-constant computations for Z2-graded Hom-Lie
brackets, cobrackets, and the objects built out of them.

Everything is computed symbolically over a parameter ring with rational
coefficients; no floating point is used anywhere.
"""

from .catalog import (
    CatalogRow,
    CatalogSummary,
    CatalogVariant,
    Stratum,
    catalog_list,
    catalog_payload,
    concrete_variant,
    expand_variants,
    get_row,
    verify_all,
    verify_row,
    verify_variant,
)
from .constructions import (
    BilinearForm,
    ManinTriple,
    MatchedPair,
    Representation,
    adjoint_representation,
    bracket_from_dual_cobracket,
    check_admissible,
    check_dual_pair,
    coadjoint_action,
    cobracket_from_dual_bracket,
    dual_basis,
    dual_coadjoint_action,
    dual_matched_pair,
    dual_representation,
    dualize,
    invert_even_map,
    manin_supertriple,
    semidirect_product,
    transport_structure,
    twist,
    twist_power,
)
from .errors import (
    DimensionMismatchError,
    HlsbError,
    HypothesisError,
    MorphismError,
    ParityError,
    ParseError,
    RingMismatchError,
    ScalarError,
)
from .fileformat import (
    Definition,
    RepData,
    definition_from_bialgebra,
    definition_text,
    dump_definition,
    load_definition,
    loads_definition,
    parse_definition,
)
from .scalar import ParamRing, Scalar
from .structures import (
    CheckReport,
    HomSuperAlgebra,
    HomSuperBialgebra,
    HomSuperCoalgebra,
    Violation,
    ad_action,
    ad_basis,
    bialgebra_from_deltas,
    delta0,
    delta1,
    zero_bracket,
    zero_cobracket,
)
from .superlinear import (
    EVEN,
    ODD,
    EvenMap,
    SuperBasis,
    Tensor2,
    Tensor3,
    cyclic_sum,
    koszul_sign,
    tau,
    xi,
)
from .yangbaxter import (
    QuasiTriangularEquivalences,
    alpha_fixed_tensors,
    check_coboundary,
    check_perturbation_hypotheses,
    check_quasi_triangular,
    coboundary_from_r,
    coboundary_hypothesis_violations,
    perturb_cobracket,
    perturbation_defect,
    quasi_triangular_equivalences,
    random_fixed_tensor,
    yang_baxter_residual,
)

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "CatalogRow",
    "CatalogSummary",
    "CatalogVariant",
    "CheckReport",
    "Definition",
    "DimensionMismatchError",
    "EVEN",
    "EvenMap",
    "HlsbError",
    "HomSuperAlgebra",
    "HomSuperBialgebra",
    "HomSuperCoalgebra",
    "HypothesisError",
    "ManinTriple",
    "MatchedPair",
    "MorphismError",
    "ODD",
    "ParamRing",
    "ParityError",
    "ParseError",
    "QuasiTriangularEquivalences",
    "RepData",
    "Representation",
    "RingMismatchError",
    "Scalar",
    "ScalarError",
    "Stratum",
    "SuperBasis",
    "Tensor2",
    "Tensor3",
    "Violation",
    "__version__",
    "ad_action",
    "ad_basis",
    "adjoint_representation",
    "alpha_fixed_tensors",
    "bialgebra_from_deltas",
    "bracket_from_dual_cobracket",
    "catalog_list",
    "catalog_payload",
    "check_admissible",
    "check_coboundary",
    "check_dual_pair",
    "check_perturbation_hypotheses",
    "check_quasi_triangular",
    "coadjoint_action",
    "cobracket_from_dual_bracket",
    "coboundary_from_r",
    "coboundary_hypothesis_violations",
    "concrete_variant",
    "cyclic_sum",
    "definition_from_bialgebra",
    "definition_text",
    "delta0",
    "delta1",
    "dual_basis",
    "dual_coadjoint_action",
    "dual_matched_pair",
    "dual_representation",
    "dualize",
    "dump_definition",
    "expand_variants",
    "get_row",
    "invert_even_map",
    "koszul_sign",
    "load_definition",
    "loads_definition",
    "manin_supertriple",
    "parse_definition",
    "perturb_cobracket",
    "perturbation_defect",
    "quasi_triangular_equivalences",
    "random_fixed_tensor",
    "semidirect_product",
    "tau",
    "transport_structure",
    "twist",
    "twist_power",
    "verify_all",
    "verify_row",
    "verify_variant",
    "xi",
    "yang_baxter_residual",
    "zero_bracket",
    "zero_cobracket",
]
