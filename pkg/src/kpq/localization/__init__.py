from .points import KIND_POINT_TYPE, LocalizationPoint, b_mu, diagonal_value, localize, sufficient_rank, type_a_diagonal
from .psi import (
    GkmEntry,
    GkmReport,
    PsiTable,
    beta_minus_one,
    descent,
    gkm_check,
    localization_table,
    pi_on_table,
    psi_table,
    rank_indices,
    structure_constants_from_table,
)

__all__ = [
    "KIND_POINT_TYPE",
    "LocalizationPoint",
    "b_mu",
    "diagonal_value",
    "localize",
    "sufficient_rank",
    "type_a_diagonal",
    "GkmEntry",
    "GkmReport",
    "PsiTable",
    "beta_minus_one",
    "descent",
    "gkm_check",
    "localization_table",
    "pi_on_table",
    "psi_table",
    "rank_indices",
    "structure_constants_from_table",
]
