from .polynomial import (
    NCPolynomial,
    NCWord,
    adjoint,
    alice_sum,
    bob_sum,
    evaluate,
    is_self_adjoint,
    nc_add,
    nc_multiply,
    nc_scale,
    normalize_tokens,
    word_product,
)
from .sos import (
    KN2Values,
    k32_probability_lhs,
    k32_sos_lhs,
    k32_sos_terms,
    k32_two_pair_terms,
    kn2_bias_polynomial,
    kn2_value_table,
    sos_residual,
    synchronous_sos,
    synchronous_value_polynomial,
    verify_sos,
)

__all__ = [
    "KN2Values",
    "NCPolynomial",
    "NCWord",
    "adjoint",
    "alice_sum",
    "bob_sum",
    "evaluate",
    "is_self_adjoint",
    "k32_probability_lhs",
    "k32_sos_lhs",
    "k32_sos_terms",
    "k32_two_pair_terms",
    "kn2_bias_polynomial",
    "kn2_value_table",
    "nc_add",
    "nc_multiply",
    "nc_scale",
    "normalize_tokens",
    "sos_residual",
    "synchronous_sos",
    "synchronous_value_polynomial",
    "verify_sos",
    "word_product",
]
