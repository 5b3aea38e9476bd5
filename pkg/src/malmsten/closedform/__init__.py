"""Closed-form evaluations of Malmsten-type integrals and related sequences."""

from .malmsten import (
    delta1_beta_chain,
    delta_general,
    delta_recurrence,
    delta_table,
    delta_table_printed,
    malmsten_log_quadratic,
    scaling_coefficient,
    sech_power_integral,
    zeta_limit_quarter,
)
from .reduction import delta_n_reduction_2d, delta_seq_reduction_2d, psi_half_diff_over_gamma
from .sequences import (
    chi_closed,
    chi_family_nested_sum,
    chi_parity,
    chi_table,
    cojer_identity,
    delta_seq_closed,
    delta_seq_direct,
    delta_seq_table,
    hurwitz_sgsp_general,
    lambda_closed,
    lambda_parity,
    lambda_table,
    stirling_zeta_combination,
)
from .tanh_integrals import (
    arctan_tanh_integrals,
    gamma_from_representation,
    gamma_representation,
    kappa_family,
    ln2_from_integral,
    pi_from_integral,
    sech2_log_integral,
    tanh_rational_general,
)

__all__ = [
    "arctan_tanh_integrals",
    "chi_closed",
    "chi_family_nested_sum",
    "chi_parity",
    "chi_table",
    "cojer_identity",
    "delta1_beta_chain",
    "delta_general",
    "delta_n_reduction_2d",
    "delta_recurrence",
    "delta_seq_closed",
    "delta_seq_direct",
    "delta_seq_reduction_2d",
    "delta_seq_table",
    "delta_table",
    "delta_table_printed",
    "gamma_from_representation",
    "gamma_representation",
    "hurwitz_sgsp_general",
    "kappa_family",
    "lambda_closed",
    "lambda_parity",
    "lambda_table",
    "ln2_from_integral",
    "malmsten_log_quadratic",
    "pi_from_integral",
    "psi_half_diff_over_gamma",
    "scaling_coefficient",
    "sech2_log_integral",
    "sech_power_integral",
    "stirling_zeta_combination",
    "tanh_rational_general",
    "zeta_limit_quarter",
]
