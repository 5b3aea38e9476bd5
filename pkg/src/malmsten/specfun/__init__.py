"""Real special functions at configurable precision.

Gamma family, Hurwitz zeta and its s-derivative, Dirichlet beta, the
alternating Lerch series ``Phi(-1, s, a)``, unit-circle polylogarithms and
the difference relations that tie them together.
"""

from .accel import alternating_sum
from .beta import beta_via_integral, dirichlet_beta, dirichlet_beta_deriv
from .constants import CONSTANT_NAMES, catalan, constant, euler_gamma, psi_quarter, zeta_int
from .gamma import digamma, gamma, log_gamma, polygamma, rgamma
from .hurwitz import (
    hurwitz_zeta,
    hurwitz_zeta_hermite,
    hurwitz_zeta_sderiv,
    lerch_phi_neg1,
    lerch_phi_neg1_sderiv,
    zeta_half_diff,
    zeta_sderiv_diff_limit_s1,
    zeta_sderiv_half_diff,
)
from .polylog import polylog_unit_circle, polylog_unit_circle_rational
from .relations import (
    beta_deriv_zero_closed_form,
    beta_deriv_zero_reflection,
    zeta_diff_bernoulli,
    zeta_diff_lerch,
    zeta_diff_polygamma,
    zeta_sderiv_diff_at_zero,
    zeta_sderiv_diff_half_integers,
    zeta_sderiv_reflection,
)

__all__ = [
    "alternating_sum",
    "beta_deriv_zero_closed_form",
    "beta_deriv_zero_reflection",
    "beta_via_integral",
    "catalan",
    "constant",
    "CONSTANT_NAMES",
    "digamma",
    "dirichlet_beta",
    "dirichlet_beta_deriv",
    "euler_gamma",
    "gamma",
    "hurwitz_zeta",
    "hurwitz_zeta_hermite",
    "hurwitz_zeta_sderiv",
    "lerch_phi_neg1",
    "lerch_phi_neg1_sderiv",
    "log_gamma",
    "polygamma",
    "polylog_unit_circle",
    "polylog_unit_circle_rational",
    "psi_quarter",
    "rgamma",
    "zeta_diff_bernoulli",
    "zeta_diff_lerch",
    "zeta_diff_polygamma",
    "zeta_half_diff",
    "zeta_int",
    "zeta_sderiv_diff_at_zero",
    "zeta_sderiv_diff_half_integers",
    "zeta_sderiv_diff_limit_s1",
    "zeta_sderiv_half_diff",
    "zeta_sderiv_reflection",
]
