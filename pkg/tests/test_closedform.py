"""Closed forms checked against independent references.

References are mpmath's own special functions and adaptive quadrature
(``mpmath.quad``), which share no code with the package's evaluators.
"""

from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf, pi, log, sqrt, euler, catalan, zeta, psi, sech, tanh, cosh, atan, loggamma

from malmsten.closedform import (
    arctan_tanh_integrals,
    chi_closed,
    chi_family_nested_sum,
    chi_parity,
    chi_table,
    cojer_identity,
    delta1_beta_chain,
    delta_general,
    delta_n_reduction_2d,
    delta_recurrence,
    delta_seq_closed,
    delta_seq_direct,
    delta_seq_reduction_2d,
    delta_seq_table,
    delta_table,
    delta_table_printed,
    gamma_from_representation,
    gamma_representation,
    hurwitz_sgsp_general,
    kappa_family,
    lambda_closed,
    lambda_parity,
    lambda_table,
    ln2_from_integral,
    malmsten_log_quadratic,
    pi_from_integral,
    sech2_log_integral,
    sech_power_integral,
    stirling_zeta_combination,
    tanh_rational_general,
    zeta_limit_quarter,
)
from malmsten.context import precision
from malmsten.errors import DomainError

P = 30


@pytest.fixture(autouse=True)
def ctx():
    with precision(P):
        yield


def close(x, y, digits=P - 10):
    return abs(x - y) <= mpf(10) ** (-digits) * max(1, abs(y))


def ref_quad(f):
    """Reference integral over (0, inf) with mpmath's adaptive tanh-sinh."""
    return mpmath.quad(f, [0, 1, 4, 16, mpmath.inf])


def malmsten_value():
    return pi * log(mpmath.gamma(mpf(3) / 4) * sqrt(2 * pi) / mpmath.gamma(mpf(1) / 4))


# -- Delta_n ---------------------------------------------------------------------------


def test_Delta_1_examples():
    v = malmsten_value()
    assert close(delta_general(1), v)
    assert close(delta_table(1), v)
    assert close(delta1_beta_chain(), v)
    assert abs(delta_general(1) - mpf("-0.52088561260197689108")) < 1e-19


def test_Delta_table_examples():
    G, z3, z5 = +catalan, zeta(3), zeta(5)
    L = log(sqrt(2 * pi) * mpmath.gamma(mpf(3) / 4) / mpmath.gamma(mpf(1) / 4))
    expected = {
        2: -euler + log(pi / 4),
        3: -2 * G / pi + pi / 2 * L,
        4: -2 * euler / 3 - 7 * z3 / (3 * pi ** 2) + 2 * log(pi / 4) / 3,
        5: -5 * G / (3 * pi) + pi / 24 - psi(3, mpf(1) / 4) / (192 * pi ** 3) + 3 * pi / 8 * L,
        6: -8 * euler / 15 + 8 * log(pi / 4) / 15 - 7 * z3 / (3 * pi ** 2) - 31 * z5 / (5 * pi ** 4),
    }
    for n, v in expected.items():
        assert close(delta_table(n), v), n
        assert close(delta_general(n), v), n


@pytest.mark.parametrize("n", range(1, 7))
def test_Delta_against_reference_integral(n):
    ref = ref_quad(lambda x: log(x) * sech(x) ** n)
    assert close(delta_general(n), ref, 20)


@pytest.mark.parametrize("a,b", [(2, 3), (mpf("0.5"), 1), (3, mpf("0.25"))])
def test_Delta_scaling(a, b):
    for n in (1, 2, 3, 4):
        ref = ref_quad(lambda x: log(a * x) * sech(b * x) ** n)
        assert close(delta_general(n, a, b), ref, 20)
        if n <= 2:
            assert close(delta_table(n, a, b), ref, 20)
    assert close(delta1_beta_chain(a, b), delta_general(1, a, b))


def test_Delta_2_printed_form_only_agrees_when_a_equals_b():
    assert close(delta_table_printed(2, 3, 3), delta_table(2, 3, 3))
    assert abs(delta_table_printed(2, 2, 3) - delta_table(2, 2, 3)) > mpf("1e-3")


@pytest.mark.parametrize("n", range(3, 9))
def test_Delta_recurrences(n):
    via_lambda, via_chi = delta_recurrence(n)
    assert close(via_lambda, delta_general(n))
    assert close(via_chi, delta_general(n))


def test_Delta_recurrence_examples():
    assert close(delta_recurrence(3)[0], delta_general(1) / 2 - lambda_closed(1) / 2)
    assert close(delta_recurrence(4)[0], 2 * delta_general(2) / 3 - lambda_closed(2) / 3)


def test_Delta_domain_errors():
    with pytest.raises(DomainError):
        delta_general(0)
    with pytest.raises(DomainError):
        delta_general(2, -1, 1)
    with pytest.raises(DomainError):
        delta_table(7)
    with pytest.raises(DomainError):
        delta_recurrence(2)


def test_sech_power_integral():
    for n in range(1, 8):
        assert close(sech_power_integral(n), ref_quad(lambda x: sech(x) ** n), 20)


def test_log_quadratic():
    assert close(malmsten_log_quadratic(0, 1), 2 * malmsten_value())
    for a, b in ((1, pi), (mpf("0.3"), 2), (-2, mpf("0.5"))):
        ref = ref_quad(lambda x: log(x * x + a * a) * sech(b * x))
        assert close(malmsten_log_quadratic(a, b), ref, 20)
    assert close(malmsten_log_quadratic(-2, 1), malmsten_log_quadratic(2, 1))


def test_zeta_limit_quarter():
    limit, closed = zeta_limit_quarter()
    assert close(limit, closed)
    assert abs(limit - mpf("5.12678")) < 1e-5
    ref = 2 * malmsten_value() + pi * (euler + log(4))
    assert close(closed, ref)


# -- chi, lambda, delta ----------------------------------------------------------------


def test_sequence_examples():
    G, z3, p3 = +catalan, zeta(3), psi(3, mpf(1) / 4)
    assert abs(chi_closed(1)) < 1e-20
    assert close(chi_closed(2), -4 * G / pi + 14 * z3 / pi ** 2)
    assert close(chi_closed(3), -2 * G / pi - pi / 2 + p3 / (16 * pi ** 3))
    assert close(lambda_closed(1), 4 * G / pi)
    assert close(lambda_closed(2), 7 * z3 / pi ** 2)
    assert close(delta_seq_closed(2), -14 * z3 / pi ** 2 + 2 * G / pi - pi / 2 + p3 / (16 * pi ** 3))


@pytest.mark.parametrize("n", range(1, 7))
def test_sequences_against_reference_integrals(n):
    lam = ref_quad(lambda x: tanh(x) * sech(x) ** n / x)
    chi = ref_quad(lambda x: (sech(x) - sech(x) ** n) / x ** 2) if n > 1 else mpf(0)
    dlt = ref_quad(lambda x: (1 - sech(x)) * sech(x) ** n / x ** 2)
    assert close(lambda_closed(n), lam, 18)
    assert close(chi_closed(n), chi, 18)
    assert close(delta_seq_closed(n), dlt, 18)


@pytest.mark.parametrize("n", range(1, 7))
def test_tables_match_closed_forms(n):
    assert close(chi_table(n), chi_closed(n))
    assert close(lambda_table(n), lambda_closed(n))
    assert close(delta_seq_table(n), delta_seq_closed(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_parity_forms(n):
    assert close(chi_parity(n), chi_closed(n))
    assert close(lambda_parity(n), lambda_closed(n))


def test_parity_printed_sign_differs_from_n_4():
    for n in (1, 2, 3):
        assert close(chi_parity(n, printed=True), chi_closed(n))
    assert abs(chi_parity(4, printed=True) - chi_closed(4)) > 1
    assert abs(lambda_parity(4, printed=True) - lambda_closed(4)) > mpf("1e-3")


@pytest.mark.parametrize("n", range(1, 8))
def test_delta_direct_and_telescoping(n):
    assert close(delta_seq_direct(n), chi_closed(n + 1) - chi_closed(n))
    assert close(sum((delta_seq_direct(k) for k in range(1, n)), mpf(0)), chi_closed(n))


def test_relation_between_lambda_and_chi():
    # chi_n = n lambda_n - lambda_1
    for n in range(1, 8):
        assert close(chi_closed(n), n * lambda_closed(n) - lambda_closed(1))


def test_stirling_weighted_zeta_sum():
    for n in range(1, 9):
        lhs, rhs = cojer_identity(n)
        assert close(lhs, rhs)
        assert close(rhs, mpf(2) ** (1 - n) * mpmath.gamma(mpf(n) / 2) ** 2)
        assert abs(stirling_zeta_combination(n)) < mpf(10) ** (-(P - 10))
    assert close(cojer_identity(1)[1], pi)
    assert close(cojer_identity(2)[1], mpf(1) / 2)
    assert close(cojer_identity(4)[1], mpf(1) / 8)


def test_hurwitz_sgsp_general():
    lhs, rhs = hurwitz_sgsp_general(2, 2, 1)
    assert close(rhs, 3 * pi / 8)
    assert close(lhs, rhs)
    for m, n, p in ((1, 3, 1), (3, 4, 3), (4, 5, 2)):
        lhs, rhs = hurwitz_sgsp_general(m, n, p)
        assert close(lhs, rhs)


def test_nested_sums():
    assert close(chi_family_nested_sum([1], 2), chi_closed(2))
    assert close(chi_family_nested_sum([1], 4), sum(chi_closed(k) for k in range(1, 5)))
    expected = sum(chi_closed(k1) for k2 in range(1, 4) for k1 in range(1, k2 + 1))
    assert close(chi_family_nested_sum([1, 1], 3), expected)


# -- tanh and arctan integrals ---------------------------------------------------------

GRID = [(a, y) for a in (mpf(1) / 2, mpf(1), pi) for y in (mpf(1) / 4, mpf(1) / 2, mpf(1), pi)]


def test_kappa_examples():
    assert abs(kappa_family("kappa", mpf("1e-25"))) < 1e-20
    assert close(kappa_family("kappa2", mpf(1) / 2), +euler)
    assert close(kappa_family("kappa1", 1), -euler + log(2))
    with pytest.raises(DomainError):
        kappa_family("kappa1", 0)
    with pytest.raises(DomainError):
        kappa_family("kappa2", 0)
    assert kappa_family("kappa", 0) == 0


@pytest.mark.parametrize("y", [mpf(1) / 4, mpf(1), 3])
def test_kappa_against_reference(y):
    k = ref_quad(lambda t: tanh(pi * t / 2) * (1 / t - t / (t * t + y * y)))
    k1 = ref_quad(lambda t: t / (t * t + y * y) * (1 - tanh(pi * t / 2)))
    assert close(kappa_family("kappa", y), k, 15)
    assert close(kappa_family("kappa1", y), k1, 15)
    assert close(kappa_family("kappa", -y), kappa_family("kappa", y))


def test_tanh_rational_examples():
    assert close(tanh_rational_general("eq34", pi / 4, 1), +euler)
    assert close(tanh_rational_general("eq32", pi / 2, 1), -euler + log(2))
    assert tanh_rational_general("eq31", 1, 0) == 0


@pytest.mark.parametrize("a,y", GRID[::3])
def test_tanh_rational_against_reference(a, y):
    f31 = ref_quad(lambda t: tanh(a * t) * (1 / t - t / (t * t + y * y)))
    f32 = ref_quad(lambda t: t / (t * t + y * y) * (1 - tanh(a * t)))
    assert close(tanh_rational_general("eq31", a, y), f31, 15)
    assert close(tanh_rational_general("eq32", a, y), f32, 15)


def test_arctan_examples():
    assert close(arctan_tanh_integrals("younko", 1, pi), 1 - log(2))
    assert close(arctan_tanh_integrals("youpart", 1, pi), pi * (1 - log(2)))
    assert close(ln2_from_integral(arctan_tanh_integrals("younko", 1, pi)), log(2))
    assert close(pi_from_integral(arctan_tanh_integrals("youpart", 1, pi)), +pi)


@pytest.mark.parametrize("a,y", GRID[1::3])
def test_arctan_against_reference(a, y):
    yp = ref_quad(lambda t: (1 - tanh(a * t)) * atan(y / t))
    yk = ref_quad(lambda t: (a * t - log(cosh(a * t))) / (t * t + y * y))
    assert close(arctan_tanh_integrals("youpart", a, y), yp, 15)
    assert close(arctan_tanh_integrals("younko", a, y), yk, 15)


def test_gamma_representation_examples():
    assert close(gamma_representation(1, 1, pi), euler + log(2))
    assert close(gamma_representation(2, 1, pi), euler + log(2))
    assert close(gamma_representation(5, pi, mpf(1) / 4), euler - 1)


@pytest.mark.parametrize("rep", range(1, 6))
def test_gamma_from_representation_round_trip(rep):
    for a, y in GRID[::5]:
        assert close(gamma_from_representation(rep, a, y, gamma_representation(rep, a, y)), +euler)


def test_gamma_representation_5_against_reference():
    a, y = pi, mpf(1) / 4
    ref = ref_quad(lambda t: tanh(a * t) / t - atan(y / t) / y)
    assert close(gamma_representation(5, a, y), ref, 15)


def test_sech2_log_examples():
    assert close(sech2_log_integral(1, 0), 2 * (-euler + log(pi / 4)))
    assert close(sech2_log_integral(pi, 1), 2 / pi * (2 - euler - 2 * log(2)))
    ref = ref_quad(lambda t: log(t * t + 1) * sech(2 * t) ** 2)
    assert close(sech2_log_integral(2, 1), ref, 15)


# -- double-integral reductions --------------------------------------------------------


def test_delta_seq_reduction_n1():
    r = delta_seq_reduction_2d(1)
    assert r.converged
    assert abs(r.value - delta_seq_closed(1)) < 1e-6


def test_Delta_reduction_n4():
    assert abs(delta_n_reduction_2d(4) - delta_general(4)) < 1e-6
    assert abs(delta_n_reduction_2d(4, printed=True) - delta_general(4)) > 1e-3


def test_reduction_domain():
    with pytest.raises(DomainError):
        delta_n_reduction_2d(3)
