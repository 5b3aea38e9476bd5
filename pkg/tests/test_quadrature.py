import mpmath
import pytest
from mpmath import mpf, pi, sech, log, atan, exp

from malmsten.closedform import (
    chi_closed,
    delta_general,
    delta_seq_closed,
    lambda_closed,
    sech_power_integral,
)
from malmsten.context import precision
from malmsten.errors import ConvergenceError, DomainError
from malmsten.quadrature import (
    FORMS,
    SEQUENCES,
    exp_sinh,
    integrate,
    integrate_2d_unit_square,
    list_integrands,
    named_spec,
    oracle_named,
    oracle_sequence,
    sequence_spec,
    tanh_sinh,
)
from malmsten.specfun import catalan, constant, gamma

P = 30
TOL = mpf("1e-12")


@pytest.fixture(autouse=True)
def ctx():
    with precision(P):
        yield


def rel(x, y):
    return abs(x - y) / max(1, abs(y))


# -- raw rules -----------------------------------------------------------------


def test_tanh_sinh_polynomial_and_endpoint_singularity():
    r = tanh_sinh(lambda x: x ** 3, 0, 2, TOL)
    assert r.converged and rel(r.value, 4) < 1e-25
    # int_0^1 ln x / sqrt(x) = -4, singular at 0
    r = tanh_sinh(lambda x: log(x) / mpmath.sqrt(x), 0, 1, TOL)
    assert r.converged and rel(r.value, -4) < 1e-12


def test_tanh_sinh_distances_are_accurate():
    # int_0^1 1/sqrt(1-x) = 2 needs 1 - x without cancellation
    r = tanh_sinh(lambda x, dl, dr: 1 / mpmath.sqrt(dr), 0, 1, TOL, with_distances=True)
    assert r.converged and rel(r.value, 2) < 1e-12


def test_exp_sinh_sech_integral():
    # antiderivative 2 arctan(e^x)
    r = exp_sinh(lambda x: sech(x), TOL)
    assert r.converged and rel(r.value, pi / 2) < 1e-25
    assert r.error_estimate >= 0


def test_exp_sinh_slow_algebraic_decay():
    r = exp_sinh(lambda x: 1 / (1 + x * x), TOL)
    assert r.converged and rel(r.value, pi / 2) < 1e-12


def test_2d_unit_square_trivial():
    r = integrate_2d_unit_square(lambda x, y: mpf(1), mpf("1e-8"))
    assert r.converged and rel(r.value, 1) < 1e-20
    r = integrate_2d_unit_square(lambda x, y: x * y, mpf("1e-8"))
    assert r.converged and rel(r.value, mpf(1) / 4) < 1e-20


def test_non_convergence_is_reported_not_hidden():
    r = tanh_sinh(lambda x: mpmath.sin(1 / x) / x, 0, 1, mpf("1e-25"), max_level=4)
    assert not r.converged
    assert mpmath.isfinite(r.value)
    with pytest.raises(ConvergenceError) as info:
        r.require()
    assert info.value.partial is r


def test_converged_implies_estimate_within_tolerance():
    for name, n in (("Delta", 2), ("chi", 3), ("lambda", 4)):
        r = oracle_sequence(name, n, tol=TOL)
        assert r.converged and r.error_estimate <= TOL


def test_tolerance_floor_enforced():
    with pytest.raises(DomainError):
        oracle_sequence("Delta", 1, tol=mpf(10) ** (-P))


# -- catalog examples ------------------------------------------------------------


def test_named_examples():
    assert rel(oracle_named("sech_power", {"n": 3}, tol=TOL).require().value, sech_power_integral(3)) < 1e-12
    v = oracle_named("rational_power", {"n": 4}, tol=TOL).require().value
    assert rel(v, gamma(2) ** 2 / (4 * 6)) < 1e-12
    v = oracle_named("cosine_sech", {"tau": 1}, tol=TOL).require().value
    assert rel(v, pi / 2 * sech(pi / 2)) < 1e-12
    v = oracle_named("valean_2b", {"y": 1}, tol=TOL).require().value
    assert rel(v, 2 * log(2)) < 1e-12
    v = oracle_named("log_quadratic_sech", {"a": 0, "b": 1}, tol=TOL).require().value
    assert rel(v, 2 * delta_general(1)) < 1e-12
    v = oracle_named("kappa2", {"y": mpf(1) / 2}, tol=TOL).require().value
    assert rel(v, constant("euler_gamma")) < 1e-12


def test_sequence_examples():
    assert abs(oracle_sequence("Delta", 1, tol=TOL).value - mpf("-0.5208856126019768910801877")) < 1e-20
    assert rel(oracle_sequence("lambda", 1, tol=TOL).value, 4 * catalan() / pi) < 1e-12
    chi2 = -4 * catalan() / pi + 14 * constant("zeta3") / pi ** 2
    assert rel(oracle_sequence("chi", 2, tol=TOL).value, chi2) < 1e-12
    assert abs(oracle_sequence("chi", 1, tol=TOL).value) < 1e-20


def test_unknown_names_rejected():
    with pytest.raises(DomainError):
        oracle_named("no_such_integral", {})
    with pytest.raises(DomainError):
        oracle_named("kappa", {"y": 1, "z": 2})
    with pytest.raises(DomainError):
        sequence_spec("Gamma", 1, "hyperbolic")
    with pytest.raises(DomainError):
        sequence_spec("chi", 1, "polar")
    with pytest.raises(DomainError):
        sequence_spec("chi", 0, "hyperbolic")


def test_every_catalog_entry_documents_its_profile():
    names = [row[0] for row in list_integrands()]
    assert names[:4] == ["Delta", "lambda", "delta", "chi"]
    for name in SEQUENCES:
        for form in FORMS:
            assert sequence_spec(name, 2, form).profile
    defaults = {"n": 2, "a": 1, "b": 1, "y": 1, "tau": 1}
    for name, _formula, keys in list_integrands()[4:]:
        assert named_spec(name, {k: defaults[k] for k in keys}).profile


# -- form equivalence -----------------------------------------------------------------

CLOSED = {"Delta": delta_general, "lambda": lambda_closed, "delta": delta_seq_closed, "chi": chi_closed}


@pytest.mark.parametrize("name", SEQUENCES)
@pytest.mark.parametrize("n", range(1, 5))
def test_all_forms_agree(name, n):
    values = {form: oracle_sequence(name, n, form, tol=TOL).require().value for form in FORMS}
    ref = CLOSED[name](n)
    for form, v in values.items():
        assert abs(v - ref) <= 10 * TOL * max(1, abs(ref)), form
    for f1 in FORMS:
        for f2 in FORMS:
            assert abs(values[f1] - values[f2]) <= 10 * TOL


@pytest.mark.parametrize("a,b", [(2, 1), (1, 3), (mpf("0.5"), mpf("1.5"))])
def test_Delta_forms_with_scaling(a, b):
    ref = delta_general(3, a, b)
    for form in FORMS:
        assert rel(oracle_sequence("Delta", 3, form, a, b, tol=TOL).require().value, ref) < 10 * TOL


def test_error_estimate_honesty():
    """Tightening tol moves the value by no more than the looser estimate."""
    cases = [(lambda t: oracle_sequence("Delta", 2, "lnln01", tol=t)),
             (lambda t: oracle_sequence("chi", 3, "arctan", tol=t)),
             (lambda t: oracle_sequence("lambda", 2, "lnln1inf", tol=t)),
             (lambda t: oracle_named("youpart", {"a": 1, "y": mpf(1) / 4}, tol=t)),
             (lambda t: oracle_named("gamma_rep_2", {"a": 1, "y": pi}, tol=t))]
    for get in cases:
        for t in (mpf("1e-8"), mpf("1e-12"), mpf("1e-16")):
            loose, tight = get(t), get(t / 2)
            assert abs(tight.value - loose.value) <= loose.error_estimate


def test_deterministic():
    r1 = oracle_sequence("delta", 3, "reciprocal", tol=TOL)
    r2 = oracle_sequence("delta", 3, "reciprocal", tol=TOL)
    assert r1 == r2


def test_integrate_accepts_spec():
    spec = sequence_spec("lambda", 2, "arctan")
    assert rel(integrate(spec, TOL).value, lambda_closed(2)) < 1e-11


def test_higher_precision_tightens():
    with precision(60):
        r = oracle_sequence("Delta", 1, "lnln1inf", tol=mpf("1e-50"))
        ref = pi * log(mpmath.gamma(mpf(3) / 4) * mpmath.sqrt(2 * pi) / mpmath.gamma(mpf(1) / 4))
        assert r.converged and abs(r.value - ref) < mpf("1e-50")
