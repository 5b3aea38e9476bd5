from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from malmsten.exactcomb import (
    RationalPoly,
    bell_complete,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_polynomial,
    double_sum_identity,
    functional_equation_rhs,
    functional_equation_series,
    generating_function_residual,
    gsp_eval,
    gsp_poly,
    harmonic,
    odd_product_identity,
    sgsp_eval,
    sgsp_eval_bell,
    sgsp_poly,
    stirling_cycle,
    stirling_via_bell,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=20)


# -- independent oracles -------------------------------------------------------


def cycles(perm):
    seen, count = set(), 0
    for i in range(len(perm)):
        if i not in seen:
            count += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
    return count


def brute_stirling(n, k):
    return sum(cycles(p) == k for p in permutations(range(n))) if n else int(k == 0)


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield [part] + rest


def brute_bell(n, xs):
    # sum over set partitions grouped by block sizes: n!/prod(m_j! j!^m_j) prod x_j^m_j
    total = Fraction(0)
    for p in partitions(n):
        coeff = Fraction(factorial(n))
        term = Fraction(1)
        for j in set(p):
            m = p.count(j)
            coeff /= factorial(m) * factorial(j) ** m
            term *= Fraction(xs[j - 1]) ** m
        total += coeff * term
    return total


def poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def rising(a, m):
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


# -- Stirling cycle numbers, harmonic numbers, Bell polynomials ----------------


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (4, 2, 11), (5, 3, 35), (3, 0, 0), (2, 5, 0)])
def test_stirling_cycle_examples(n, k, expected):
    assert stirling_cycle(n, k) == expected


@pytest.mark.parametrize("n", range(7))
def test_stirling_cycle_matches_permutation_count(n):
    assert [stirling_cycle(n, k) for k in range(n + 1)] == [brute_stirling(n, k) for k in range(n + 1)]


def test_stirling_row_sums_to_factorial():
    for n in range(15):
        assert sum(stirling_cycle(n, k) for k in range(n + 1)) == factorial(n)


def test_stirling_cycle_rejects_negative():
    with pytest.raises(ValueError):
        stirling_cycle(-1, 0)


@pytest.mark.parametrize("n,m,expected", [(0, 3, 0), (3, 1, Fraction(11, 6)), (2, 2, Fraction(5, 4))])
def test_harmonic_examples(n, m, expected):
    assert harmonic(n, m) == expected


@pytest.mark.parametrize(
    "n,xs,expected", [(0, [], 1), (3, [1, 1, 1], 5), (2, [1, 1], 2), (4, [1, 1, 1, 1], 15)]
)
def test_bell_complete_examples(n, xs, expected):
    assert bell_complete(n, xs) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.lists(rationals, min_size=7, max_size=7))
def test_bell_complete_matches_partition_sum(n, xs):
    assert bell_complete(n, xs) == brute_bell(n, xs)


@pytest.mark.parametrize("n,r,expected", [(0, 0, 1), (3, 1, 11), (4, 2, 35)])
def test_stirling_via_bell_examples(n, r, expected):
    assert stirling_via_bell(n, r) == expected


def test_stirling_via_bell_equals_cycle_numbers():
    for n in range(16):
        for r in range(n + 1):
            assert stirling_via_bell(n, r) == stirling_cycle(n + 1, r + 1)


# -- signed generalized Stirling polynomials -----------------------------------


def test_sgsp_poly_examples():
    assert sgsp_poly(0, 9) == RationalPoly([1])
    assert sgsp_poly(1, 1) == RationalPoly([-1, 1])
    assert sgsp_poly(2, 2) == RationalPoly([2, -3, 1])


@pytest.mark.parametrize("k,m,x,expected", [(0, 5, Fraction(7, 3), 1), (1, 2, Fraction(3, 2), 0), (2, 2, 0, 2)])
def test_sgsp_eval_bell_examples(k, m, x, expected):
    assert sgsp_eval_bell(k, m, x) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10), rationals)
def test_sgsp_satisfies_generating_function(m, j, x):
    # (j+1)_m = sum_k (-1)^k P_k(m,x) (j+x)^(m-k), checked against a direct product
    rhs = sum((-1) ** k * sgsp_eval(k, m, x) * (j + x) ** (m - k) for k in range(m + 1))
    assert rising(Fraction(j + 1), m) == rhs
    assert generating_function_residual(m, j, x) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), rationals)
def test_sgsp_bell_and_cycle_forms_agree(m, x):
    for k in range(m + 1):
        assert sgsp_eval_bell(k, m, x) == sgsp_eval(k, m, x)


def test_sgsp_degree_and_leading_coefficient():
    for m in range(1, 10):
        for k in range(m + 1):
            p = sgsp_poly(k, m)
            assert p.degree == k
            assert p.coeff(k) == comb(m, k)


def test_odd_index_values_vanish_at_half_integer():
    for n in range(2, 31):
        for r in range(1, n // 2 + 1):
            assert sgsp_eval(2 * r - 1, n - 1, Fraction(n, 2)) == 0


def test_sgsp_rejects_k_above_m():
    with pytest.raises(ValueError):
        sgsp_poly(4, 3)


# -- generalized Stirling polynomials ------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_gsp_matches_product_expansion(n):
    z = Fraction(3, 7)
    prod = [Fraction(1)]
    for k in range(1, n):
        prod = poly_mul(prod, [k - z, Fraction(1)])  # (k + x - z)
    assert [gsp_eval(k, n, z) for k in range(n)] == prod


def test_gsp_examples():
    assert gsp_eval(0, 2, 1) == 0
    assert gsp_eval(1, 3, Fraction(1, 2)) == 2  # (1+x-1/2)(2+x-1/2): x coefficient 1/2 + 3/2
    assert gsp_poly(0, 2).format("z", ascending=True) == "1 - z"
    for n in range(1, 8):
        assert gsp_eval(n - 1, n, Fraction(5, 3)) == 1


def test_gsp_and_sgsp_are_related_by_index_flip():
    for m in range(1, 12):
        x = Fraction(m, 3)
        for k in range(m + 1):
            assert gsp_eval(k, m + 1, x) == (-1) ** (m - k) * sgsp_eval(m - k, m, x)


def test_gsp_rejects_k_at_least_n():
    with pytest.raises(ValueError):
        gsp_poly(2, 2)


# -- Bernoulli numbers and polynomials -----------------------------------------


def test_bernoulli_examples():
    assert bernoulli_poly(1, Fraction(1, 2)) == 0
    assert bernoulli_poly(2, 0) == Fraction(1, 6)
    assert bernoulli_poly(3, Fraction(1, 4)) == Fraction(3, 64)
    assert [bernoulli_number(n) for n in range(7)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0,
                                                       Fraction(1, 42)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), rationals)
def test_bernoulli_difference_equation(n, x):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == n * x ** (n - 1)
    assert bernoulli_polynomial(n)(x) == bernoulli_poly(n, x)


# -- identities -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_functional_equation_at_integers(n):
    for x in range(n + 2, n + 12):
        assert sgsp_eval(n, n + 1, x) == functional_equation_rhs(n, x)


def test_functional_equation_rejects_poles():
    with pytest.raises(ValueError):
        functional_equation_rhs(3, 2)


def test_functional_equation_series_coefficients():
    # sum_j s(n+2, j+2)(j+1) x^j with signed Stirling numbers of the first kind
    for n in range(8):
        p = functional_equation_series(n)
        for j in range(n + 1):
            assert p.coeff(j) == (-1) ** (n - j) * stirling_cycle(n + 2, j + 2) * (j + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_central_value(n):
    assert sgsp_eval(4 * n, 4 * n + 1, 2 * n + 1) == factorial(2 * n) ** 2


@pytest.mark.parametrize("n", range(1, 4))
def test_double_sum_vanishes(n):
    assert double_sum_identity(n) == 0


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_odd_product_identity(n):
    lhs, rhs = odd_product_identity(n)
    assert lhs == rhs


def test_odd_product_rejects_even():
    with pytest.raises(ValueError):
        odd_product_identity(4)


# -- RationalPoly ---------------------------------------------------------------


def test_rational_poly_formatting():
    assert sgsp_poly(2, 2).format("x") == "x^2 - 3x + 2"
    assert RationalPoly([Fraction(1, 2), 0, -1]).format("x") == "-x^2 + 1/2"
    assert RationalPoly([]).format("x") == "0"


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5), rationals)
def test_rational_poly_arithmetic_is_pointwise(p, q, x):
    P, Q = RationalPoly(p), RationalPoly(q)
    assert (P * Q)(x) == P(x) * Q(x)
    assert (P + Q)(x) == P(x) + Q(x)
    assert (P - Q)(x) == P(x) - Q(x)
