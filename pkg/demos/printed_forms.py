"""Printed variants of a few formulas against the quadrature oracle.

Each row shows the corrected closed form, the printed variant and the
oracle.  Only the corrected column agrees with the integral.
"""

from mpmath import nstr

from malmsten import precision
from malmsten import closedform as cf
from malmsten import specfun as sf
from malmsten.quadrature import oracle_sequence

P = 30

with precision(P):
    rows = [
        ("Delta_2(2,3)", cf.delta_table(2, 2, 3), cf.delta_table_printed(2, 2, 3),
         oracle_sequence("Delta", 2, "hyperbolic", 2, 3, tol="1e-20").value),
        ("beta(-1/2) by integral", sf.beta_via_integral("-1/2"), sf.beta_via_integral("-1/2", printed_exponent=True),
         sf.dirichlet_beta("-1/2")),
        ("chi_4", cf.chi_parity(4), cf.chi_parity(4, printed=True), oracle_sequence("chi", 4, tol="1e-20").value),
        ("lambda_4", cf.lambda_parity(4), cf.lambda_parity(4, printed=True),
         oracle_sequence("lambda", 4, tol="1e-20").value),
        ("beta'(0)", sf.beta_deriv_zero_closed_form()[1], sf.beta_deriv_zero_closed_form(printed=True)[1],
         sf.beta_deriv_zero_reflection()[0]),
    ]
    print(f"{'quantity':<24} {'corrected':<24} {'printed':<24} {'reference':<24}")
    for name, good, bad, ref in rows:
        print(f"{name:<24} {nstr(good, 18):<24} {nstr(bad, 18):<24} {nstr(ref, 18):<24}")
