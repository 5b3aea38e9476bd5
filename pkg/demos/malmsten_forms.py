"""Delta_1 = int_0^inf ln x sech x dx by its closed forms and five integral forms."""

from mpmath import nstr

from malmsten import precision
from malmsten.closedform import delta1_beta_chain, delta_general, delta_table
from malmsten.quadrature import FORMS, oracle_sequence

P = 40

with precision(P):
    exact = delta_general(1)
    print(f"{'Hurwitz zeta sum':<22} {nstr(exact, P)}")
    print(f"{'Gamma-function table':<22} {nstr(delta_table(1), P)}")
    print(f"{'beta-prime chain':<22} {nstr(delta1_beta_chain(), P)}")
    print()
    print(f"{'form':<12} {'quadrature':<44} {'|diff|':<10} {'evals':>6}")
    for form in FORMS:
        r = oracle_sequence("Delta", 1, form, tol="1e-35")
        print(f"{form:<12} {nstr(r.value, P):<44} {nstr(abs(r.value - exact), 3):<10} {r.evaluations:>6}")
