"""Signed generalized Stirling polynomials P_k(m, x) for small m, and a spot check
of their generating function (j+1)_m = sum_k (-1)^k P_k(m,x) (j+x)^(m-k)."""

from fractions import Fraction

from malmsten.exactcomb import generating_function_residual, sgsp_poly

for m in range(1, 5):
    for k in range(m + 1):
        print(f"P_{k}({m}, x) = {sgsp_poly(k, m).format('x')}")
    print()

x = Fraction(7, 3)
residuals = {generating_function_residual(m, j, x) for m in range(1, 12) for j in range(8)}
print(f"generating-function residuals at x = {x}: {sorted(residuals)}")
