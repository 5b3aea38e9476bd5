"""High-precision evaluation of Malmsten-type logarithmic integrals.

Subpackages
-----------
exactcomb
    Exact rational arithmetic for Bernoulli and signed generalized Stirling
    polynomials.
specfun
    Gamma, polygamma, Hurwitz zeta and its ``s``-derivative, Lerch,
    Dirichlet beta and polylogarithm on the unit circle.
closedform
    Closed forms for the integral sequences and the tanh/arctan family.
quadrature
    Double-exponential quadrature and the oracle integrand catalog.
verify
    Registry of identities checked closed form against oracle.
"""

from .context import DEFAULT_PRECISION, current_precision, precise, precision, tolerance
from .errors import ConvergenceError, DomainError, MalmstenError, PoleError, PrecisionError

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRECISION",
    "ConvergenceError",
    "DomainError",
    "MalmstenError",
    "PoleError",
    "PrecisionError",
    "current_precision",
    "precise",
    "precision",
    "tolerance",
]
