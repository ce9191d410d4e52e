"""Logarithmic derivations, CSM classes and the c_SM = c(Der(-log D)) check for divisors in P^n."""

__version__ = "0.1.0"

from .chow import ChowClass
from .errors import Inconclusive, LogdivError, NotReducedError, PolySyntaxError, ResourceLimitExceeded
from .groebner import Ideal, groebner_basis, ideal_membership, quotient_dimension, use_order
from .logderiv import DivisorSpec, exponents
from .poly import Poly, parse_poly
from .verify import main_theorem_check
