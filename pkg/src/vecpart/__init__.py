"""Restricted and vector partition functions via Sylvester waves.

The counts are exact quasipolynomials assembled from Bernoulli polynomials of
higher order (scalar and vector) and prime radical circulators.
"""

from .numeric import GaussianRational, euler_phi, factorize, moebius, prime_circulator, vector_circulator
from .scalar import brute_count, partition_count, partition_quasipoly
from .series import MultiPoly
from .vector import MatrixSpec, brute_vector_count, decompose, evaluate, real_part

__version__ = "0.1.0"
