"""fatlocus: exact certificates and determinant loci for linear systems with a
fat general point.

Given a point set Z in P^N and integers d >= m >= 1 with
binom(d+N, N) = binom(m+N-1, N) + |Z|, the evaluation-and-derivative matrix of
the degree-d monomial vector is square and its determinant F, as a function of
the multiple point B, cuts out the locus where a degree-d hypersurface through
Z with an m-fold point at B exists.  The library decides F == 0 either by
combinatorial certificates driven by the weak combinatorics of Z (how many
hyperplanes contain how many points) or by random evaluation over large prime
fields, and extracts explicit hypersurface and locus equations in small cases.
"""

__version__ = "0.1.0"

from .fields import (
    DEFAULT_PRIME,
    CounterRng,
    FieldSpec,
    PrimeField,
    RationalField,
    find_prime_with_unity,
    is_probable_prime,
    primitive_root_of_unity,
)
from .projective import PointConfiguration

__all__ = [
    "DEFAULT_PRIME",
    "CounterRng",
    "FieldSpec",
    "PrimeField",
    "RationalField",
    "PointConfiguration",
    "find_prime_with_unity",
    "is_probable_prime",
    "primitive_root_of_unity",
    "__version__",
]
