"""Exact Smith normal forms of integer matrices f(C_g) in companion rings.

The general engine lives in :mod:`companion_smith.smith`; theorem-backed
fast paths (gcd reduction, cyclotomic and torus-knot closed forms,
factorization splittings) live in :mod:`companion_smith.structured`, and
Brieskorn-manifold homology in :mod:`companion_smith.topology`.
"""

from .errors import (
    AllZeroMatrix,
    CompanionSmithError,
    DivisionByZeroPolynomial,
    InvalidDivisorChain,
    NonMonicDivisor,
    NotCoprime,
    NotSquare,
    OutOfRange,
    ParseError,
    ResultantsNotCoprime,
    TooLarge,
)
from .exactmat import (
    CompanionRingElement,
    IntMatrix,
    circulant,
    companion,
    determinant,
    is_unimodular,
    lower_toeplitz,
    poly_of_companion,
    skew_circulant,
)
from .intpoly import (
    IntPolynomial,
    compose_power,
    content,
    cyclotomic,
    divmod_monic,
    gcd_with_monic,
    parse_poly,
    resultant,
)
from .smith import (
    SmithDecomposition,
    determinantal_divisors,
    invariant_factors_from_divisors,
    is_divisor_chain,
    smith_form,
)
from .structured import (
    alexander_polynomial,
    cyclotomic_companion_smith,
    first_determinantal_divisor,
    last_nonzero_determinantal_divisor,
    similarity_witness,
    smith_direct_sum_split,
    smith_product_split,
    smith_via_theorem_c,
    theorem_c_reduce,
    torus_circulant_smith,
)
from .topology import (
    AbelianGroup,
    CyclicPresentationData,
    abelianization,
    brieskorn_homology,
    representer_circulant,
)

__version__ = "0.1.0"
