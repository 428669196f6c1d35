"""Exact symbolic kernel for finitely generated Grassmann algebras.

Everything is computed over exact rationals: canonical normal forms
modulo anticommutation, the even/odd grading, Berezin derivatives and
integrals, nilpotency indices, and polynomial-identity checking for the
free algebra mapped into the Grassmann algebra.
"""

from .algebra import (
    Element,
    Monomial,
    SignedMonomial,
    basis_monomials,
    grlex_key,
    make_element,
    mul_monomials,
    normalize_word,
)
from .calculus import (
    NilReport,
    berezin_integral,
    body,
    left_derivative,
    nil_index,
    soul,
)
from .grading import (
    Parity,
    anticommutator,
    commutator,
    even_part,
    is_central,
    is_homogeneous,
    odd_part,
    parity,
)
from .identities import (
    DOMAINS,
    EXHAUSTIVE,
    RANDOMIZED,
    FreePolynomial,
    IdentityVerdict,
    evaluate,
    in_ideal,
    is_identity,
    is_multilinear,
    project,
    random_element,
)

__version__ = "0.1.0"

__all__ = [
    "Element",
    "Monomial",
    "SignedMonomial",
    "basis_monomials",
    "grlex_key",
    "make_element",
    "mul_monomials",
    "normalize_word",
    "NilReport",
    "berezin_integral",
    "body",
    "left_derivative",
    "nil_index",
    "soul",
    "Parity",
    "anticommutator",
    "commutator",
    "even_part",
    "is_central",
    "is_homogeneous",
    "odd_part",
    "parity",
    "DOMAINS",
    "EXHAUSTIVE",
    "RANDOMIZED",
    "FreePolynomial",
    "IdentityVerdict",
    "evaluate",
    "in_ideal",
    "is_identity",
    "is_multilinear",
    "project",
    "random_element",
    "__version__",
]
