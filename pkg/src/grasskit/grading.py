"""Z2-grading of the Grassmann algebra.

A monomial's parity is the parity of its degree.  Splitting every element
into its even and odd parts makes the algebra a superalgebra: parities add
under multiplication, the even part is a commutative subalgebra lying in
the center, and odd elements anticommute with each other.
"""

from __future__ import annotations

from enum import IntEnum

from .algebra import Element, Monomial


class Parity(IntEnum):
    EVEN = 0
    ODD = 1


def parity(m: Monomial) -> Parity:
    """Degree of the monomial mod 2."""
    return Parity(len(m) % 2)


def even_part(p: Element) -> Element:
    """Sum of the terms of even degree (the unit term included)."""
    return Element._from_dict(
        {m: c for m, c in p.items() if len(m) % 2 == 0}
    )


def odd_part(p: Element) -> Element:
    """Sum of the terms of odd degree."""
    return Element._from_dict(
        {m: c for m, c in p.items() if len(m) % 2 == 1}
    )


def is_homogeneous(p: Element) -> Parity | None:
    """Parity of p if all terms share one, else None.

    Zero lives in every graded piece; it reports EVEN so that the result
    is total on homogeneous inputs.
    """
    parities = {len(m) % 2 for m, _ in p.items()}
    if len(parities) > 1:
        return None
    if not parities:
        return Parity.EVEN
    return Parity(parities.pop())


def commutator(p: Element, q: Element) -> Element:
    """[p, q] = pq - qp."""
    return p * q - q * p


def anticommutator(p: Element, q: Element) -> Element:
    """{p, q} = pq + qp."""
    return p * q + q * p


def is_central(p: Element, n: int) -> bool:
    """Whether p commutes with the whole algebra on n generators.

    Generators generate, and q -> [p, q] is linear in q and obeys a
    product rule, so vanishing on x1..xn forces vanishing everywhere.
    """
    if n < 0:
        raise ValueError(f"generator count must be >= 0, got {n}")
    return all(not commutator(p, Element.generator(i)) for i in range(1, n + 1))
