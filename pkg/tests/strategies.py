"""Shared data generators: hypothesis strategies for algebra values plus
seeded random.Random helpers for the counted bulk loops."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from grasskit.algebra import Element, basis_monomials
from grasskit.identities import FreePolynomial


def scalars() -> st.SearchStrategy[Fraction]:
    return st.fractions(min_value=-10, max_value=10, max_denominator=12)


def monomials(n: int = 6) -> st.SearchStrategy[tuple[int, ...]]:
    return st.sampled_from(basis_monomials(n))


def elements(n: int = 6, max_terms: int = 6) -> st.SearchStrategy[Element]:
    return st.dictionaries(monomials(n), scalars(), max_size=max_terms).map(Element)


def homogeneous_pairs(
    n: int = 6, max_terms: int = 4
) -> st.SearchStrategy[tuple[int, Element]]:
    """(parity, element) pairs; the element may be zero, which belongs to
    both graded pieces, so keep the drawn parity rather than re-deriving it."""

    def build(par: int) -> st.SearchStrategy[tuple[int, Element]]:
        pool = [m for m in basis_monomials(n) if len(m) % 2 == par]
        return st.dictionaries(
            st.sampled_from(pool), scalars(), max_size=max_terms
        ).map(lambda d: (par, Element(d)))

    return st.integers(0, 1).flatmap(build)


def words(max_index: int = 9, max_len: int = 8) -> st.SearchStrategy[tuple[int, ...]]:
    return st.lists(st.integers(1, max_index), max_size=max_len).map(tuple)


def free_words(k: int = 3, max_len: int = 4) -> st.SearchStrategy[tuple[int, ...]]:
    return st.lists(st.integers(1, k), max_size=max_len).map(tuple)


def free_polynomials(
    k: int = 3, max_terms: int = 4, max_len: int = 4
) -> st.SearchStrategy[FreePolynomial]:
    return st.dictionaries(
        free_words(k, max_len), scalars(), max_size=max_terms
    ).map(FreePolynomial)


# -- seeded helpers for the counted acceptance loops -------------------------


def rand_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_element(
    rng: random.Random,
    n: int,
    max_terms: int | None = None,
    density: float = 0.6,
) -> Element:
    pool = basis_monomials(n)
    if max_terms is not None and len(pool) > max_terms:
        pool = rng.sample(pool, max_terms)
    return Element({m: rand_scalar(rng) for m in pool if rng.random() < density})


def rand_homogeneous(
    rng: random.Random, n: int, par: int, max_terms: int | None = None
) -> Element:
    pool = [m for m in basis_monomials(n) if len(m) % 2 == par]
    if max_terms is not None and len(pool) > max_terms:
        pool = rng.sample(pool, max_terms)
    return Element({m: rand_scalar(rng) for m in pool if rng.random() < 0.6})


def rand_word_no_repeats(
    rng: random.Random, max_index: int, length: int
) -> tuple[int, ...]:
    return tuple(rng.sample(range(1, max_index + 1), length))
