"""Free noncommutative polynomials and polynomial-identity checking.

Indeterminates y1, y2, ... generate a free associative algebra: words
multiply by concatenation and no relations hold, so y1*y2 and y2*y1 are
distinct.  A substitution (a map from indeterminate indices to Grassmann
elements) extends uniquely to an algebra homomorphism, realized here by
``evaluate``.

A free polynomial is an identity of the algebra on n generators when
every substitution kills it.  For multilinear polynomials that infinite
quantifier collapses to a finite one: evaluation is linear in each slot,
every element is a rational combination of basis monomials, so vanishing
on all tuples of basis monomials forces vanishing everywhere.  That case
is decided exactly.  Everything else gets seeded randomized testing, and
a positive verdict then means only "no counterexample found".

``project`` reinterprets the free indeterminates as the anticommuting
generators themselves: the quotient map onto the Grassmann algebra.  Its
kernel is the two-sided ideal generated by the anticommutators, which is
what ``in_ideal`` tests membership of.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .algebra import (
    Element,
    Monomial,
    ScalarLike,
    _ZERO,
    _as_scalar,
    basis_monomials,
    grlex_key,
    normalize_word,
)

FreeWord = tuple[int, ...]

EXHAUSTIVE = "exhaustive-multilinear"
RANDOMIZED = "randomized"
DOMAINS = ("all", "even", "odd")

_COEFF_POOL = (-2, -1, 1, 2)


class FreePolynomial:
    """Sparse free polynomial: map from words to nonzero rationals.

    Immutable.  Equality is term-map equality; there is nothing to
    normalize beyond dropping zero coefficients, since the free algebra
    has no relations.
    """

    __slots__ = ("_terms",)

    _terms: dict[FreeWord, Fraction]

    def __init__(
        self,
        terms: Mapping[Sequence[int], ScalarLike]
        | Iterable[tuple[Sequence[int], ScalarLike]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[FreeWord, Fraction] = {}
        for key, value in items:
            word = tuple(key)
            for index in word:
                if not isinstance(index, int) or index < 1:
                    raise ValueError(f"not a free word: {word!r}")
            acc[word] = acc.get(word, _ZERO) + _as_scalar(value)
        self._terms = {w: acc[w] for w in sorted(acc, key=grlex_key) if acc[w]}

    @classmethod
    def _from_dict(cls, terms: dict[FreeWord, Fraction]) -> "FreePolynomial":
        poly = object.__new__(cls)
        poly._terms = {w: terms[w] for w in sorted(terms, key=grlex_key)}
        return poly

    @classmethod
    def zero(cls) -> "FreePolynomial":
        return cls._from_dict({})

    @classmethod
    def one(cls) -> "FreePolynomial":
        return cls._from_dict({(): Fraction(1)})

    @classmethod
    def scalar(cls, value: ScalarLike) -> "FreePolynomial":
        coeff = _as_scalar(value)
        return cls._from_dict({(): coeff} if coeff else {})

    @classmethod
    def indeterminate(cls, index: int) -> "FreePolynomial":
        if index < 1:
            raise ValueError(f"indeterminate index must be >= 1, got {index}")
        return cls._from_dict({(index,): Fraction(1)})

    def items(self) -> list[tuple[FreeWord, Fraction]]:
        return list(self._terms.items())

    def support(self) -> tuple[FreeWord, ...]:
        return tuple(self._terms)

    def indeterminates(self) -> frozenset[int]:
        """Indices appearing anywhere in the support."""
        return frozenset(idx for word in self._terms for idx in word)

    def max_indeterminate(self) -> int:
        """Largest index used, 0 for constants."""
        return max((idx for word in self._terms for idx in word), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _coerce(value: object) -> "FreePolynomial | None":
        if isinstance(value, FreePolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return FreePolynomial.scalar(value)
        return None

    def __add__(self, other: object) -> "FreePolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        total = dict(self._terms)
        for word, coeff in rhs._terms.items():
            combined = total.get(word, _ZERO) + coeff
            if combined:
                total[word] = combined
            else:
                total.pop(word, None)
        return FreePolynomial._from_dict(total)

    __radd__ = __add__

    def __neg__(self) -> "FreePolynomial":
        return FreePolynomial._from_dict({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: object) -> "FreePolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "FreePolynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "FreePolynomial":
        if isinstance(other, (int, Fraction)):
            factor = _as_scalar(other)
            if not factor:
                return FreePolynomial._from_dict({})
            return FreePolynomial._from_dict(
                {w: c * factor for w, c in self._terms.items()}
            )
        if not isinstance(other, FreePolynomial):
            return NotImplemented
        acc: dict[FreeWord, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                acc[word] = acc.get(word, _ZERO) + c1 * c2
        return FreePolynomial._from_dict({w: c for w, c in acc.items() if c})

    def __rmul__(self, other: object) -> "FreePolynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "FreePolynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = FreePolynomial.one()
        for _ in range(exponent):
            result = result * self
            if not result:
                break
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for word, coeff in self._terms.items():
            if not word:
                text = str(abs(coeff))
            else:
                mono = "*".join(f"y{i}" for i in word)
                text = mono if abs(coeff) == 1 else f"{abs(coeff)}*{mono}"
            if not parts:
                parts.append(text if coeff > 0 else "-" + text)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FreePolynomial({str(self)!r})"


Substitution = Mapping[int, Element]


def evaluate(f: FreePolynomial, assignments: Substitution) -> Element:
    """Image of f under the homomorphism sending y_i to assignments[i].

    Every indeterminate of f must be assigned; the first missing one is
    named in the error.
    """
    missing = sorted(f.indeterminates() - set(assignments))
    if missing:
        raise ValueError(f"no assignment for y{missing[0]}")
    total = Element.zero()
    for word, coeff in f.items():
        factor = Element.scalar(coeff)
        for index in word:
            factor = factor * assignments[index]
            if not factor:
                break
        total = total + factor
    return total


def is_multilinear(f: FreePolynomial, k: int) -> bool:
    """True iff every support word uses each of y1..yk exactly once."""
    if k < 0:
        raise ValueError(f"indeterminate count must be >= 0, got {k}")
    full = list(range(1, k + 1))
    return all(sorted(word) == full for word in f.support())


@dataclass(frozen=True)
class IdentityVerdict:
    """Result of an identity check.

    When ``holds`` is false, ``witness`` is a substitution with
    evaluate(f, witness) != 0.  Mode "exhaustive-multilinear" is a proof;
    mode "randomized" with holds=true only means no counterexample was
    found in the given number of trials.
    """

    holds: bool
    mode: str
    witness: dict[int, Element] | None = None


def _domain_monomials(n: int, domain: str) -> list[Monomial]:
    if domain not in DOMAINS:
        raise ValueError(f"domain must be one of {DOMAINS}, got {domain!r}")
    monomials = basis_monomials(n)
    if domain == "even":
        return [m for m in monomials if len(m) % 2 == 0]
    if domain == "odd":
        return [m for m in monomials if len(m) % 2 == 1]
    return monomials


def random_element(
    rng: random.Random, n: int, domain: str = "all", max_terms: int | None = None
) -> Element:
    """Pseudo-random element with coefficients in {-2..2}.

    Draws over the parity-filtered basis; roughly half the candidate
    monomials get a nonzero coefficient.  max_terms caps the support size
    (used to keep high-degree products cheap in bulk runs).
    """
    monomials = _domain_monomials(n, domain)
    if max_terms is not None and len(monomials) > max_terms:
        monomials = rng.sample(monomials, max_terms)
    terms: dict[Monomial, Fraction] = {}
    for monomial in monomials:
        coeff = rng.choice(_COEFF_POOL) if rng.random() < 0.5 else 0
        if coeff:
            terms[monomial] = Fraction(coeff)
    return Element._from_dict(terms)


def is_identity(
    f: FreePolynomial,
    n: int,
    domain: str = "all",
    trials: int = 200,
    seed: int = 0,
) -> IdentityVerdict:
    """Decide (or probe) whether f vanishes identically on n generators.

    Multilinear f: exhaustive over all k-tuples of domain-filtered basis
    monomials, scanning tuples in graded-lex order so the first witness
    is deterministic.  Otherwise: ``trials`` seeded random substitutions.
    """
    if n < 1:
        raise ValueError(f"generator count must be >= 1, got {n}")
    k = f.max_indeterminate()
    if is_multilinear(f, k):
        monomials = _domain_monomials(n, domain)
        cache = {m: Element._from_dict({m: Fraction(1)}) for m in monomials}
        for combo in product(monomials, repeat=k):
            substitution = {i + 1: cache[combo[i]] for i in range(k)}
            if evaluate(f, substitution):
                return IdentityVerdict(False, EXHAUSTIVE, substitution)
        return IdentityVerdict(True, EXHAUSTIVE)
    if trials < 1:
        raise ValueError(f"randomized mode needs trials >= 1, got {trials}")
    rng = random.Random(seed)
    indices = sorted(f.indeterminates())
    for _ in range(trials):
        substitution = {i: random_element(rng, n, domain) for i in indices}
        if evaluate(f, substitution):
            return IdentityVerdict(False, RANDOMIZED, substitution)
    return IdentityVerdict(True, RANDOMIZED)


def project(f: FreePolynomial, n: int) -> Element:
    """Quotient map: reinterpret indeterminates as Grassmann generators.

    Each word is normalized (sorted with sign, repeats annihilated) and
    the results combine linearly.  Indices beyond n are rejected since
    the target algebra has only n generators.
    """
    if n < 0:
        raise ValueError(f"generator count must be >= 0, got {n}")
    acc: dict[Monomial, Fraction] = {}
    for word, coeff in f.items():
        for index in word:
            if index > n:
                raise ValueError(
                    f"index {index} exceeds the generator count {n}"
                )
        sign, monomial = normalize_word(word)
        if sign == 0:
            continue
        acc[monomial] = acc.get(monomial, _ZERO) + (coeff if sign > 0 else -coeff)
    return Element._from_dict({m: c for m, c in acc.items() if c})


def in_ideal(f: FreePolynomial, n: int) -> bool:
    """Membership in the two-sided ideal generated by the anticommutators.

    The ideal is exactly the kernel of the quotient map, so membership is
    project(f, n) = 0.
    """
    return not project(f, n)
