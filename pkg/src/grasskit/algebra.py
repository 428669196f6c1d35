"""Sparse arithmetic in the finitely generated Grassmann algebra.

Scalars are exact rationals (``fractions.Fraction``); there is no floating
point anywhere in the kernel.  A canonical monomial is a strictly
increasing tuple of 1-based generator indices, the empty tuple being the
unit.  Any word of generator indices (repeats and arbitrary order allowed)
reduces to a unique signed canonical monomial: sorting the indices costs a
factor of -1 per inversion, and a repeated index annihilates the word.
Elements are finite rational combinations of canonical monomials, stored
sparsely with zero coefficients dropped, so structural equality is
semantic equality.

All values are immutable; every operation is a pure function of its
inputs, so values can be shared freely between threads or tasks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

Monomial = tuple[int, ...]
Word = Sequence[int]
ScalarLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"coefficients must be exact (int or Fraction), got {type(value).__name__}"
    )


def grlex_key(monomial: Monomial) -> tuple[int, Monomial]:
    """Graded-lexicographic sort key: degree first, then the index sequence."""
    return (len(monomial), monomial)


class SignedMonomial(NamedTuple):
    """Image of a word under normalization.

    ``sign`` is 0 exactly when the word repeats an index, in which case
    ``monomial`` is None.
    """

    sign: int
    monomial: Monomial | None


def _merge_count(seq: list[int]) -> tuple[list[int], int]:
    # Mergesort that counts inversions.  The quadratic pair count stays out
    # of the library; the tests keep it as an independent oracle.
    if len(seq) < 2:
        return seq, 0
    mid = len(seq) // 2
    left, linv = _merge_count(seq[:mid])
    right, rinv = _merge_count(seq[mid:])
    merged: list[int] = []
    inversions = linv + rinv
    i = j = 0
    nleft = len(left)
    nright = len(right)
    while i < nleft and j < nright:
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            inversions += nleft - i
            merged.append(right[j])
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, inversions


def normalize_word(word: Word) -> SignedMonomial:
    """Reduce a word of generator indices to its signed canonical monomial.

    Swapping two adjacent generators flips the sign and a squared
    generator is zero, so the result carries the parity of the number of
    inversions removed by sorting, or sign 0 if any index repeats.
    """
    letters = list(word)
    for index in letters:
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
    ordered, inversions = _merge_count(letters)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            return SignedMonomial(0, None)
    return SignedMonomial(-1 if inversions & 1 else 1, tuple(ordered))


def mul_monomials(a: Monomial, b: Monomial) -> SignedMonomial:
    """Product of two canonical monomials in one merge pass.

    Both inputs are already sorted, so only crossings between the two
    halves contribute to the sign; a shared index gives zero.
    """
    if not a:
        return SignedMonomial(1, b)
    if not b:
        return SignedMonomial(1, a)
    merged: list[int] = []
    crossings = 0
    i = j = 0
    na = len(a)
    nb = len(b)
    while i < na and j < nb:
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        elif a[i] > b[j]:
            crossings += na - i
            merged.append(b[j])
            j += 1
        else:
            return SignedMonomial(0, None)
    merged.extend(a[i:])
    merged.extend(b[j:])
    return SignedMonomial(-1 if crossings & 1 else 1, tuple(merged))


class Element:
    """A Grassmann-algebra element: finite map from canonical monomials to
    nonzero rationals.

    Instances are immutable; arithmetic returns new objects.  Terms are
    kept in graded-lexicographic order, which fixes iteration and display
    order once and for all.  Integers and ``Fraction`` values coerce to
    scalar elements in arithmetic and comparisons, so ``p * q == 0`` reads
    the way it should.
    """

    __slots__ = ("_terms",)

    _terms: dict[Monomial, Fraction]

    def __init__(
        self,
        terms: Mapping[Word, ScalarLike] | Iterable[tuple[Word, ScalarLike]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned: dict[Monomial, Fraction] = {}
        for key, value in items:
            monomial = tuple(key)
            for index in monomial:
                if not isinstance(index, int) or index < 1:
                    raise ValueError(f"not a canonical monomial: {monomial!r}")
            if any(x >= y for x, y in zip(monomial, monomial[1:])):
                raise ValueError(
                    f"monomial indices must be strictly increasing: {monomial!r}"
                )
            coeff = cleaned.get(monomial, _ZERO) + _as_scalar(value)
            cleaned[monomial] = coeff
        self._terms = {
            m: cleaned[m] for m in sorted(cleaned, key=grlex_key) if cleaned[m]
        }

    @classmethod
    def _from_dict(cls, terms: dict[Monomial, Fraction]) -> "Element":
        # Trusted path: keys canonical and distinct, values nonzero.
        element = object.__new__(cls)
        element._terms = {m: terms[m] for m in sorted(terms, key=grlex_key)}
        return element

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Element":
        return cls._from_dict({})

    @classmethod
    def one(cls) -> "Element":
        return cls._from_dict({(): _ONE})

    @classmethod
    def scalar(cls, value: ScalarLike) -> "Element":
        coeff = _as_scalar(value)
        return cls._from_dict({(): coeff} if coeff else {})

    @classmethod
    def generator(cls, index: int) -> "Element":
        if index < 1:
            raise ValueError(f"generator index must be >= 1, got {index}")
        return cls._from_dict({(index,): _ONE})

    @classmethod
    def monomial(cls, indices: Word, coeff: ScalarLike = 1) -> "Element":
        return cls({tuple(indices): coeff})

    # -- accessors ---------------------------------------------------------

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lexicographic order."""
        return list(self._terms.items())

    def support(self) -> tuple[Monomial, ...]:
        return tuple(self._terms)

    def coefficient(self, monomial: Word) -> Fraction:
        return self._terms.get(tuple(monomial), _ZERO)

    def degree(self) -> int | None:
        """Largest monomial degree in the support, or None for zero."""
        if not self._terms:
            return None
        return max(len(m) for m in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: object) -> "Element | None":
        if isinstance(value, Element):
            return value
        if isinstance(value, (int, Fraction)):
            return Element.scalar(value)
        return None

    def __add__(self, other: object) -> "Element":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        total = dict(self._terms)
        for monomial, coeff in rhs._terms.items():
            combined = total.get(monomial, _ZERO) + coeff
            if combined:
                total[monomial] = combined
            else:
                total.pop(monomial, None)
        return Element._from_dict(total)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._from_dict({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Element":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Element":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def _scaled(self, factor: Fraction) -> "Element":
        if not factor:
            return Element._from_dict({})
        return Element._from_dict({m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: object) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self._scaled(_as_scalar(other))
        if not isinstance(other, Element):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                sign, monomial = mul_monomials(m1, m2)
                if sign == 0:
                    continue
                coeff = c1 * c2
                acc[monomial] = acc.get(monomial, _ZERO) + (
                    coeff if sign > 0 else -coeff
                )
        return Element._from_dict({m: c for m, c in acc.items() if c})

    def __rmul__(self, other: object) -> "Element":
        if isinstance(other, (int, Fraction)):
            return self._scaled(_as_scalar(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Element.one()
        for _ in range(exponent):
            result = result * self
            if not result:
                break
        return result

    # -- comparison and display --------------------------------------------

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
        for monomial, coeff in self._terms.items():
            if not monomial:
                text = str(abs(coeff))
            else:
                mono = "*".join(f"x{i}" for i in monomial)
                text = mono if abs(coeff) == 1 else f"{abs(coeff)}*{mono}"
            if not parts:
                parts.append(text if coeff > 0 else "-" + text)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def make_element(pairs: Iterable[tuple[Word, ScalarLike]]) -> Element:
    """Build an element from (word, coefficient) pairs.

    Each word is normalized; words with a repeated index contribute
    nothing, and coefficients landing on the same canonical monomial
    combine with their normalization signs.  Any permutation of the input
    list yields the identical element.
    """
    acc: dict[Monomial, Fraction] = {}
    for word, value in pairs:
        sign, monomial = normalize_word(word)
        if sign == 0:
            continue
        coeff = _as_scalar(value)
        if not coeff:
            continue
        acc[monomial] = acc.get(monomial, _ZERO) + (coeff if sign > 0 else -coeff)
    return Element._from_dict({m: c for m, c in acc.items() if c})


def basis_monomials(n: int) -> list[Monomial]:
    """All canonical basis monomials on n generators, graded-lex ordered."""
    if n < 0:
        raise ValueError(f"generator count must be >= 0, got {n}")
    out: list[Monomial] = []
    for degree in range(n + 1):
        out.extend(combinations(range(1, n + 1), degree))
    return out
