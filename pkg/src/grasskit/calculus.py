"""Body/soul decomposition, Berezin calculus, and nilpotency indices.

Derivative convention: LEFT.  The derivative with respect to x_i moves x_i
to the front of each monomial, collecting one factor of -1 per generator
jumped over, then deletes it.  For a canonical monomial that cost is
(-1)^k where k is the 0-based position of i in the index tuple.  The
Berezin integral over x_i is the same operator (integration rule
"d/dx_i of 1 is 0, of x_i is 1").  Under the right-derivative convention
every sign here would flip; nothing in this module is convention-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, _ZERO


def body(p: Element) -> Fraction:
    """Coefficient of the unit monomial (0 if absent)."""
    return p.coefficient(())


def soul(p: Element) -> Element:
    """p minus its body; always nilpotent."""
    return Element._from_dict({m: c for m, c in p.items() if m})


def left_derivative(p: Element, i: int) -> Element:
    """Left derivative of p with respect to generator i.

    Linear in p; kills every monomial not containing i.
    """
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    out: dict[tuple[int, ...], Fraction] = {}
    for monomial, coeff in p.items():
        if i not in monomial:
            continue
        position = monomial.index(i)
        rest = monomial[:position] + monomial[position + 1 :]
        signed = coeff if position % 2 == 0 else -coeff
        combined = out.get(rest, _ZERO) + signed
        if combined:
            out[rest] = combined
        else:
            out.pop(rest, None)
    return Element._from_dict(out)


def berezin_integral(p: Element, i: int) -> Element:
    """Berezin integral over generator i; identical to the left derivative.

    Multiple integrals are iterated single ones, innermost applied first.
    """
    return left_derivative(p, i)


@dataclass(frozen=True)
class NilReport:
    """Outcome of a nilpotency search up to a power cap.

    ``index`` is the smallest k with p^k = 0 (so p^(index-1) != 0), or
    None when no power up to the cap vanished.
    """

    index: int | None
    cap: int

    @property
    def exceeds_cap(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return "exceeds cap" if self.index is None else str(self.index)


def nil_index(p: Element, cap: int | None = None) -> NilReport:
    """Smallest power at which p vanishes, searched up to cap.

    p = 0 is rejected: its index would be 0 or 1 depending on convention,
    and no convention is worth defending.  A body-free element over n
    generators always vanishes by power n+1, which is the default cap
    (taking n to be the largest index in the support).  An element with
    nonzero body is never nilpotent and always reports "exceeds cap".
    """
    if not p:
        raise ValueError("nil index of the zero element is undefined")
    if cap is None:
        cap = max((m[-1] for m, _ in p.items() if m), default=0) + 1
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    power = Element.one()
    for k in range(1, cap + 1):
        power = power * p
        if not power:
            return NilReport(k, cap)
    return NilReport(None, cap)
