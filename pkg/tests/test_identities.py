import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grasskit.algebra import Element, basis_monomials
from grasskit.identities import (
    EXHAUSTIVE,
    RANDOMIZED,
    FreePolynomial,
    evaluate,
    in_ideal,
    is_identity,
    is_multilinear,
    project,
    random_element,
)
from tests.strategies import (
    elements,
    free_polynomials,
    rand_element,
    scalars,
)

Y1 = FreePolynomial.indeterminate(1)
Y2 = FreePolynomial.indeterminate(2)
Y3 = FreePolynomial.indeterminate(3)


def bracket(f: FreePolynomial, g: FreePolynomial) -> FreePolynomial:
    return f * g - g * f


class TestFreePolynomial:
    def test_no_relations_hold(self):
        assert Y1 * Y2 != Y2 * Y1
        assert (Y1 * Y2).support() == ((1, 2),)
        assert (Y2 * Y1).support() == ((2, 1),)

    def test_additive_cancellation(self):
        assert Y1 * Y2 + (-1) * (Y1 * Y2) == FreePolynomial.zero()

    def test_commutator_has_two_words(self):
        f = bracket(Y1, Y2)
        assert f == FreePolynomial({(1, 2): 1, (2, 1): -1})

    def test_squares_are_not_rewritten(self):
        assert Y1 * Y1 == FreePolynomial({(1, 1): 1})

    def test_scalars_and_powers(self):
        f = (Y1 + 1) ** 2
        assert f == FreePolynomial({(): 1, (1,): 2, (1, 1): 1})

    def test_rejects_bad_words(self):
        with pytest.raises(ValueError):
            FreePolynomial({(0,): 1})
        with pytest.raises(ValueError):
            FreePolynomial.indeterminate(0)

    def test_text_form(self):
        assert str(FreePolynomial.zero()) == "0"
        assert str(bracket(Y1, Y2)) == "y1*y2 - y2*y1"

    @given(free_polynomials(), free_polynomials(), free_polynomials())
    def test_free_ring_laws(self, f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (g + h) * f == g * f + h * f


class TestEvaluate:
    def test_anticommutator_word_vanishes(self):
        f = Y1 * Y2 + Y2 * Y1
        value = evaluate(f, {1: Element.generator(1), 2: Element.generator(2)})
        assert value == Element.zero()

    def test_commutator_word(self):
        f = bracket(Y1, Y2)
        value = evaluate(f, {1: Element.generator(1), 2: Element.generator(2)})
        assert value == Element({(1, 2): 2})

    @given(elements())
    def test_identity_substitution(self, p):
        assert evaluate(Y1, {1: p}) == p

    def test_missing_assignment_is_named(self):
        with pytest.raises(ValueError, match="y2"):
            evaluate(Y1 * Y2, {1: Element.one()})

    @given(free_polynomials(), free_polynomials(), st.data())
    def test_homomorphism_laws(self, f, g, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        assignment = {i: rand_element(rng, 3) for i in range(1, 4)}
        assert evaluate(f * g, assignment) == evaluate(f, assignment) * evaluate(
            g, assignment
        )
        assert evaluate(f + g, assignment) == evaluate(f, assignment) + evaluate(
            g, assignment
        )


class TestMultilinearity:
    def test_triple_commutator_is_multilinear(self):
        assert is_multilinear(bracket(bracket(Y1, Y2), Y3), 3)

    def test_square_is_not(self):
        assert not is_multilinear(Y1 * Y1, 1)

    def test_missing_indeterminate_in_one_word(self):
        assert not is_multilinear(Y1 * Y2 + Y1, 2)

    def test_zero_polynomial_is_vacuously_multilinear(self):
        assert is_multilinear(FreePolynomial.zero(), 3)


class TestIsIdentity:
    def test_triple_commutator_holds_exhaustively(self):
        verdict = is_identity(bracket(bracket(Y1, Y2), Y3), 4)
        assert verdict.holds
        assert verdict.mode == EXHAUSTIVE
        assert verdict.witness is None

    def test_plain_commutator_fails_with_first_witness(self):
        verdict = is_identity(bracket(Y1, Y2), 2)
        assert not verdict.holds
        assert verdict.mode == EXHAUSTIVE
        assert verdict.witness == {
            1: Element.generator(1),
            2: Element.generator(2),
        }
        value = evaluate(bracket(Y1, Y2), verdict.witness)
        assert value == Element({(1, 2): 2})

    def test_odd_domain_anticommutator(self):
        verdict = is_identity(Y1 * Y2 + Y2 * Y1, 4, domain="odd")
        assert verdict.holds
        assert verdict.mode == EXHAUSTIVE

    def test_even_domain_commutator(self):
        verdict = is_identity(bracket(Y1, Y2), 4, domain="even")
        assert verdict.holds

    def test_randomized_mode_finds_square_counterexample(self):
        verdict = is_identity(Y1 * Y1, 3)
        assert not verdict.holds
        assert verdict.mode == RANDOMIZED
        assert evaluate(Y1 * Y1, verdict.witness) != Element.zero()

    def test_randomized_mode_passes_central_square_identity(self):
        # Commutators are always even, hence central; their squares stay
        # central, so this bracket vanishes under every substitution even
        # though the polynomial is not multilinear.
        c = bracket(Y1, Y2)
        verdict = is_identity(bracket(c * c, Y3), 3)
        assert verdict.holds
        assert verdict.mode == RANDOMIZED

    def test_randomized_mode_is_seeded(self):
        first = is_identity(Y1 * Y1, 3, trials=5, seed=11)
        second = is_identity(Y1 * Y1, 3, trials=5, seed=11)
        assert first == second

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            is_identity(Y1, 2, domain="mixed")
        with pytest.raises(ValueError):
            is_identity(Y1, 0)

    @given(st.data())
    def test_t_ideal_closure_of_triple_commutator(self, data):
        f = bracket(bracket(Y1, Y2), Y3)
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        n = rng.randint(1, 5)
        assignment = {i: rand_element(rng, n) for i in range(1, 4)}
        assert evaluate(f, assignment) == Element.zero()

    def test_exhaustive_and_randomized_agree_on_multilinear(self):
        # Cross-validation of the basis reduction on arbitrary elements.
        cases = [
            (bracket(bracket(Y1, Y2), Y3), True),
            (bracket(Y1, Y2), False),
            (Y1 * Y2 - Y2 * Y1, False),
        ]
        rng = random.Random(7)
        for f, expected in cases:
            verdict = is_identity(f, 3)
            assert verdict.mode == EXHAUSTIVE
            assert verdict.holds == expected
            found_counterexample = False
            for _ in range(1000):
                assignment = {
                    i: rand_element(rng, 3) for i in sorted(f.indeterminates())
                }
                if evaluate(f, assignment) != Element.zero():
                    found_counterexample = True
                    break
            assert found_counterexample == (not expected)


class TestQuotientMap:
    def test_anticommutator_generator_is_killed(self):
        f = FreePolynomial({(1, 2): 1, (2, 1): 1})
        assert project(f, 2) == Element.zero()

    def test_reversed_word_picks_up_the_sign(self):
        assert project(FreePolynomial({(2, 1): 1}), 2) == Element({(1, 2): -1})

    def test_opposite_three_letter_words_cancel(self):
        f = FreePolynomial({(1, 2, 3): 1, (3, 2, 1): 1})
        assert project(f, 3) == Element.zero()

    def test_out_of_range_index(self):
        with pytest.raises(ValueError):
            project(FreePolynomial({(3,): 1}), 2)

    def test_in_ideal_examples(self):
        assert in_ideal(FreePolynomial({(1, 1): 7}), 2)
        assert not in_ideal(FreePolynomial({(1, 2): 1}), 2)
        generator = FreePolynomial({(1, 2): 1, (2, 1): 1})
        assert in_ideal(generator * FreePolynomial.indeterminate(3), 3)

    @given(st.data())
    def test_two_sided_absorption(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        i, j = rng.randint(1, 4), rng.randint(1, 4)
        g = FreePolynomial({(i, j): 1, (j, i): 1})
        u = _rand_free(rng, 4)
        v = _rand_free(rng, 4)
        assert in_ideal(u * g * v, 4)

    @given(free_polynomials(4), free_polynomials(4))
    def test_quotient_respects_products(self, f, g):
        assert project(f * g, 4) == project(f, 4) * project(g, 4)

    @given(free_polynomials(4), free_polynomials(4))
    def test_quotient_respects_sums(self, f, g):
        assert project(f + g, 4) == project(f, 4) + project(g, 4)


def _rand_free(rng: random.Random, k: int) -> FreePolynomial:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        word = tuple(rng.randint(1, k) for _ in range(rng.randint(0, 3)))
        terms[word] = terms.get(word, 0) + Fraction(rng.randint(-3, 3))
    return FreePolynomial(terms.items())


class TestRandomElement:
    def test_respects_domain_filter(self):
        rng = random.Random(3)
        for _ in range(20):
            even = random_element(rng, 4, "even")
            assert all(len(m) % 2 == 0 for m in even.support())
            odd = random_element(rng, 4, "odd")
            assert all(len(m) % 2 == 1 for m in odd.support())

    def test_coefficients_stay_in_pool(self):
        rng = random.Random(5)
        for _ in range(20):
            p = random_element(rng, 4)
            assert all(c in {-2, -1, 1, 2} for _, c in p.items())
