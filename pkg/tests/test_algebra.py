"""Generator algebra: product, involution, canonical form, predicates."""

import random
from fractions import Fraction

import pytest

from twograph.algebra import (
    Element,
    GenTerm,
    degree_component,
    gauge,
    in_subalgebra,
    is_unitary,
    mul,
    permutation_unitary,
    raise_level,
)
from twograph.errors import NotAPermutation, NotUnitModulus, ThetaMismatch
from twograph.sampling import random_element, rng_from_seed
from twograph.scalar import ExactScalar
from twograph.semigroup import EMPTY_WORD, word


def gen(theta, u, v, coeff=None):
    return Element.gen(theta, word(theta, u), word(theta, v), coeff)


class TestMul:
    def test_concatenation_case(self, theta):
        assert mul(gen(theta, "e1", "id"), gen(theta, "id", "e1")) == gen(theta, "e1", "e1")

    def test_orthogonal_ranges(self, theta):
        assert mul(gen(theta, "id", "e2"), gen(theta, "e1", "id")).is_zero()

    def test_flip_mixing_product(self, flip22):
        got = mul(gen(flip22, "id", "f1"), gen(flip22, "e1", "id"))
        assert got == gen(flip22, "e1", "f1") + gen(flip22, "e2", "f2")

    def test_theta_mismatch(self, flip22, id22):
        with pytest.raises(ThetaMismatch):
            mul(Element.unit(flip22), Element.unit(id22))

    def test_zero_absorbs(self, theta):
        zero = Element.zero(theta)
        a = gen(theta, "e1", "f1")
        assert mul(zero, a).is_zero() and mul(a, zero).is_zero()

    def test_associativity_random(self, theta):
        rng = rng_from_seed(20)
        for _ in range(40):
            a = random_element(rng, theta, (2, 2))
            b = random_element(rng, theta, (2, 2))
            c = random_element(rng, theta, (2, 2))
            assert (mul(mul(a, b), c) - mul(a, mul(b, c))).is_zero()

    def test_unit_two_sided(self, theta):
        rng = rng_from_seed(21)
        one = Element.unit(theta)
        for _ in range(20):
            a = random_element(rng, theta, (2, 2))
            assert mul(one, a) == a and mul(a, one) == a


class TestAdjoint:
    def test_swaps_words(self, theta):
        assert gen(theta, "e1", "f2").adjoint() == gen(theta, "f2", "e1")

    def test_conjugates_coefficients(self, theta):
        a = Element.unit(theta).scaled(ExactScalar.gaussian(1, 1))
        assert a.adjoint() == Element.unit(theta).scaled(ExactScalar.gaussian(1, -1))

    def test_involution_random(self, theta):
        rng = rng_from_seed(22)
        for _ in range(20):
            a = random_element(rng, theta, (2, 2))
            assert a.adjoint().adjoint() == a

    def test_anti_multiplicative(self, theta):
        rng = rng_from_seed(23)
        for _ in range(20):
            a = random_element(rng, theta, (2, 2))
            b = random_element(rng, theta, (2, 2))
            assert mul(a, b).adjoint() == mul(b.adjoint(), a.adjoint())


class TestRaiseLevel:
    def test_defect_free_diagonal(self, flip22):
        t = GenTerm(word(flip22, "e1"), word(flip22, "e1"))
        got = raise_level(flip22, t, (0, 1))
        assert got == gen(flip22, "e1.f1", "e1.f1") + gen(flip22, "e1.f2", "e1.f2")

    def test_unit_raises_to_defect_free_sum(self, theta):
        t = GenTerm(EMPTY_WORD, EMPTY_WORD)
        got = raise_level(theta, t, (1, 0))
        expected = sum(
            (gen(theta, f"e{i}", f"e{i}") for i in range(2, theta.m + 1)),
            gen(theta, "e1", "e1"),
        )
        assert got == expected == Element.unit(theta)

    def test_zero_delta_is_identity(self, theta):
        t = GenTerm(word(theta, "e1"), word(theta, "f1"))
        assert raise_level(theta, t, (0, 0)) == Element.gen(theta, t.u, t.v)

    def test_equality_invariant(self, theta):
        rng = rng_from_seed(24)
        for _ in range(20):
            a = random_element(rng, theta, (1, 1), terms=2)
            for t, c in a.terms().items():
                assert raise_level(theta, t, (1, 1)).scaled(c) == Element(
                    theta, {t: c}
                )


class TestCanonicalize:
    def test_defect_free_collapse(self, theta):
        combo = gen(theta, "e1", "e1")
        for i in range(2, theta.m + 1):
            combo = combo + gen(theta, f"e{i}", f"e{i}")
        assert (combo - Element.unit(theta)).canonicalize().is_empty

    def test_flip_identity_collapses(self, flip22):
        lhs = mul(gen(flip22, "id", "f1"), gen(flip22, "e1", "id"))
        rhs = gen(flip22, "e1", "f1") + gen(flip22, "e2", "f2")
        assert (lhs - rhs).canonicalize().is_empty

    def test_idempotent(self, theta):
        rng = rng_from_seed(25)
        for _ in range(20):
            a = random_element(rng, theta, (2, 2)).canonicalize()
            assert a.canonicalize() is a


class TestDegreeComponent:
    def test_picks_degree(self, theta):
        a = gen(theta, "e1", "id") + gen(theta, "e1", "f1")
        assert degree_component(a, (1, 0)) == gen(theta, "e1", "id")

    def test_core_fixed(self, theta):
        x = gen(theta, "e1.f1", "e2.f1")
        assert degree_component(x, (0, 0)) == x

    def test_kills_off_degree(self, theta):
        assert degree_component(gen(theta, "e1", "id"), (0, 0)).is_zero()

    def test_product_rule(self, theta):
        rng = rng_from_seed(26)
        from twograph.algebra import support_degrees
        from twograph.semigroup import deg_sub

        for _ in range(15):
            a = random_element(rng, theta, (1, 1), terms=2)
            b = random_element(rng, theta, (1, 1), terms=2)
            product = mul(a, b)
            deltas = {
                (da[0] + db[0], da[1] + db[1])
                for da in support_degrees(a)
                for db in support_degrees(b)
            }
            for delta in deltas:
                rhs = Element.zero(theta)
                for da in support_degrees(a):
                    rhs = rhs + mul(
                        degree_component(a, da),
                        degree_component(b, deg_sub(delta, da)),
                    )
                assert degree_component(product, delta) == rhs


class TestGauge:
    def test_scales_by_degree(self, theta):
        i = ExactScalar.imag_unit()
        got = gauge(gen(theta, "e1", "f1"), (i, ExactScalar.one()))
        assert got == gen(theta, "e1", "f1").scaled(i)

    def test_fixes_core(self, theta):
        x = gen(theta, "e1.f1", "e2.f1")
        assert gauge(x, (ExactScalar.imag_unit(), ExactScalar.gaussian(0, -1))) == x

    def test_square_of_sign_flip(self, theta):
        rng = rng_from_seed(27)
        minus = ExactScalar.rational(-1)
        for _ in range(10):
            a = random_element(rng, theta, (2, 2))
            once = gauge(a, (minus, ExactScalar.one()))
            assert gauge(once, (minus, ExactScalar.one())) == a

    def test_rejects_non_unit(self, theta):
        with pytest.raises(NotUnitModulus):
            gauge(Element.unit(theta), (ExactScalar.rational(2), ExactScalar.one()))

    def test_pythagorean_point(self, theta):
        t = ExactScalar.gaussian(Fraction(3, 5), Fraction(4, 5))
        a = gen(theta, "e1", "id")
        assert gauge(a, (t, ExactScalar.one())) == a.scaled(t)


class TestIsUnitary:
    def test_unit(self, theta):
        assert is_unitary(Element.unit(theta))

    def test_flip_flop(self, theta):
        assert is_unitary(gen(theta, "e1", "e2") + gen(theta, "e2", "e1"))

    def test_proper_projection(self, theta):
        assert not is_unitary(gen(theta, "e1", "e1"))


class TestMembership:
    def test_diagonal_generator(self, theta):
        x = gen(theta, "e1.f1", "e1.f1")
        assert in_subalgebra(x, "diagonal", 1)
        assert in_subalgebra(x, "core", 1)

    def test_core_not_diagonal(self, theta):
        x = gen(theta, "e1.f1", "e2.f1")
        assert in_subalgebra(x, "core", 1)
        assert not in_subalgebra(x, "diagonal", 1)

    def test_nonzero_degree_in_neither(self, theta):
        x = gen(theta, "e1", "id")
        assert not in_subalgebra(x, "core")
        assert not in_subalgebra(x, "diagonal")

    def test_level_bound(self, theta):
        x = gen(theta, "e1.e2.f1", "e1.e2.f1")
        assert in_subalgebra(x, "diagonal", 2)
        assert not in_subalgebra(x, "diagonal", 1)

    def test_unit_is_diagonal(self, theta):
        assert in_subalgebra(Element.unit(theta), "diagonal", 1)

    def test_rejects_unknown(self, theta):
        with pytest.raises(ValueError):
            in_subalgebra(Element.unit(theta), "masa")


class TestPermutationUnitary:
    def test_swap_on_edges(self, theta):
        perm = list(range(theta.m))
        perm[0], perm[1] = perm[1], perm[0]
        got = permutation_unitary(theta, (1, 0), perm)
        expected = gen(theta, "e1", "e2") + gen(theta, "e2", "e1")
        for i in range(3, theta.m + 1):
            expected = expected + gen(theta, f"e{i}", f"e{i}")
        assert got == expected

    def test_trivial_degree(self, theta):
        assert permutation_unitary(theta, (0, 0)) == Element.unit(theta)

    def test_diagonal_phases(self, id22):
        i = ExactScalar.imag_unit()
        one = ExactScalar.one()
        got = permutation_unitary(id22, (1, 1), None, [i, one, one, one])
        assert is_unitary(got)

    def test_always_unitary(self, theta):
        rng = rng_from_seed(28)
        from twograph.sampling import random_unitary

        for _ in range(10):
            assert is_unitary(random_unitary(rng, theta))

    def test_not_a_permutation(self, theta):
        with pytest.raises(NotAPermutation):
            permutation_unitary(theta, (1, 0), [0] * theta.m)

    def test_bad_phase(self, theta):
        with pytest.raises(NotUnitModulus):
            permutation_unitary(
                theta, (0, 0), None, [ExactScalar.rational(2)]
            )


def test_element_str_sorted_and_parseable(theta):
    from twograph.exprs import parse_expression

    rng = rng_from_seed(29)
    for _ in range(25):
        a = random_element(rng, theta, (2, 2)).canonicalize()
        assert parse_expression(str(a), theta) == a
