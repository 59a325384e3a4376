"""Twisted pairs, the pair/endomorphism bijection, composition, examples."""

import pytest

from twograph.algebra import Element, gauge, mul
from twograph.endo import (
    Endomorphism,
    UnitaryPair,
    ad_product_check,
    automorphism_witness_check,
    canonical_endomorphism,
    canonical_endomorphism_apply,
    canonical_pair,
    compose,
    endo_from_pair,
    gallery,
    inner_pair,
    pair_from_generator_map,
    pair_product,
    preserves_subalgebra,
    twisted_check,
)
from twograph.errors import NotTwisted, NotUnitary, RelationsViolated, WrongTheta
from twograph.sampling import random_element, random_unitary, rng_from_seed
from twograph.scalar import ExactScalar
from twograph.semigroup import EMPTY_WORD, Word, enumerate_words, word


def gen(theta, u, v):
    return Element.gen(theta, word(theta, u), word(theta, v))


def generator_isometries(theta):
    out = [Element.gen(theta, Word((i,), ()), EMPTY_WORD) for i in range(1, theta.m + 1)]
    out += [Element.gen(theta, Word((), (j,)), EMPTY_WORD) for j in range(1, theta.n + 1)]
    return out


class TestCanonicalEndomorphismApply:
    def test_zero_degree_is_identity(self, theta):
        rng = rng_from_seed(60)
        x = random_element(rng, theta, (2, 2))
        assert canonical_endomorphism_apply(theta, 0, 0, x) == x

    def test_unital(self, theta):
        one = Element.unit(theta)
        assert canonical_endomorphism_apply(theta, 1, 0, one) == one

    def test_shifts_commute(self, theta):
        rng = rng_from_seed(61)
        for _ in range(10):
            x = random_element(rng, theta, (1, 1), terms=2)
            ab = canonical_endomorphism_apply(
                theta, 1, 0, canonical_endomorphism_apply(theta, 0, 1, x)
            )
            ba = canonical_endomorphism_apply(
                theta, 0, 1, canonical_endomorphism_apply(theta, 1, 0, x)
            )
            both = canonical_endomorphism_apply(theta, 1, 1, x)
            assert ab == ba == both


class TestTwistedCheck:
    def test_identity_pair(self, theta):
        ok, residual = twisted_check(Element.unit(theta), Element.unit(theta))
        assert ok and residual is None

    def test_flip_any_unitary(self, flip22):
        u = gen(flip22, "e1", "e2") + gen(flip22, "e2", "e1")
        ok, _ = twisted_check(u, u)
        assert ok

    def test_failure_carries_residual(self, flip22):
        u = gen(flip22, "e1", "e2") + gen(flip22, "e2", "e1")
        ok, residual = twisted_check(u, Element.unit(flip22))
        assert not ok and residual is not None and not residual.is_zero()

    def test_non_unitary_rejected(self, theta):
        ok, residual = twisted_check(gen(theta, "e1", "e1"), Element.unit(theta))
        assert not ok and residual is None

    def test_pair_constructor_enforces(self, flip22):
        u = gen(flip22, "e1", "e2") + gen(flip22, "e2", "e1")
        with pytest.raises(NotTwisted):
            UnitaryPair(u, Element.unit(flip22))


class TestCanonicalPairs:
    @pytest.mark.parametrize("pq", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)])
    def test_twisted(self, theta, pq):
        pair = canonical_pair(theta, *pq)
        ok, residual = twisted_check(pair.U, pair.V)
        assert ok, residual

    def test_trivial_pair(self, theta):
        pair = canonical_pair(theta, 0, 0)
        assert pair.U == Element.unit(theta) and pair.V == Element.unit(theta)

    def test_flip_10_shape(self, flip22):
        pair = canonical_pair(flip22, 1, 0)
        expected = Element.zero(flip22)
        for k in (1, 2):
            for i in (1, 2):
                expected = expected + gen(flip22, f"e{k}.e{i}", f"e{i}.e{k}")
        assert pair.U == expected

    def test_matches_canonical_action(self, theta):
        lam = canonical_endomorphism(theta, 1, 0)
        for g in generator_isometries(theta):
            assert lam.apply(g) == canonical_endomorphism_apply(theta, 1, 0, g)

    def test_intertwining_relation(self, theta):
        rng = rng_from_seed(62)
        for p, q in [(1, 0), (0, 1), (1, 1), (2, 1)]:
            lam = canonical_endomorphism(theta, p, q)
            words = enumerate_words(theta, (p, q))
            for _ in range(5):
                x = random_element(rng, theta, (1, 1), terms=2)
                w = rng.choice(words)
                sw = Element.gen(theta, w, EMPTY_WORD)
                assert mul(lam.apply(x), sw) == mul(sw, x)


class TestEndomorphism:
    def test_identity(self, theta):
        lam = Endomorphism.identity(theta)
        rng = rng_from_seed(63)
        x = random_element(rng, theta, (2, 2))
        assert lam.apply(x) == x

    def test_homomorphism_laws(self, theta):
        rng = rng_from_seed(64)
        lam = canonical_endomorphism(theta, 1, 1)
        one = Element.unit(theta)
        assert lam.apply(one) == one
        for _ in range(10):
            x = random_element(rng, theta, (1, 1), terms=2)
            y = random_element(rng, theta, (1, 1), terms=2)
            assert lam.apply(mul(x, y)) == mul(lam.apply(x), lam.apply(y))
            assert lam.apply(x.adjoint()) == lam.apply(x).adjoint()

    def test_round_trip_canonical(self, theta):
        for pq in [(1, 0), (0, 1), (1, 1)]:
            pair = canonical_pair(theta, *pq)
            lam = Endomorphism(pair)
            e_imgs, f_imgs = lam.generator_images()
            assert pair_from_generator_map(theta, e_imgs, f_imgs).equals(pair)

    def test_round_trip_random_inner(self, theta):
        rng = rng_from_seed(65)
        for _ in range(5):
            pair = inner_pair(random_unitary(rng, theta))
            lam = Endomorphism(pair)
            e_imgs, f_imgs = lam.generator_images()
            assert pair_from_generator_map(theta, e_imgs, f_imgs).equals(pair)

    def test_bad_generator_map_rejected(self, theta):
        e_imgs = {i: Element.gen(theta, Word((1,), ()), EMPTY_WORD)
                  for i in range(1, theta.m + 1)}
        f_imgs = {j: Element.gen(theta, Word((), (1,)), EMPTY_WORD)
                  for j in range(1, theta.n + 1)}
        with pytest.raises(RelationsViolated):
            pair_from_generator_map(theta, e_imgs, f_imgs)


class TestCompose:
    def test_identity_neutral(self, theta):
        lam = canonical_endomorphism(theta, 1, 0)
        composed = compose(Endomorphism.identity(theta), lam)
        assert composed.equals(lam.pair)

    def test_shift_composition(self, theta):
        composed = compose(
            canonical_endomorphism(theta, 1, 0), canonical_endomorphism(theta, 0, 1)
        )
        assert composed.equals(canonical_pair(theta, 1, 1))

    def test_agreement_on_generators(self, theta):
        rng = rng_from_seed(66)
        lam1 = Endomorphism(inner_pair(random_unitary(rng, theta)))
        lam2 = canonical_endomorphism(theta, 0, 1)
        composed = Endomorphism(compose(lam2, lam1))
        for g in generator_isometries(theta):
            assert composed.apply(g) == lam2.apply(lam1.apply(g))

    def test_pair_product_associative(self, theta):
        rng = rng_from_seed(67)
        p1 = canonical_pair(theta, 1, 0)
        p2 = inner_pair(random_unitary(rng, theta))
        p3 = canonical_pair(theta, 0, 1)
        lhs = pair_product(pair_product(p3, p2), p1)
        rhs = pair_product(p3, pair_product(p2, p1))
        assert lhs.equals(rhs)


class TestInnerPair:
    def test_scalar_gives_identity_pair(self, theta):
        w = Element.unit(theta).scaled(ExactScalar.imag_unit())
        pair = inner_pair(w)
        assert pair.equals(UnitaryPair.identity(theta))

    def test_reproduces_conjugation(self, theta):
        rng = rng_from_seed(68)
        for _ in range(8):
            w = random_unitary(rng, theta)
            lam = Endomorphism(inner_pair(w))
            w_star = w.adjoint()
            for g in generator_isometries(theta):
                assert lam.apply(g) == mul(mul(w, g), w_star)

    def test_requires_unitary(self, theta):
        with pytest.raises(NotUnitary):
            inner_pair(gen(theta, "e1", "e1"))

    def test_passes_twisted_check(self, theta):
        rng = rng_from_seed(69)
        for _ in range(5):
            pair = inner_pair(random_unitary(rng, theta))
            ok, _ = twisted_check(pair.U, pair.V)
            assert ok


class TestWitnessCheck:
    def test_identity_witnesses(self, theta):
        lam = Endomorphism.identity(theta)
        one = Element.unit(theta)
        assert automorphism_witness_check(lam, one, one)

    def test_involution_witnesses(self, flip22):
        pair = gallery(flip22, "ex312")
        lam = Endomorphism(pair)
        # the pair itself witnesses invertibility since lam ** 2 = id
        assert automorphism_witness_check(lam, lam.apply(pair.U.adjoint()),
                                          lam.apply(pair.V.adjoint()))

    def test_shift_has_no_trivial_witness(self, theta):
        lam = canonical_endomorphism(theta, 1, 0)
        one = Element.unit(theta)
        assert not automorphism_witness_check(lam, one, one)


class TestAdProductCheck:
    def test_identity_all_levels(self, theta):
        lam = Endomorphism.identity(theta)
        assert ad_product_check(lam, 1) and ad_product_check(lam, 2)

    def test_level_one_is_conjugation_by_w(self, theta):
        rng = rng_from_seed(70)
        pair = inner_pair(random_unitary(rng, theta))
        lam = Endomorphism(pair)
        w = pair.W
        for u in enumerate_words(theta, (1, 1)):
            for v in enumerate_words(theta, (1, 1)):
                x = Element.gen(theta, u, v)
                assert lam.apply(x) == mul(mul(w, x), w.adjoint())
        assert ad_product_check(lam, 1)

    def test_canonical_pair(self, theta):
        lam = canonical_endomorphism(theta, 1, 1)
        assert ad_product_check(lam, 1)

    def test_rejects_bad_level(self, theta):
        with pytest.raises(ValueError):
            ad_product_check(Endomorphism.identity(theta), 0)


class TestPreservesSubalgebra:
    def test_identity(self, theta):
        lam = Endomorphism.identity(theta)
        assert preserves_subalgebra(lam, "core", 1)
        assert preserves_subalgebra(lam, "diagonal", 1)

    def test_canonical_pair_core(self, theta):
        lam = canonical_endomorphism(theta, 1, 1)
        assert preserves_subalgebra(lam, "core", 1)

    def test_mixing_pair_core_fixture(self, flip22):
        # regression fixture: the mixing pair acts trivially on the core
        lam = Endomorphism(gallery(flip22, "ex312"))
        assert preserves_subalgebra(lam, "core", 1)
        assert preserves_subalgebra(lam, "diagonal", 1)

    def test_rejects_unknown(self, theta):
        with pytest.raises(ValueError):
            preserves_subalgebra(Endomorphism.identity(theta), "masa", 1)


class TestGallery:
    def test_ex312_images(self, flip22):
        lam = Endomorphism(gallery(flip22, "ex312"))
        for i in (1, 2):
            assert lam.apply(gen(flip22, f"e{i}", "id")) == gen(flip22, f"f{i}", "id")
            assert lam.apply(gen(flip22, f"f{i}", "id")) == gen(flip22, f"e{i}", "id")

    def test_ex312_involution_and_centrality(self, flip22):
        pair = gallery(flip22, "ex312")
        lam = Endomorphism(pair)
        for g in generator_isometries(flip22):
            assert lam.apply(lam.apply(g)) == g
            assert mul(pair.U, g) == mul(g, pair.U)

    def test_ex312_derived_unitary_is_unit(self, flip22):
        assert gallery(flip22, "ex312").W == Element.unit(flip22)

    def test_ex312_needs_flip(self, id23):
        with pytest.raises(WrongTheta):
            gallery(id23, "ex312")

    def test_ex313(self, id22):
        pair = gallery(id22, "ex313")
        ok, _ = twisted_check(pair.U, pair.V)
        assert ok

    def test_ex313_needs_identity_square(self, flip22, id23):
        with pytest.raises(WrongTheta):
            gallery(flip22, "ex313")
        with pytest.raises(WrongTheta):
            gallery(id23, "ex313")

    def test_ex39_random_unitaries(self, flip22):
        rng = rng_from_seed(71)
        for _ in range(10):
            u = random_unitary(rng, flip22)
            pair = gallery(flip22, "ex39", u=u)
            assert pair.U == u and pair.V == u

    def test_ex39_commutant_criterion_both_ways(self, flip22, id22):
        """(U, U) is twisted iff U commutes with every s_{f_j}* s_{e_i}."""
        rng = rng_from_seed(72)
        for theta in (flip22, id22):
            commutant = [
                mul(Element.gen(theta, EMPTY_WORD, Word((), (j,))),
                    Element.gen(theta, Word((i,), ()), EMPTY_WORD))
                for i in range(1, theta.m + 1)
                for j in range(1, theta.n + 1)
            ]
            seen = {True: 0, False: 0}
            for _ in range(12):
                u = random_unitary(rng, theta)
                twisted, _ = twisted_check(u, u)
                commutes = all((mul(u, c) - mul(c, u)).is_zero() for c in commutant)
                assert twisted == commutes
                seen[twisted] += 1
            if theta is flip22:
                assert seen[False] == 0  # flip admits every unitary
            else:
                assert seen[False] > 0  # identity table rejects some

    def test_ex310_central_scalars(self, theta):
        scalar = Element.unit(theta).scaled(ExactScalar.imag_unit())
        pair = gallery(theta, "ex310", u=scalar, v=scalar)
        ok, _ = twisted_check(pair.U, pair.V)
        assert ok

    def test_ex310_rejects_bad_hypotheses(self, flip22):
        u = gen(flip22, "e1", "e2") + gen(flip22, "e2", "e1")
        with pytest.raises(WrongTheta):
            gallery(flip22, "ex310", u=u, v=Element.unit(flip22))

    def test_ex311_tensor_pair(self, id23):
        pair = gallery(id23, "ex311")
        ok, _ = twisted_check(pair.U, pair.V)
        assert ok

    def test_ex311_needs_identity(self, flip22):
        with pytest.raises(WrongTheta):
            gallery(flip22, "ex311")

    def test_unknown_name(self, theta):
        with pytest.raises(WrongTheta):
            gallery(theta, "ex999")


class TestGaugeConjugation:
    def test_pair_transforms_covariantly(self, theta):
        rng = rng_from_seed(73)
        i = ExactScalar.imag_unit()
        t = (i, i.conjugate())
        t_inv = (i.conjugate(), i)
        for _ in range(4):
            pair = inner_pair(random_unitary(rng, theta))
            lam = Endomorphism(pair)
            conjugated = UnitaryPair(gauge(pair.U, t), gauge(pair.V, t))
            lam_conj = Endomorphism(conjugated)
            for g in generator_isometries(theta):
                lhs = gauge(lam.apply(gauge(g, t_inv)), t)
                assert lhs == lam_conj.apply(g)


def test_endo_from_pair_matches_constructor(flip22):
    u = gen(flip22, "e1", "e2") + gen(flip22, "e2", "e1")
    lam = endo_from_pair(u, u)
    assert lam.apply(gen(flip22, "e1", "id")) == mul(u, gen(flip22, "e1", "id"))


def test_flip_conjugation_pair_components_coincide(flip22):
    """On the flip table the two shifts agree on every element, so the two
    components of a conjugation pair are the same unitary."""
    from twograph.endo import shift_e, shift_f

    rng = rng_from_seed(74)
    for _ in range(8):
        w = random_unitary(rng, flip22)
        assert shift_e(w) == shift_f(w)
        pair = inner_pair(w)
        assert pair.U == pair.V
