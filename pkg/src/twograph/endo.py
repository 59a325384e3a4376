"""Unital endomorphisms from twisted unitary pairs.

A pair of unitaries (U, V) is *twisted* when U shift_e(V) = V shift_f(U),
where shift_e and shift_f are the canonical endomorphisms of multidegree
(1, 0) and (0, 1). Twisted pairs are exactly the pairs for which

    s_{e_i} -> U s_{e_i},   s_{f_j} -> V s_{f_j}

extends to a unital endomorphism; the inverse direction recovers the pair
from the generator images as (sum lam(s_{e_i}) s_{e_i}*,
sum lam(s_{f_j}) s_{f_j}*). The derived unitary W = U shift_e(V) determines
the action on all words of degree (1, 1) (lam(s_w) = W s_w) and is cached
on the pair. Composition multiplies pairs by
(U2, V2) . (U1, V1) = (lam2(U1) U2, lam2(V1) V2), and conjugation by a
unitary W corresponds to the pair (W shift_e(W)*, W shift_f(W)*).

The subalgebra-preservation questions are answered here only at finite
level: the checks run over a spanning set of the level-k core (or its
diagonal) and are necessary conditions for the full statements.
"""

from __future__ import annotations

from .algebra import Element, GenTerm, is_unitary, mul, permutation_unitary
from .errors import NotTwisted, NotUnitary, RelationsViolated, ThetaMismatch, WrongTheta
from .scalar import ExactScalar
from .semigroup import (
    EMPTY_WORD,
    Permutation2D,
    Word,
    concat,
    enumerate_words,
    factor_at,
)


def canonical_endomorphism_apply(theta: Permutation2D, p: int, q: int, x: Element) -> Element:
    """The canonical endomorphism of multidegree (p, q):
    X -> sum over d(w) = (p, q) of s_w X s_w*."""
    if x.theta != theta:
        raise ThetaMismatch("element lives over a different table")
    acc = Element.zero(theta)
    for w in enumerate_words(theta, (p, q)):
        sw = Element.gen(theta, w, EMPTY_WORD)
        acc = acc + mul(mul(sw, x), sw.adjoint())
    return acc.canonicalize()


def shift_e(x: Element) -> Element:
    """Canonical endomorphism of multidegree (1, 0)."""
    return canonical_endomorphism_apply(x.theta, 1, 0, x)


def shift_f(x: Element) -> Element:
    """Canonical endomorphism of multidegree (0, 1)."""
    return canonical_endomorphism_apply(x.theta, 0, 1, x)


def twisted_check(u: Element, v: Element) -> tuple[bool, Element | None]:
    """Whether (u, v) is a twisted unitary pair.

    Returns (True, None) on success and (False, residual) with the nonzero
    residual u*shift_e(v) - v*shift_f(u) (or None if a unitarity check
    failed first).
    """
    u._require_same_theta(v)
    if not is_unitary(u) or not is_unitary(v):
        return False, None
    residual = (mul(u, shift_e(v)) - mul(v, shift_f(u))).canonicalize()
    if residual.is_empty:
        return True, None
    return False, residual


class UnitaryPair:
    """A twisted pair (U, V) with its derived unitary W cached."""

    __slots__ = ("theta", "U", "V", "W")

    def __init__(self, u: Element, v: Element, check: bool = True):
        u._require_same_theta(v)
        self.theta = u.theta
        self.U = u.canonicalize()
        self.V = v.canonicalize()
        if check:
            ok, residual = twisted_check(u, v)
            if not ok:
                raise NotTwisted(
                    "pair is not twisted"
                    + (f"; residual {residual}" if residual is not None else "")
                )
        self.W = mul(u, shift_e(v))
        if check:
            # the two expressions for W agree; cheap consistency assertion
            other = mul(v, shift_f(u))
            if not (self.W - other).is_zero():
                raise NotTwisted("derived unitary differs between the two expressions")

    @classmethod
    def identity(cls, theta: Permutation2D) -> "UnitaryPair":
        one = Element.unit(theta)
        return cls(one, one, check=False)._finish_identity()

    def _finish_identity(self) -> "UnitaryPair":
        return self

    def equals(self, other: "UnitaryPair") -> bool:
        return self.U == other.U and self.V == other.V

    def __repr__(self) -> str:
        return f"UnitaryPair(U={self.U}, V={self.V})"


class Endomorphism:
    """A unital endomorphism given by its twisted pair; applies to elements.

    Word images are built from the cached letter images and memoized; the
    action on a generator is lam(s_u) lam(s_v)*. Well-definedness over the
    choice of spelling is guaranteed by the twisted property and asserted
    once on a mixed word at construction.
    """

    __slots__ = ("pair", "theta", "_e_images", "_f_images", "_word_cache")

    def __init__(self, pair: UnitaryPair):
        self.pair = pair
        self.theta = pair.theta
        theta = self.theta
        self._e_images = {
            i: mul(pair.U, Element.gen(theta, Word((i,), ()), EMPTY_WORD))
            for i in range(1, theta.m + 1)
        }
        self._f_images = {
            j: mul(pair.V, Element.gen(theta, Word((), (j,)), EMPTY_WORD))
            for j in range(1, theta.n + 1)
        }
        self._word_cache: dict[Word, Element] = {EMPTY_WORD: Element.unit(theta)}
        self._assert_well_defined()

    def _assert_well_defined(self) -> None:
        theta = self.theta
        mixed = Word((1,), (1,))
        e_first = mul(self._e_images[1], self._f_images[1])
        head, tail = factor_at(theta, mixed, (0, 1))
        f_first = mul(self._f_images[head.f_block[0]], self._e_images[tail.e_block[0]])
        if not (e_first - f_first).is_zero():
            raise RelationsViolated("generator images break the commutation relations")

    @classmethod
    def identity(cls, theta: Permutation2D) -> "Endomorphism":
        return cls(UnitaryPair.identity(theta))

    def word_image(self, w: Word) -> Element:
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        if w.e_block:
            head = self._e_images[w.e_block[0]]
            rest = Word(w.e_block[1:], w.f_block)
        else:
            head = self._f_images[w.f_block[0]]
            rest = Word((), w.f_block[1:])
        out = mul(head, self.word_image(rest))
        self._word_cache[w] = out
        return out

    def apply(self, x: Element) -> Element:
        """Multiplicative *-extension to the whole dense algebra."""
        if x.theta != self.theta:
            raise ThetaMismatch("element lives over a different table")
        acc = Element.zero(self.theta)
        for t, c in x._terms.items():
            img = mul(self.word_image(t.u), self.word_image(t.v).adjoint())
            acc = acc + img.scaled(c)
        return acc.canonicalize()

    def generator_images(self) -> tuple[dict[int, Element], dict[int, Element]]:
        return dict(self._e_images), dict(self._f_images)


def endo_from_pair(u: Element, v: Element) -> Endomorphism:
    """Validate the twisted property and build the endomorphism."""
    return Endomorphism(UnitaryPair(u, v))


def pair_from_generator_map(
    theta: Permutation2D,
    e_images: dict[int, Element],
    f_images: dict[int, Element],
) -> UnitaryPair:
    """Inverse direction: recover (U, V) from prospective generator images.

    The images must satisfy the commutation relations and assemble into
    unitaries; otherwise RelationsViolated is raised.
    """
    for (i, j), (i2, j2) in theta.table.items():
        lhs = mul(e_images[i], f_images[j])
        rhs = mul(f_images[j2], e_images[i2])
        if not (lhs - rhs).is_zero():
            raise RelationsViolated(
                f"images of e{i} f{j} and f{j2} e{i2} disagree"
            )
    u = Element.zero(theta)
    for i in range(1, theta.m + 1):
        u = u + mul(e_images[i], Element.gen(theta, EMPTY_WORD, Word((i,), ())))
    v = Element.zero(theta)
    for j in range(1, theta.n + 1):
        v = v + mul(f_images[j], Element.gen(theta, EMPTY_WORD, Word((), (j,))))
    if not (is_unitary(u) and is_unitary(v)):
        raise RelationsViolated("images do not assemble into unitaries")
    return UnitaryPair(u, v)


def canonical_pair(theta: Permutation2D, p: int, q: int) -> UnitaryPair:
    """The twisted pair of the canonical endomorphism of multidegree (p, q):

        U = sum_i sum_{d(w)=(p,q)} s_{w e_i} s_{e_i w}*,
        V = sum_j sum_{d(w)=(p,q)} s_{w f_j} s_{f_j w}*.
    """
    words = enumerate_words(theta, (p, q))
    one = ExactScalar.one()
    u_terms: dict[GenTerm, ExactScalar] = {}
    v_terms: dict[GenTerm, ExactScalar] = {}
    for w in words:
        for i in range(1, theta.m + 1):
            ei = Word((i,), ())
            u_terms[GenTerm(concat(theta, w, ei), concat(theta, ei, w))] = one
        for j in range(1, theta.n + 1):
            fj = Word((), (j,))
            v_terms[GenTerm(concat(theta, w, fj), concat(theta, fj, w))] = one
    return UnitaryPair(Element(theta, u_terms), Element(theta, v_terms))


def canonical_endomorphism(theta: Permutation2D, p: int, q: int) -> Endomorphism:
    return Endomorphism(canonical_pair(theta, p, q))


def compose(outer: Endomorphism, inner: Endomorphism) -> UnitaryPair:
    """Pair of the composite outer o inner:
    (outer(U1) U2, outer(V1) V2) for inner pair (U1, V1), outer pair (U2, V2)."""
    if outer.theta != inner.theta:
        raise ThetaMismatch("endomorphisms live over different tables")
    u = mul(outer.apply(inner.pair.U), outer.pair.U)
    v = mul(outer.apply(inner.pair.V), outer.pair.V)
    return UnitaryPair(u, v)


def pair_product(p2: UnitaryPair, p1: UnitaryPair) -> UnitaryPair:
    """Semigroup product on twisted pairs, mirroring composition."""
    return compose(Endomorphism(p2), Endomorphism(p1))


def inner_pair(w: Element) -> UnitaryPair:
    """The twisted pair (W shift_e(W)*, W shift_f(W)*) of conjugation by W."""
    if not is_unitary(w):
        raise NotUnitary("conjugation requires a unitary")
    u = mul(w, shift_e(w).adjoint())
    v = mul(w, shift_f(w).adjoint())
    return UnitaryPair(u, v)


def automorphism_witness_check(
    endo: Endomorphism, u0: Element, v0: Element
) -> bool:
    """Verify candidate witnesses for invertibility: lam(U0) = U* and
    lam(V0) = V* exactly. (Being an automorphism in general is not decided.)"""
    return (
        endo.apply(u0) == endo.pair.U.adjoint()
        and endo.apply(v0) == endo.pair.V.adjoint()
    )


def _cascade_unitary(endo: Endomorphism, k: int) -> Element:
    """W * lam_(1,1)(W) * ... * lam_(1,1)^(k-1)(W)."""
    theta = endo.theta
    w = endo.pair.W
    acc = w
    stage = w
    for _ in range(1, k):
        stage = canonical_endomorphism_apply(theta, 1, 1, stage)
        acc = mul(acc, stage)
    return acc


def ad_product_check(endo: Endomorphism, k: int) -> bool:
    """Exact finite identity on the level-k core: the endomorphism agrees
    with conjugation by the cascade unitary on every generator with
    d(u) = d(v) = (k, k)."""
    if k < 1:
        raise ValueError("level must be >= 1")
    theta = endo.theta
    p = _cascade_unitary(endo, k)
    p_star = p.adjoint()
    words = enumerate_words(theta, (k, k))
    for u in words:
        for v in words:
            x = Element.gen(theta, u, v)
            lhs = endo.apply(x)
            rhs = mul(mul(p, x), p_star)
            if not (lhs - rhs).is_zero():
                return False
    return True


def preserves_subalgebra(endo: Endomorphism, which: str, k: int) -> bool:
    """Level-k necessary condition for preserving the core ("core") or its
    diagonal ("diagonal"): checks membership of the image of every spanning
    generator at level k."""
    if k < 1:
        raise ValueError("level must be >= 1")
    from .algebra import in_subalgebra

    theta = endo.theta
    words = enumerate_words(theta, (k, k))
    if which == "core":
        pairs = ((u, v) for u in words for v in words)
    elif which == "diagonal":
        pairs = ((w, w) for w in words)
    else:
        raise ValueError(f"which must be 'core' or 'diagonal', got {which!r}")
    for u, v in pairs:
        img = endo.apply(Element.gen(theta, u, v))
        if not in_subalgebra(img, which):
            return False
    return True


# --- built-in example pairs -------------------------------------------------

def _mixing_unitary(theta: Permutation2D) -> Element:
    """sum_j s_{f_j} s_{e_j}*; needs m = n."""
    acc = {
        GenTerm(Word((), (j,)), Word((j,), ())): ExactScalar.one()
        for j in range(1, theta.m + 1)
    }
    return Element(theta, acc)


def gallery(theta: Permutation2D, name: str, u: Element | None = None, v: Element | None = None) -> UnitaryPair:
    """Built-in example pairs.

    ex39   flip table, m = n: (U, U) for any supplied unitary U
           (default: the flip-flop on the first two e-generators).
    ex310  any table: a supplied pair (U, V) with U V = V U, U commuting
           with every s_{f_j} and V with every s_{e_i}; the hypotheses are
           verified exactly (default: scalar pair (iI, iI)).
    ex311  identity table: U a unitary word in the e-generators only, V in
           the f-generators only (defaults: flip-flops); checked as ex310.
    ex312  flip table, m = n: the central mixing unitary
           U = sum_j s_{f_j} s_{e_j}* with pair (U, U*).
    ex313  identity table, m = n: same U with pair (U, U*).
    """
    if name == "ex39":
        _require(theta.m == theta.n, "ex39 needs m = n")
        _require(theta == Permutation2D.flip(theta.m, theta.n), "ex39 needs the flip table")
        if u is None:
            u = _default_flipflop_e(theta)
        if not is_unitary(u):
            raise NotUnitary("supplied element is not unitary")
        return UnitaryPair(u, u)
    if name == "ex310":
        if u is None or v is None:
            scalar_i = Element.unit(theta).scaled(ExactScalar.imag_unit())
            u = scalar_i if u is None else u
            v = scalar_i if v is None else v
        _check_commuting_hypotheses(theta, u, v)
        return UnitaryPair(u, v)
    if name == "ex311":
        _require(theta == Permutation2D.identity(theta.m, theta.n), "ex311 needs the identity table")
        if u is None:
            u = _default_flipflop_e(theta)
        if v is None:
            v = _default_flipflop_f(theta)
        _require(all(not t.u.f_block and not t.v.f_block for t in u._terms),
                 "ex311 needs U in the e-generated subalgebra")
        _require(all(not t.u.e_block and not t.v.e_block for t in v._terms),
                 "ex311 needs V in the f-generated subalgebra")
        _check_commuting_hypotheses(theta, u, v)
        return UnitaryPair(u, v)
    if name == "ex312":
        _require(theta.m == theta.n, "ex312 needs m = n")
        _require(theta == Permutation2D.flip(theta.m, theta.n), "ex312 needs the flip table")
        w = _mixing_unitary(theta)
        return UnitaryPair(w, w.adjoint())
    if name == "ex313":
        _require(theta.m == theta.n, "ex313 needs m = n")
        _require(theta == Permutation2D.identity(theta.m, theta.n), "ex313 needs the identity table")
        w = _mixing_unitary(theta)
        return UnitaryPair(w, w.adjoint())
    raise WrongTheta(f"unknown gallery name {name!r}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise WrongTheta(message)


def _default_flipflop_e(theta: Permutation2D) -> Element:
    _require(theta.m >= 2, "default flip-flop needs at least two e-generators")
    perm = list(range(theta.m))
    perm[0], perm[1] = perm[1], perm[0]
    return permutation_unitary(theta, (1, 0), perm)


def _default_flipflop_f(theta: Permutation2D) -> Element:
    _require(theta.n >= 2, "default flip-flop needs at least two f-generators")
    perm = list(range(theta.n))
    perm[0], perm[1] = perm[1], perm[0]
    return permutation_unitary(theta, (0, 1), perm)


def _check_commuting_hypotheses(theta: Permutation2D, u: Element, v: Element) -> None:
    if not (is_unitary(u) and is_unitary(v)):
        raise NotUnitary("supplied elements are not unitary")
    if not (mul(u, v) - mul(v, u)).is_zero():
        raise WrongTheta("U and V do not commute")
    for j in range(1, theta.n + 1):
        sf = Element.gen(theta, Word((), (j,)), EMPTY_WORD)
        if not (mul(u, sf) - mul(sf, u)).is_zero():
            raise WrongTheta(f"U does not commute with the f{j} isometry")
    for i in range(1, theta.m + 1):
        se = Element.gen(theta, Word((i,), ()), EMPTY_WORD)
        if not (mul(v, se) - mul(se, v)).is_zero():
            raise WrongTheta(f"V does not commute with the e{i} isometry")
