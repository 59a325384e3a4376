"""The dense *-algebra spanned by the standard generators s_u s_v*.

An `Element` is a finite linear combination of `GenTerm`s (ordered word
pairs (u, v) standing for s_u s_v*) with exact scalar coefficients. The
product follows the common-extension expansion

    (s_{u1} s_{v1}*)(s_{u2} s_{v2}*) = sum s_{u1 w1} s_{v2 w2}*

over the pairs (w1, w2) with v1 w1 = u2 w2 at the join degree, so finite
sums stay finite and every identity is decided exactly.

Canonical form: terms are grouped by the degree difference d(u) - d(v);
within a group every term is raised (defect-free expansion) to the
componentwise-max v-degree of the group, then equal word pairs are merged
and zeros dropped. At a fixed degree difference and fixed v-degree the
generators are linearly independent, so an element is zero iff its
canonical form is empty; equality of elements is emptiness of the
canonical difference.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotAPermutation, NotUnitModulus, ThetaMismatch
from .scalar import ExactScalar
from .semigroup import (
    Degree,
    Permutation2D,
    Word,
    EMPTY_WORD,
    _common_extensions_cached,
    concat,
    deg_join,
    deg_le,
    deg_sub,
    enumerate_words,
)


class GenTerm:
    """The standard generator s_u s_v*; hash precomputed (hot dict key)."""

    __slots__ = ("u", "v", "_hash")

    def __init__(self, u: Word, v: Word):
        self.u = u
        self.v = v
        self._hash = hash((u, v))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, GenTerm):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return self._hash

    @property
    def degree(self) -> Degree:
        """d(u) - d(v), an integer pair."""
        return deg_sub(self.u.degree, self.v.degree)

    @property
    def key(self):
        return (self.degree, self.v.key, self.u.key)

    def __str__(self) -> str:
        return f"S[{self.u};{self.v}]"

    def __repr__(self) -> str:
        return f"GenTerm({self})"


class Element:
    """Immutable finite linear combination of standard generators."""

    __slots__ = ("theta", "_terms")

    def __init__(
        self,
        theta: Permutation2D,
        terms: Mapping[GenTerm, ExactScalar] | None = None,
    ):
        clean: dict[GenTerm, ExactScalar] = {}
        if terms:
            for t, c in terms.items():
                if not c.is_zero:
                    prev = clean.get(t)
                    if prev is None:
                        clean[t] = c
                    else:
                        s = prev + c
                        if s.is_zero:
                            del clean[t]
                        else:
                            clean[t] = s
        self.theta = theta
        self._terms = clean

    # --- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, theta: Permutation2D) -> "Element":
        return cls(theta, {})

    @classmethod
    def unit(cls, theta: Permutation2D) -> "Element":
        return cls.gen(theta, EMPTY_WORD, EMPTY_WORD)

    @classmethod
    def gen(cls, theta: Permutation2D, u: Word, v: Word, coeff=None) -> "Element":
        c = ExactScalar.one() if coeff is None else coeff
        return cls(theta, {GenTerm(u, v): c})

    # --- views --------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self._terms

    def terms(self) -> dict[GenTerm, ExactScalar]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[GenTerm, ExactScalar]]:
        return sorted(self._terms.items(), key=lambda tc: tc[0].key)

    def coefficient(self, t: GenTerm) -> ExactScalar:
        return self._terms.get(t, ExactScalar.zero())

    def __len__(self) -> int:
        return len(self._terms)

    # --- linear structure -----------------------------------------------------

    def _require_same_theta(self, other: "Element") -> None:
        if self.theta != other.theta:
            raise ThetaMismatch("elements live over different tables")

    def __add__(self, other) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_theta(other)
        acc = dict(self._terms)
        for t, c in other._terms.items():
            _accumulate(acc, t, c)
        return Element(self.theta, acc)

    def __sub__(self, other) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(
            self.theta, {t: -c for t, c in self._terms.items()}
        )

    def scaled(self, c) -> "Element":
        if isinstance(c, (int, Fraction)):
            c = ExactScalar.rational(c)
        if c.is_zero:
            return Element.zero(self.theta)
        return Element(
            self.theta, {t: c * x for t, x in self._terms.items()}
        )

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return mul(self, other)
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self.scaled(other)
        return NotImplemented

    # --- *-structure ----------------------------------------------------------

    def adjoint(self) -> "Element":
        """Termwise s_u s_v* -> s_v s_u* with conjugated coefficients."""
        return Element(
            self.theta,
            {GenTerm(t.v, t.u): c.conjugate() for t, c in self._terms.items()},
        )

    # --- canonical form ---------------------------------------------------------

    def canonicalize(self) -> "Element":
        """Raise each degree-difference group to its common v-degree and merge."""
        if self._is_level_aligned():
            return self
        groups: dict[Degree, list[tuple[GenTerm, ExactScalar]]] = {}
        for t, c in self._terms.items():
            groups.setdefault(t.degree, []).append((t, c))
        acc: dict[GenTerm, ExactScalar] = {}
        for items in groups.values():
            target = (0, 0)
            for t, _ in items:
                target = deg_join(target, t.v.degree)
            for t, c in items:
                gap = deg_sub(target, t.v.degree)
                if gap == (0, 0):
                    _accumulate(acc, t, c)
                else:
                    for w in enumerate_words(self.theta, gap):
                        _accumulate(
                            acc,
                            GenTerm(
                                concat(self.theta, t.u, w), concat(self.theta, t.v, w)
                            ),
                            c,
                        )
        return Element(self.theta, acc)

    def _is_level_aligned(self) -> bool:
        seen: dict[Degree, Degree] = {}
        for t in self._terms:
            d = t.degree
            if d in seen:
                if seen[d] != t.v.degree:
                    return False
            else:
                seen[d] = t.v.degree
        return True

    def is_zero(self) -> bool:
        return self.canonicalize().is_empty

    def equals(self, other: "Element") -> bool:
        self._require_same_theta(other)
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # algebraic equality is not hash-compatible

    # --- printing ----------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t, c in self.sorted_terms():
            if c.is_one:
                parts.append(str(t))
            else:
                parts.append(f"({c})*{t}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Element({self})"


def _accumulate(acc: dict[GenTerm, ExactScalar], t: GenTerm, c: ExactScalar) -> None:
    prev = acc.get(t)
    if prev is None:
        if not c.is_zero:
            acc[t] = c
    else:
        s = prev + c
        if s.is_zero:
            del acc[t]
        else:
            acc[t] = s


def mul(a: Element, b: Element) -> Element:
    """Exact product via common extensions, canonicalized."""
    a._require_same_theta(b)
    theta = a.theta
    acc: dict[GenTerm, ExactScalar] = {}
    for t1, c1 in a._terms.items():
        for t2, c2 in b._terms.items():
            c = c1 * c2
            for w1, w2 in _common_extensions_cached(theta, t2.u, t1.v):
                _accumulate(
                    acc,
                    GenTerm(concat(theta, t1.u, w1), concat(theta, t2.v, w2)),
                    c,
                )
    return Element(theta, acc).canonicalize()


def adjoint(a: Element) -> Element:
    return a.adjoint()


def raise_level(theta: Permutation2D, t: GenTerm, delta: Degree) -> Element:
    """Defect-free expansion: s_u s_v* = sum over d(w)=delta of s_{uw} s_{vw}*."""
    acc = {
        GenTerm(concat(theta, t.u, w), concat(theta, t.v, w)): ExactScalar.one()
        for w in enumerate_words(theta, delta)
    }
    return Element(theta, acc)


def canonicalize(a: Element) -> Element:
    return a.canonicalize()


def degree_component(a: Element, delta: Degree) -> Element:
    """Projection onto the terms of degree difference delta.

    Rewriting never mixes degree differences, so the projection is
    well-defined on any representation. delta = (0, 0) is the expectation
    onto the gauge-invariant core.
    """
    return Element(
        a.theta,
        {t: c for t, c in a._terms.items() if t.degree == delta},
    )


def support_degrees(a: Element) -> set[Degree]:
    """Degree differences present in the canonical form."""
    return {t.degree for t in a.canonicalize()._terms}


def _as_gaussian_pair(t) -> tuple[Fraction, Fraction]:
    if isinstance(t, ExactScalar):
        g = t.as_gaussian()
        if g is None:
            raise NotUnitModulus("torus points must be plain Gaussian rationals")
        return g
    re, im = t
    return Fraction(re), Fraction(im)


def _gaussian_power(g: tuple[Fraction, Fraction], k: int) -> ExactScalar:
    # |g| = 1, so negative powers are conjugate powers
    base = ExactScalar.gaussian(*g)
    if k < 0:
        base = base.conjugate()
        k = -k
    return base ** k


def gauge(a: Element, t) -> Element:
    """The torus action: scales s_u s_v* by t^(d(u) - d(v)), exactly.

    `t` is a pair of unit-modulus Gaussian rationals, each given as an
    ExactScalar or an (re, im) pair.
    """
    t1, t2 = (_as_gaussian_pair(x) for x in t)
    for re, im in (t1, t2):
        if re * re + im * im != 1:
            raise NotUnitModulus(f"|t|^2 = {re * re + im * im} != 1")
    acc = {}
    for term, c in a._terms.items():
        d1, d2 = term.degree
        acc[term] = c * _gaussian_power(t1, d1) * _gaussian_power(t2, d2)
    return Element(a.theta, acc)


def gauge_float(a: Element, t: tuple[complex, complex]) -> dict[GenTerm, complex]:
    """Float-mode torus action; returns coefficient map, not an Element."""
    t1, t2 = complex(t[0]), complex(t[1])
    out = {}
    for term, c in a._terms.items():
        d1, d2 = term.degree
        out[term] = c.to_complex() * t1 ** d1 * t2 ** d2
    return out


def is_unitary(a: Element) -> bool:
    """True iff a a* = I = a* a exactly."""
    one = Element.unit(a.theta)
    star = a.adjoint()
    return (mul(a, star) - one).is_zero() and (mul(star, a) - one).is_zero()


def in_subalgebra(a: Element, which: str, level: int | None = None) -> bool:
    """Membership in the gauge-invariant core ("core") or its diagonal
    ("diagonal"), decided on the canonical form.

    With `level` = k the word degrees are additionally required to fit
    inside (k, k). Raising maps diagonal terms to diagonal terms injectively,
    so the structural tests below are faithful.
    """
    if which not in ("core", "diagonal"):
        raise ValueError(f"which must be 'core' or 'diagonal', got {which!r}")
    canon = a.canonicalize()
    for t in canon._terms:
        if t.degree != (0, 0):
            return False
        if which == "diagonal" and t.u != t.v:
            return False
        if level is not None and not deg_le(t.v.degree, (level, level)):
            return False
    return True


def permutation_unitary(
    theta: Permutation2D,
    delta: Degree,
    perm: Iterable[int] | None = None,
    phases: Iterable | None = None,
) -> Element:
    """sum over k of phase_k * s_{w_{perm(k)}} s_{w_k}* on the degree-delta words.

    `perm` is a list of image indices (identity when omitted); phases are
    unit-modulus Gaussian rationals (all 1 when omitted). The result is
    always unitary.
    """
    words = enumerate_words(theta, delta)
    size = len(words)
    perm = list(range(size)) if perm is None else list(perm)
    if sorted(perm) != list(range(size)):
        raise NotAPermutation(f"expected a permutation of 0..{size - 1}")
    if phases is None:
        phase_list = [ExactScalar.one()] * size
    else:
        phase_list = []
        for ph in phases:
            re, im = _as_gaussian_pair(ph)
            if re * re + im * im != 1:
                raise NotUnitModulus("phases must have modulus one")
            phase_list.append(ExactScalar.gaussian(re, im))
        if len(phase_list) != size:
            raise NotAPermutation(f"expected {size} phases, got {len(phase_list)}")
    acc = {
        GenTerm(words[perm[k]], words[k]): phase_list[k] for k in range(size)
    }
    return Element(theta, acc)
