"""Brute-force cross-check model: generators acting on a window of words.

Standard generators act on the graded set of words z with d(z) inside a
window (W, W):

    s_u s_v* : z  ->  u z'   if z = v z' (unique factorization),
                      nothing otherwise.

On strata of strictly positive degree the defect-free sums act as the
identity, so comparing the sparse matrix actions of two elements on a high
enough stratum decides equality of the elements — by a code path that
never touches the symbolic product or canonical form. Only the word-level
operations (factor, concatenate) are shared with the symbolic side.
"""

from __future__ import annotations

from .algebra import Element, GenTerm
from .errors import OutOfWindow
from .scalar import ExactScalar, power_of_base
from .semigroup import (
    Degree,
    Permutation2D,
    Word,
    concat,
    deg_add,
    deg_join,
    deg_le,
    deg_sub,
    enumerate_words,
    factor_at,
)


class GradedActionModel:
    """Finite graded action of the dense algebra, used as an oracle."""

    def __init__(self, theta: Permutation2D, window: int = 4):
        if window < 0:
            raise ValueError("window must be nonnegative")
        self.theta = theta
        self.window = window
        self._strata: dict[Degree, list[Word]] = {}

    def stratum(self, degree: Degree) -> list[Word]:
        if not deg_le(degree, (self.window, self.window)):
            raise OutOfWindow(f"stratum {degree} exceeds window {self.window}")
        if degree not in self._strata:
            self._strata[degree] = enumerate_words(self.theta, degree)
        return self._strata[degree]

    def act_term(self, t: GenTerm, z: Word) -> Word | None:
        """Image of the basis word z under s_u s_v*, or None if annihilated.

        Raises OutOfWindow when the image would land outside the window
        (the caller must pick strata with headroom).
        """
        dv = t.v.degree
        if not deg_le(dv, z.degree):
            return None
        out_degree = deg_add(deg_sub(z.degree, dv), t.u.degree)
        if not deg_le(out_degree, (self.window, self.window)):
            raise OutOfWindow(
                f"image stratum {out_degree} exceeds window {self.window}"
            )
        head, tail = factor_at(self.theta, z, dv)
        if head != t.v:
            return None
        return concat(self.theta, t.u, tail)

    def act(self, a: Element, z: Word) -> dict[Word, ExactScalar]:
        """Linear extension of the action; sparse vector keyed by words."""
        out: dict[Word, ExactScalar] = {}
        for t, c in a._terms.items():
            image = self.act_term(t, z)
            if image is None:
                continue
            prev = out.get(image)
            total = c if prev is None else prev + c
            if total.is_zero:
                out.pop(image, None)
            else:
                out[image] = total
        return out

    def _evaluation_stratum(self, *elements: Element) -> Degree:
        """Max v-degree over all raw terms plus (1, 1), so defect-free sums
        act as the identity (strictly positive headroom everywhere)."""
        top = (0, 0)
        for a in elements:
            for t in a._terms:
                top = deg_join(top, t.v.degree)
        return deg_add(top, (1, 1))

    def oracle_equal(self, a: Element, b: Element) -> bool:
        """Equality of elements via their matrix actions on one stratum."""
        a._require_same_theta(b)
        stratum_degree = self._evaluation_stratum(a, b)
        for z in self.stratum(stratum_degree):
            if self.act(a, z) != self.act(b, z):
                return False
        return True

    def oracle_trace(self, x: Element) -> ExactScalar:
        """Normalized diagonal sum on the square stratum containing x.

        x must lie in the gauge-invariant core (each raw term of degree
        difference zero); the result agrees with the distinguished state.
        """
        level = 0
        for t in x._terms:
            if t.degree != (0, 0):
                raise ValueError("trace oracle needs a core element, term "
                                 f"{t} has degree {t.degree}")
            level = max(level, t.v.degree[0], t.v.degree[1])
        total = ExactScalar.zero()
        for z in self.stratum((level, level)):
            diag = self.act(x, z).get(z)
            if diag is not None:
                total = total + diag
        return total * power_of_base(self.theta, (level, level), -1)
