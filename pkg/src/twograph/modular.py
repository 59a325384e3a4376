"""The distinguished state and its modular objects.

The state is the trace on the gauge-invariant core composed with the
gauge-averaging expectation. On a standard generator it evaluates to

    omega(s_u s_v*) = [u == v] * m^(-a) n^(-b)   where d(u) = (a, b),

which makes it a faithful, gauge-invariant state, and <A|B> = omega(A* B)
an inner product (linear in the second slot). On the span of the
generators the Tomita involution A -> A*, its adjoint, the modular
conjugation and the powers of the modular operator all act termwise with
explicit monomial coefficients in m and n. They are computed here exactly;
real-time modular flow (irrational phases) is float-mode only. The flow at
the distinguished imaginary time is the grading operator entering the
equilibrium identity omega(AB) = omega(flow_i(B) A), checked exactly by
`kms_check`.

All coefficient factors depend only on the degree difference of a term, so
each operator is well-defined on any representation, not just canonical
ones.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, GenTerm, mul
from .scalar import ExactScalar, power_of_base
from .semigroup import Degree, Permutation2D, deg_sub


def omega(a: Element) -> ExactScalar:
    """The distinguished state, evaluated termwise."""
    total = ExactScalar.zero()
    for t, c in a._terms.items():
        if t.u == t.v:
            total = total + c * power_of_base(a.theta, t.u.degree, -1)
    return total


def inner(a: Element, b: Element) -> ExactScalar:
    """<a|b> = omega(a* b); conjugate-symmetric, linear in b."""
    a._require_same_theta(b)
    return omega(mul(a.adjoint(), b))


def tomita_s(a: Element) -> Element:
    """The closable involution A -> A* (anti-linear)."""
    return a.adjoint()


def tomita_f(a: Element) -> Element:
    """Adjoint of the involution: scales-and-swaps s_u s_v* by n^(d(u)-d(v))."""
    acc = {}
    for t, c in a._terms.items():
        factor = power_of_base(a.theta, t.degree, 1)
        _add(acc, GenTerm(t.v, t.u), c.conjugate() * factor)
    return Element(a.theta, acc)


def modular_conjugation(a: Element) -> Element:
    """Anti-unitary J: s_u s_v* -> n^((d(u)-d(v))/2) s_v s_u*."""
    half = Fraction(1, 2)
    acc = {}
    for t, c in a._terms.items():
        factor = power_of_base(a.theta, t.degree, half)
        _add(acc, GenTerm(t.v, t.u), c.conjugate() * factor)
    return Element(a.theta, acc)


def modular_power(z, a: Element) -> Element:
    """The z-th power of the modular operator, exact for rational z:
    scales s_u s_v* by n^(z (d(v)-d(u)))."""
    z = Fraction(z)
    acc = {}
    for t, c in a._terms.items():
        factor = power_of_base(a.theta, deg_sub(t.v.degree, t.u.degree), z)
        _add(acc, t, c * factor)
    return Element(a.theta, acc)


def modular_flow(t, a: Element):
    """Modular automorphism group on generators.

    At the special value t = "i" (analytic continuation) the action is the
    exact grading s_u s_v* -> n^(d(u)-d(v)) s_u s_v* and an Element is
    returned. At real t the phases n^(it(d(v)-d(u))) are irrational, so a
    float coefficient map {term: complex} is returned instead.
    """
    if t == "i":
        acc = {}
        for term, c in a._terms.items():
            factor = power_of_base(a.theta, term.degree, 1)
            _add(acc, term, c * factor)
        return Element(a.theta, acc)
    t = float(t)
    lm, ln = math.log(a.theta.m), math.log(a.theta.n)
    out = {}
    for term, c in a._terms.items():
        (du1, du2), (dv1, dv2) = term.u.degree, term.v.degree
        phase = cmath.exp(1j * t * (lm * (dv1 - du1) + ln * (dv2 - du2)))
        out[term] = c.to_complex() * phase
    return out


def kms_check(a: Element, b: Element) -> tuple[bool, ExactScalar, ExactScalar]:
    """Exact equilibrium identity: omega(AB) == omega(flow_i(B) A).

    Returns (equal, lhs, rhs) so failures carry their witnesses.
    """
    lhs = omega(mul(a, b))
    rhs = omega(mul(modular_flow("i", b), a))
    return lhs == rhs, lhs, rhs


def gram_matrix(basis: list[Element]) -> list[list[ExactScalar]]:
    """G[a][b] = <basis_a | basis_b>; Hermitian by construction."""
    size = len(basis)
    gram: list[list[ExactScalar]] = [[ExactScalar.zero()] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            val = inner(basis[i], basis[j])
            gram[i][j] = val
            if i != j:
                gram[j][i] = val.conjugate()
    return gram


def gram_matrix_float(gram: list[list[ExactScalar]]):
    """Complex ndarray view of an exact Gram matrix."""
    import numpy as np

    size = len(gram)
    out = np.zeros((size, size), dtype=complex)
    for i in range(size):
        for j in range(size):
            out[i, j] = gram[i][j].to_complex()
    return out


def modular_spectrum_window(theta: Permutation2D, window: int) -> list[ExactScalar]:
    """The points m^a n^b with |a|, |b| <= window, deduplicated exactly and
    sorted by numeric value. A finite shadow of the modular spectrum; no
    closure claim is made."""
    if window < 0:
        raise ValueError("window must be nonnegative")
    seen: dict[ExactScalar, float] = {}
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            val = power_of_base(theta, (a, b), 1)
            if val not in seen:
                seen[val] = val.to_complex().real
    return [v for v, _ in sorted(seen.items(), key=lambda kv: kv[1])]


def flow_fixed_degree(theta: Permutation2D, delta: Degree) -> bool:
    """True iff generators of degree difference delta are fixed by the
    modular flow, i.e. m^(delta_1) n^(delta_2) = 1 exactly."""
    return power_of_base(theta, delta, 1) == ExactScalar.one()


@dataclass(frozen=True)
class ModularContext:
    """Bundles the ambient table with the float comparison tolerance."""

    theta: Permutation2D
    float_tolerance: float = 1e-9

    def __post_init__(self):
        if self.float_tolerance < 0:
            raise ValueError("tolerance must be nonnegative")

    omega = staticmethod(omega)
    inner = staticmethod(inner)
    tomita_s = staticmethod(tomita_s)
    tomita_f = staticmethod(tomita_f)
    modular_conjugation = staticmethod(modular_conjugation)
    modular_power = staticmethod(modular_power)
    modular_flow = staticmethod(modular_flow)
    kms_check = staticmethod(kms_check)
    gram_matrix = staticmethod(gram_matrix)

    def spectrum_window(self, window: int) -> list[ExactScalar]:
        return modular_spectrum_window(self.theta, window)

    def fixed_degree(self, delta: Degree) -> bool:
        return flow_fixed_degree(self.theta, delta)


def _add(acc, t, c):
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
