"""Exact scalars: Gaussian rationals times radical monomials.

Every coefficient produced by the state, the grading operators and the
modular machinery lives in the ring of finite sums

    sum over k of (a_k + b_k i) * prod over primes p of p^(r_{k,p})

with a_k, b_k rational and r_{k,p} rational. Canonical form keeps each
exponent's fractional part in [0, 1) (integer parts are folded into the
rational coefficient), stores bases prime-factorized, and merges equal
monomials. Zero-testing is then structural: monomials with distinct
fractional exponent vectors over distinct primes are linearly independent
over the Gaussian rationals, so a scalar is zero iff it has no terms.

Prime-factorizing the bases matters: with base counts 4 and 2 the products
4^a * 2^b collide (4 * 2^-2 = 1) and only the factored form detects it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

Monomial = tuple[tuple[int, Fraction], ...]  # ((prime, fractional exponent), ...)
Gaussian = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _factorize(k: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if k < 1:
        raise ValueError(f"base must be a positive integer, got {k}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            out[d] = out.get(d, 0) + 1
            k //= d
        d += 1
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def _canon_terms(raw: Iterable[tuple[dict[int, Fraction], Gaussian]]) -> dict[Monomial, Gaussian]:
    """Fold integer exponent parts into coefficients and merge monomials."""
    acc: dict[Monomial, Gaussian] = {}
    for exps, (re, im) in raw:
        scale = _ONE
        frac_part: dict[int, Fraction] = {}
        for p, r in exps.items():
            if r == 0:
                continue
            whole = r.numerator // r.denominator  # floor
            frac = r - whole
            if whole:
                scale *= Fraction(p) ** whole
            if frac:
                frac_part[p] = frac_part.get(p, _ZERO) + frac
        # summed fractional parts can reach [1, 2); fold once more
        mono_items = []
        for p, r in sorted(frac_part.items()):
            if r >= 1:
                scale *= p
                r -= 1
            if r:
                mono_items.append((p, r))
        mono = tuple(mono_items)
        re, im = re * scale, im * scale
        if re or im:
            ore, oim = acc.get(mono, (_ZERO, _ZERO))
            nre, nim = ore + re, oim + im
            if nre or nim:
                acc[mono] = (nre, nim)
            elif mono in acc:
                del acc[mono]
    return acc


class ExactScalar:
    """Immutable element of the coefficient ring, always in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[Monomial, Gaussian], _canonical: bool = False):
        if not _canonical:
            terms = _canon_terms(
                (dict(mono), coeff) for mono, coeff in terms.items()
            )
        self._terms = terms
        self._hash = None

    # --- constructors -----------------------------------------------------
    # zero() and one() return interned instances so the arithmetic fast
    # paths can use identity checks.

    @classmethod
    def zero(cls) -> "ExactScalar":
        return _ZERO_SCALAR

    @classmethod
    def rational(cls, x) -> "ExactScalar":
        x = Fraction(x)
        if x == 0:
            return _ZERO_SCALAR
        if x == 1:
            return _ONE_SCALAR
        return cls({(): (x, _ZERO)}, _canonical=True)

    @classmethod
    def one(cls) -> "ExactScalar":
        return _ONE_SCALAR

    @classmethod
    def gaussian(cls, re, im) -> "ExactScalar":
        re, im = Fraction(re), Fraction(im)
        if im == 0:
            return cls.rational(re)
        return cls({(): (re, im)}, _canonical=True)

    @classmethod
    def imag_unit(cls) -> "ExactScalar":
        return cls.gaussian(0, 1)

    @classmethod
    def root(cls, base: int, exponent) -> "ExactScalar":
        """base^exponent for a positive integer base and rational exponent."""
        exponent = Fraction(exponent)
        exps = {p: a * exponent for p, a in _factorize(base).items()}
        return cls._from_raw([(exps, (_ONE, _ZERO))])

    @classmethod
    def _from_raw(cls, raw) -> "ExactScalar":
        terms = _canon_terms(raw)
        if not terms:
            return _ZERO_SCALAR
        if terms == _ONE_TERMS:
            return _ONE_SCALAR
        return cls(terms, _canonical=True)

    # --- structure --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == _ONE_TERMS

    def __bool__(self) -> bool:
        return bool(self._terms)

    def as_gaussian(self) -> Gaussian | None:
        """The (re, im) pair when the scalar is a plain Gaussian rational."""
        if not self._terms:
            return (_ZERO, _ZERO)
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        return None

    def sorted_terms(self) -> list[tuple[Monomial, Gaussian]]:
        return sorted(self._terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.rational(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.sorted_terms()))
        return self._hash

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "ExactScalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for m, (re, im) in other._terms.items():
            ore, oim = acc.get(m, (_ZERO, _ZERO))
            nre, nim = ore + re, oim + im
            if nre or nim:
                acc[m] = (nre, nim)
            elif m in acc:
                del acc[m]
        return ExactScalar(acc, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(
            {m: (-re, -im) for m, (re, im) in self._terms.items()}, _canonical=True
        )

    def __sub__(self, other) -> "ExactScalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExactScalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "ExactScalar":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO_SCALAR
        if self is _ONE_SCALAR or self._terms == _ONE_TERMS:
            return other
        if other is _ONE_SCALAR or other._terms == _ONE_TERMS:
            return self
        raw = []
        for m1, (a, b) in self._terms.items():
            d1 = dict(m1)
            for m2, (c, d) in other._terms.items():
                exps = dict(d1)
                for p, r in m2:
                    exps[p] = exps.get(p, _ZERO) + r
                raw.append((exps, (a * c - b * d, a * d + b * c)))
        return ExactScalar._from_raw(raw)

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        """Complex conjugation; monomials are positive reals, so they are fixed."""
        for _, im in self._terms.values():
            if im:
                return ExactScalar(
                    {m: (re, -im) for m, (re, im) in self._terms.items()},
                    _canonical=True,
                )
        return self

    def inverse(self) -> "ExactScalar":
        """Multiplicative inverse; defined for single-term scalars only."""
        if len(self._terms) != 1:
            raise ZeroDivisionError("can only invert single-term scalars")
        ((mono, (re, im)),) = self._terms.items()
        norm = re * re + im * im
        exps = {p: -r for p, r in mono}
        return ExactScalar._from_raw([(exps, (re / norm, -im / norm))])

    def __pow__(self, k: int) -> "ExactScalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ExactScalar.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- numeric view ---------------------------------------------------------

    def to_complex(self) -> complex:
        """Double-precision value; error is a few ulp per term (each term is a
        product of one float pow per prime and one complex multiply)."""
        total = 0j
        for mono, (re, im) in self._terms.items():
            val = complex(re) + complex(im) * 1j
            for p, r in mono:
                val *= math.pow(p, float(r))
            total += val
        return total

    # --- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            parts.append(_term_str(mono, coeff))
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self) -> str:
        return f"ExactScalar({self})"


_ONE_TERMS: dict[Monomial, Gaussian] = {(): (_ONE, _ZERO)}
_ZERO_SCALAR = ExactScalar({}, _canonical=True)
_ONE_SCALAR = ExactScalar(dict(_ONE_TERMS), _canonical=True)


def _coerce(x) -> ExactScalar | None:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar.rational(x)
    return None


def _frac_str(x: Fraction) -> str:
    return str(x)  # Fraction prints p or p/q


def _term_str(mono: Monomial, coeff: Gaussian) -> str:
    re, im = coeff
    if im == 0:
        g = _frac_str(re)
    elif re == 0:
        g = _frac_str(im) + "i"
    else:
        sign = "+" if im > 0 else "-"
        g = f"({_frac_str(re)}{sign}{_frac_str(abs(im))}i)"
    factors = [f"{p}^({_frac_str(r)})" for p, r in mono]
    if not factors:
        return g
    if g == "1":
        return "*".join(factors)
    if g == "-1":
        return "-" + "*".join(factors)
    return g + "*" + "*".join(factors)


def power_of_base(theta, delta, z) -> ExactScalar:
    """m^(z*delta_1) * n^(z*delta_2) in canonical form.

    `theta` only contributes the generator counts (m, n); delta is an integer
    pair, z a rational. Shared prime factors of m and n combine correctly
    because bases are stored factorized.
    """
    z = Fraction(z)
    return ExactScalar.root(theta.m, z * delta[0]) * ExactScalar.root(theta.n, z * delta[1])
