"""Words over two families of generators with permutation commutation.

The unital semigroup studied here has generators e_1..e_m and f_1..f_n,
free within each family, with the cross relations

    e_i f_j = f_{j'} e_{i'}   where theta(i, j) = (i', j')

for a permutation theta of the m*n index pairs. Every word has a
well-defined degree (number of e's, number of f's) and, for each prescribed
e/f pattern of that degree, exactly one spelling. We fix the e-first
spelling (all e-letters, then all f-letters) as the canonical
representative; `factor_at` recovers any other pattern.

A `Word` is just the canonical pair of blocks and knows nothing about
theta; all rewriting goes through a `Permutation2D`, which owns the
prepared kernel tables.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from . import kernel
from .errors import (
    DegreeTooLarge,
    FlipRequiresSquare,
    IndexOutOfRange,
    NotABijection,
)

Degree = tuple[int, int]


def deg_add(a: Degree, b: Degree) -> Degree:
    return (a[0] + b[0], a[1] + b[1])


def deg_sub(a: Degree, b: Degree) -> Degree:
    return (a[0] - b[0], a[1] - b[1])


def deg_join(a: Degree, b: Degree) -> Degree:
    """Componentwise maximum."""
    return (max(a[0], b[0]), max(a[1], b[1]))


def deg_le(a: Degree, b: Degree) -> bool:
    """Componentwise order (partial)."""
    return a[0] <= b[0] and a[1] <= b[1]


class Word:
    """A semigroup element in canonical e-first spelling.

    Instances are immutable by convention; the hash is precomputed since
    words are dictionary keys in every algebra operation.
    """

    __slots__ = ("e_block", "f_block", "_hash")

    def __init__(self, e_block: tuple[int, ...] = (), f_block: tuple[int, ...] = ()):
        self.e_block = e_block
        self.f_block = f_block
        self._hash = hash((e_block, f_block))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self.e_block == other.e_block and self.f_block == other.f_block

    def __hash__(self) -> int:
        return self._hash

    @property
    def degree(self) -> Degree:
        return (len(self.e_block), len(self.f_block))

    @property
    def length(self) -> int:
        return len(self.e_block) + len(self.f_block)

    @property
    def is_empty(self) -> bool:
        return not self.e_block and not self.f_block

    @property
    def key(self):
        """Total order: by degree, then lexicographic on the blocks."""
        return (self.degree, self.e_block, self.f_block)

    def letters(self) -> tuple[int, ...]:
        """Signed-letter spelling: e_i is +i, f_j is -j."""
        return self.e_block + tuple(-j for j in self.f_block)

    def __str__(self) -> str:
        if self.is_empty:
            return "id"
        parts = [f"e{i}" for i in self.e_block] + [f"f{j}" for j in self.f_block]
        return ".".join(parts)

    def __repr__(self) -> str:
        return f"Word({self})"


EMPTY_WORD = Word((), ())

_LETTER_RE = re.compile(r"([ef])([1-9][0-9]*)$")


def parse_word_letters(text: str) -> list[tuple[str, int]]:
    """Parse `id` or dot-separated letters like `e1.f2` into (kind, index) pairs."""
    text = text.strip()
    if text == "id":
        return []
    out = []
    for piece in text.split("."):
        m = _LETTER_RE.match(piece.strip())
        if not m:
            raise ValueError(f"bad letter {piece!r} in word {text!r}")
        out.append((m.group(1), int(m.group(2))))
    return out


class Permutation2D:
    """The defining data (m, n, theta) with prepared rewrite tables."""

    __slots__ = ("m", "n", "table", "_fwd_flat", "_handle", "_hash")

    def __init__(self, m: int, n: int, table: dict[tuple[int, int], tuple[int, int]]):
        if m < 1 or n < 1:
            raise IndexOutOfRange(f"need m, n >= 1, got m={m}, n={n}")
        fwd = [-1] * (m * n)
        seen = set()
        for (i, j), (i2, j2) in table.items():
            if not (1 <= i <= m and 1 <= j <= n):
                raise IndexOutOfRange(f"source pair ({i},{j}) out of range")
            if not (1 <= i2 <= m and 1 <= j2 <= n):
                raise IndexOutOfRange(f"image pair ({i2},{j2}) out of range")
            dst = (i2 - 1) * n + (j2 - 1)
            if dst in seen:
                raise NotABijection(f"duplicate image pair ({i2},{j2})")
            seen.add(dst)
            fwd[(i - 1) * n + (j - 1)] = dst
        if len(table) != m * n or -1 in fwd:
            raise NotABijection("table does not cover all index pairs")
        self.m = m
        self.n = n
        self.table = dict(table)
        self._fwd_flat = tuple(fwd)
        self._handle = kernel.prepare(m, n, self._fwd_flat)
        self._hash = hash((m, n, self._fwd_flat))

    @classmethod
    def identity(cls, m: int, n: int) -> "Permutation2D":
        return cls(m, n, {(i, j): (i, j) for i in range(1, m + 1) for j in range(1, n + 1)})

    @classmethod
    def flip(cls, m: int, n: int) -> "Permutation2D":
        """e_i f_j = f_i e_j; only a permutation of m x n when m = n."""
        if m != n:
            raise FlipRequiresSquare(f"flip needs m = n, got m={m}, n={n}")
        return cls(m, n, {(i, j): (j, i) for i in range(1, m + 1) for j in range(1, n + 1)})

    def apply(self, i: int, j: int) -> tuple[int, int]:
        """theta(i, j)."""
        return self.table[(i, j)]

    def apply_inverse(self, i2: int, j2: int) -> tuple[int, int]:
        """theta^{-1}(i', j'), the direction used when pulling e's left."""
        idx = self._fwd_flat.index((i2 - 1) * self.n + (j2 - 1))
        return idx // self.n + 1, idx % self.n + 1

    def check_letter(self, kind: str, index: int) -> None:
        bound = self.m if kind == "e" else self.n
        if not 1 <= index <= bound:
            raise IndexOutOfRange(f"{kind}{index} out of range (bound {bound})")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Permutation2D):
            return NotImplemented
        return (self.m, self.n, self._fwd_flat) == (other.m, other.n, other._fwd_flat)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation2D(m={self.m}, n={self.n})"


def make_theta(m: int, n: int, spec) -> Permutation2D:
    """Build a validated table from a builtin name or explicit entries.

    `spec` is "identity", "flip", or an iterable of ((i, j), (i2, j2)) pairs.
    """
    if spec == "identity":
        return Permutation2D.identity(m, n)
    if spec == "flip":
        return Permutation2D.flip(m, n)
    if isinstance(spec, str):
        raise ValueError(f"unknown builtin table {spec!r}")
    table = {}
    for (i, j), (i2, j2) in spec:
        if (i, j) in table:
            raise NotABijection(f"duplicate source pair ({i},{j})")
        table[(i, j)] = (i2, j2)
    return Permutation2D(m, n, table)


def _to_signed(theta: Permutation2D, letters: Iterable) -> list[int]:
    out = []
    for letter in letters:
        if isinstance(letter, int):
            kind = "e" if letter > 0 else "f"
            idx = abs(letter)
        else:
            kind, idx = letter
        theta.check_letter(kind, idx)
        out.append(idx if kind == "e" else -idx)
    return out


def normal_form(theta: Permutation2D, letters: Iterable) -> Word:
    """Canonical e-first word of an arbitrary letter sequence.

    Letters may be (kind, index) pairs or signed ints (+i for e_i, -j for
    f_j). The result does not depend on the rewrite order.
    """
    e, f = kernel.normalize(theta._handle, _to_signed(theta, letters))
    return Word(e, f)


def word(theta: Permutation2D, text: str) -> Word:
    """Parse and normalize a word literal like `e1.f2` or `id`."""
    return normal_form(theta, parse_word_letters(text))


def concat(theta: Permutation2D, w1: Word, w2: Word) -> Word:
    """Canonical form of the semigroup product w1 * w2."""
    e, f = kernel.concat(theta._handle, w1.e_block, w1.f_block, w2.e_block, w2.f_block)
    return Word(e, f)


def factor_at(theta: Permutation2D, w: Word, delta: Degree) -> tuple[Word, Word]:
    """The unique split w = w1 * w2 with d(w1) = delta."""
    p, q = delta
    if not (0 <= p <= len(w.e_block) and 0 <= q <= len(w.f_block)):
        raise DegreeTooLarge(f"cannot take degree {delta} from word of degree {w.degree}")
    e1, f1, e2, f2 = kernel.factor(theta._handle, w.e_block, w.f_block, p, q)
    return Word(e1, f1), Word(e2, f2)


def f_first_form(theta: Permutation2D, w: Word) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The unique f-first spelling (f-block, e-block) of w."""
    return kernel.to_f_first(theta._handle, w.e_block, w.f_block)


def iter_words(theta: Permutation2D, delta: Degree) -> Iterator[Word]:
    a, b = delta
    for e in product(range(1, theta.m + 1), repeat=a):
        for f in product(range(1, theta.n + 1), repeat=b):
            yield Word(e, f)


def enumerate_words(theta: Permutation2D, delta: Degree) -> list[Word]:
    """All m^a * n^b canonical words of degree delta, lexicographically.

    Every pair of blocks is a distinct canonical word, so no rewriting is
    needed here.
    """
    if delta[0] < 0 or delta[1] < 0:
        raise DegreeTooLarge(f"degree must be nonnegative, got {delta}")
    return list(iter_words(theta, delta))


def words_up_to(theta: Permutation2D, bound: Degree) -> list[Word]:
    """All canonical words of degree <= bound componentwise."""
    out = []
    for a in range(bound[0] + 1):
        for b in range(bound[1] + 1):
            out.extend(iter_words(theta, (a, b)))
    return out


@lru_cache(maxsize=1 << 16)
def _common_extensions_cached(theta: Permutation2D, u: Word, v: Word):
    raw = kernel.common_ext(
        theta._handle, u.e_block, u.f_block, v.e_block, v.f_block
    )
    return tuple((Word(w1e, w1f), Word(w2e, w2f)) for w1e, w1f, w2e, w2f in raw)


def common_extensions(theta: Permutation2D, u: Word, v: Word) -> list[tuple[Word, Word]]:
    """All (w1, w2) with v*w1 == u*w2 and d(v) + d(w1) = d(u) v d(v).

    This is the combinatorial kernel of the relation

        s_v* s_u = sum over (w1, w2) of s_{w1} s_{w2}*,

    the only place where adjoints meet isometries in the algebra product.
    """
    return list(_common_extensions_cached(theta, u, v))


# --- text format for tables ------------------------------------------------
#
# line 1: `m <int>`, line 2: `n <int>`, then either `builtin identity|flip`
# or exactly m*n lines `i j -> i' j'` (1-based).

def parse_theta_text(text: str) -> Permutation2D:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ValueError("table file needs at least 3 lines")
    m_match = re.fullmatch(r"m\s+(\d+)", lines[0])
    n_match = re.fullmatch(r"n\s+(\d+)", lines[1])
    if not m_match or not n_match:
        raise ValueError("first two lines must be `m <int>` and `n <int>`")
    m, n = int(m_match.group(1)), int(n_match.group(1))
    builtin = re.fullmatch(r"builtin\s+(\w+)", lines[2])
    if builtin:
        if len(lines) != 3:
            raise ValueError("builtin line must be the last line")
        return make_theta(m, n, builtin.group(1))
    entries = []
    for ln in lines[2:]:
        em = re.fullmatch(r"(\d+)\s+(\d+)\s*->\s*(\d+)\s+(\d+)", ln)
        if not em:
            raise ValueError(f"bad table line {ln!r}")
        i, j, i2, j2 = map(int, em.groups())
        entries.append(((i, j), (i2, j2)))
    if len(entries) != m * n:
        raise NotABijection(f"expected {m * n} entries, got {len(entries)}")
    return make_theta(m, n, entries)


def theta_text(theta: Permutation2D) -> str:
    lines = [f"m {theta.m}", f"n {theta.n}"]
    for i in range(1, theta.m + 1):
        for j in range(1, theta.n + 1):
            i2, j2 = theta.apply(i, j)
            lines.append(f"{i} {j} -> {i2} {j2}")
    return "\n".join(lines) + "\n"
