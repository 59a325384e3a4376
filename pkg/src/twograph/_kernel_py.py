"""Pure-Python word kernel.

Letters are signed ints: e_i is +i, f_j is -j (1-based). A commutation
table is prepared once into a flat handle; all functions here are pure and
operate on plain int tuples so the compiled twin (`_kernel_cy`) can mirror
them exactly.

Encoding of the table: index (i-1)*n + (j-1) holds (i'-1)*n + (j'-1),
meaning the pair e_i f_j rewrites to f_{j'} e_{i'}. The inverse table is
used when pulling e-letters to the front.
"""

from itertools import product

BACKEND = "pure"


def prepare(m, n, fwd):
    """Build a kernel handle from the flat forward table."""
    fwd = tuple(fwd)
    inv = [0] * (m * n)
    for src, dst in enumerate(fwd):
        inv[dst] = src
    return (m, n, fwd, tuple(inv))


def normalize(tables, letters):
    """Canonical (e-block, f-block) of a signed-letter sequence."""
    _, n, _, inv = tables
    es = []
    fs = []
    for x in letters:
        if x > 0:
            cur = x
            for k in range(len(fs) - 1, -1, -1):
                src = inv[(cur - 1) * n + (fs[k] - 1)]
                cur = src // n + 1
                fs[k] = src % n + 1
            es.append(cur)
        else:
            fs.append(-x)
    return tuple(es), tuple(fs)


def concat(tables, e1, f1, e2, f2):
    """Canonical form of the juxtaposition of two canonical words."""
    _, n, _, inv = tables
    es = list(e1)
    fs = list(f1)
    for cur in e2:
        for k in range(len(fs) - 1, -1, -1):
            src = inv[(cur - 1) * n + (fs[k] - 1)]
            cur = src // n + 1
            fs[k] = src % n + 1
        es.append(cur)
    fs.extend(f2)
    return tuple(es), tuple(fs)


def to_f_first(tables, es_in, fs_in):
    """Rewrite a canonical word into its unique f-first form (f-block, e-block)."""
    _, n, fwd, _ = tables
    es = list(es_in)
    fs = []
    for cur in fs_in:
        for k in range(len(es) - 1, -1, -1):
            dst = fwd[(es[k] - 1) * n + (cur - 1)]
            es[k] = dst // n + 1
            cur = dst % n + 1
        fs.append(cur)
    return tuple(fs), tuple(es)


def factor(tables, es, fs, p, q):
    """Split a canonical word at degree (p, q); caller checks bounds.

    Returns (e1, f1, e2, f2), both halves canonical. The prefix keeps the
    first p e-letters verbatim; its f-letters are the first q letters of the
    f-first form of what remains.
    """
    _, n, _, inv = tables
    e1 = es[:p]
    frem, erem = to_f_first(tables, es[p:], fs)
    f1 = frem[:q]
    es2 = []
    fs2 = list(frem[q:])
    for cur in erem:
        for k in range(len(fs2) - 1, -1, -1):
            src = inv[(cur - 1) * n + (fs2[k] - 1)]
            cur = src // n + 1
            fs2[k] = src % n + 1
        es2.append(cur)
    return e1, f1, tuple(es2), tuple(fs2)


def common_ext(tables, eu, fu, ev, fv):
    """All (w1, w2) with v*w1 == u*w2 at the join degree of u and v.

    Returned as tuples (w1e, w1f, w2e, w2f) in lexicographic order of w1.
    """
    m, n, _, _ = tables
    au, bu = len(eu), len(fu)
    av, bv = len(ev), len(fv)
    da = max(au, av) - av
    db = max(bu, bv) - bv
    out = []
    for w1e in product(range(1, m + 1), repeat=da):
        for w1f in product(range(1, n + 1), repeat=db):
            ze, zf = concat(tables, ev, fv, w1e, w1f)
            pe, pf, re_, rf = factor(tables, ze, zf, au, bu)
            if pe == eu and pf == fu:
                out.append((w1e, w1f, re_, rf))
    return out
