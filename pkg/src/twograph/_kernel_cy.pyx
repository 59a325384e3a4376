# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernel_py``: identical interface, C integer buffers.

Letters are signed ints: e_i is +i, f_j is -j (1-based). See the pure module
for the table encoding.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "cython"


cdef class ThetaTables:
    cdef public int m
    cdef public int n
    cdef int* fwd
    cdef int* inv

    def __cinit__(self, int m, int n, fwd):
        cdef int size = m * n
        cdef int k
        self.m = m
        self.n = n
        self.fwd = <int*> PyMem_Malloc(size * sizeof(int))
        self.inv = <int*> PyMem_Malloc(size * sizeof(int))
        if self.fwd == NULL or self.inv == NULL:
            raise MemoryError()
        for k in range(size):
            self.fwd[k] = fwd[k]
        for k in range(size):
            self.inv[self.fwd[k]] = k

    def __dealloc__(self):
        if self.fwd != NULL:
            PyMem_Free(self.fwd)
        if self.inv != NULL:
            PyMem_Free(self.inv)


def prepare(m, n, fwd):
    """Build a kernel handle from the flat forward table."""
    return ThetaTables(m, n, tuple(fwd))


cdef tuple _astuple(int* buf, int k):
    cdef int i
    return tuple([buf[i] for i in range(k)])


cdef int* _alloc(int k) except NULL:
    cdef int* p = <int*> PyMem_Malloc((k if k > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p


cdef inline int _pull_e_left(const int* inv, int n, int cur, int* fs, int nf) nogil:
    # bubble e-letter `cur` left past fs[0..nf), rewriting via the inverse table
    cdef int k, src
    for k in range(nf - 1, -1, -1):
        src = inv[(cur - 1) * n + (fs[k] - 1)]
        cur = src / n + 1
        fs[k] = src % n + 1
    return cur


cdef inline int _pull_f_left(const int* fwd, int n, int cur, int* es, int ne) nogil:
    # bubble f-letter `cur` left past es[0..ne), rewriting via the forward table
    cdef int k, dst
    for k in range(ne - 1, -1, -1):
        dst = fwd[(es[k] - 1) * n + (cur - 1)]
        es[k] = dst / n + 1
        cur = dst % n + 1
    return cur


def normalize(ThetaTables t, letters):
    """Canonical (e-block, f-block) of a signed-letter sequence."""
    cdef int L = len(letters)
    cdef int* es = _alloc(L)
    cdef int* fs = _alloc(L)
    cdef int ne = 0, nf = 0, x
    try:
        for obj in letters:
            x = obj
            if x > 0:
                es[ne] = _pull_e_left(t.inv, t.n, x, fs, nf)
                ne += 1
            else:
                fs[nf] = -x
                nf += 1
        return _astuple(es, ne), _astuple(fs, nf)
    finally:
        PyMem_Free(es)
        PyMem_Free(fs)


def concat(ThetaTables t, e1, f1, e2, f2):
    """Canonical form of the juxtaposition of two canonical words."""
    cdef int a1 = len(e1), b1 = len(f1), a2 = len(e2), b2 = len(f2)
    cdef int* es = _alloc(a1 + a2)
    cdef int* fs = _alloc(b1 + b2)
    cdef int i
    try:
        for i in range(a1):
            es[i] = e1[i]
        for i in range(b1):
            fs[i] = f1[i]
        for i in range(a2):
            es[a1 + i] = _pull_e_left(t.inv, t.n, e2[i], fs, b1)
        for i in range(b2):
            fs[b1 + i] = f2[i]
        return _astuple(es, a1 + a2), _astuple(fs, b1 + b2)
    finally:
        PyMem_Free(es)
        PyMem_Free(fs)


def to_f_first(ThetaTables t, es_in, fs_in):
    """Rewrite a canonical word into its unique f-first form (f-block, e-block)."""
    cdef int a = len(es_in), b = len(fs_in)
    cdef int* es = _alloc(a)
    cdef int* fs = _alloc(b)
    cdef int i
    try:
        for i in range(a):
            es[i] = es_in[i]
        for i in range(b):
            fs[i] = _pull_f_left(t.fwd, t.n, fs_in[i], es, a)
        return _astuple(fs, b), _astuple(es, a)
    finally:
        PyMem_Free(es)
        PyMem_Free(fs)


def factor(ThetaTables t, es, fs, int p, int q):
    """Split a canonical word at degree (p, q); caller checks bounds."""
    cdef int a = len(es), b = len(fs)
    cdef int* eer = _alloc(a - p)
    cdef int* frem = _alloc(b)
    cdef int* fs2 = _alloc(b - q)
    cdef int* es2 = _alloc(a - p)
    cdef int i
    try:
        for i in range(a - p):
            eer[i] = es[p + i]
        for i in range(b):
            frem[i] = _pull_f_left(t.fwd, t.n, fs[i], eer, a - p)
        for i in range(b - q):
            fs2[i] = frem[q + i]
        for i in range(a - p):
            es2[i] = _pull_e_left(t.inv, t.n, eer[i], fs2, b - q)
        return (es[:p], _astuple(frem, q),
                _astuple(es2, a - p), _astuple(fs2, b - q))
    finally:
        PyMem_Free(eer)
        PyMem_Free(frem)
        PyMem_Free(fs2)
        PyMem_Free(es2)


def common_ext(ThetaTables t, eu, fu, ev, fv):
    """All (w1, w2) with v*w1 == u*w2 at the join degree of u and v.

    Returned as tuples (w1e, w1f, w2e, w2f) in lexicographic order of w1.
    """
    cdef int m = t.m, n = t.n
    cdef int au = len(eu), bu = len(fu), av = len(ev), bv = len(fv)
    cdef int p = au if au > av else av
    cdef int q = bu if bu > bv else bv
    cdef int da = p - av, db = q - bv
    cdef int i, k, match, cur
    cdef int* dig = _alloc(da + db)
    cdef int* ceu = _alloc(au)
    cdef int* cfu = _alloc(bu)
    cdef int* cev = _alloc(av)
    cdef int* cfv = _alloc(bv)
    cdef int* ze = _alloc(p)
    cdef int* zf = _alloc(q)
    cdef int* eer = _alloc(p - au)
    cdef int* frem = _alloc(q)
    cdef int* fs2 = _alloc(q - bu)
    cdef int* es2 = _alloc(p - au)
    out = []
    try:
        for i in range(au):
            ceu[i] = eu[i]
        for i in range(bu):
            cfu[i] = fu[i]
        for i in range(av):
            cev[i] = ev[i]
        for i in range(bv):
            cfv[i] = fv[i]
        for i in range(da + db):
            dig[i] = 1
        while True:
            # z = v * w1, built as in concat()
            for i in range(av):
                ze[i] = cev[i]
            for i in range(bv):
                zf[i] = cfv[i]
            for i in range(da):
                ze[av + i] = _pull_e_left(t.inv, t.n, dig[i], zf, bv)
            for i in range(db):
                zf[bv + i] = dig[da + i]
            # factor z at (au, bu), prefix must equal u
            match = 1
            for i in range(au):
                if ze[i] != ceu[i]:
                    match = 0
                    break
            if match:
                for i in range(p - au):
                    eer[i] = ze[au + i]
                for i in range(q):
                    frem[i] = _pull_f_left(t.fwd, t.n, zf[i], eer, p - au)
                for i in range(bu):
                    if frem[i] != cfu[i]:
                        match = 0
                        break
                if match:
                    for i in range(q - bu):
                        fs2[i] = frem[bu + i]
                    for i in range(p - au):
                        es2[i] = _pull_e_left(t.inv, t.n, eer[i], fs2, q - bu)
                    out.append((_astuple(dig, da),
                                _astuple(dig + da, db),
                                _astuple(es2, p - au),
                                _astuple(fs2, q - bu)))
            # odometer: rightmost digit fastest, e-digits base m, f-digits base n
            k = da + db - 1
            while k >= 0:
                dig[k] += 1
                if dig[k] <= (m if k < da else n):
                    break
                dig[k] = 1
                k -= 1
            if k < 0:
                break
        return out
    finally:
        PyMem_Free(dig)
        PyMem_Free(ceu)
        PyMem_Free(cfu)
        PyMem_Free(cev)
        PyMem_Free(cfv)
        PyMem_Free(ze)
        PyMem_Free(zf)
        PyMem_Free(eer)
        PyMem_Free(frem)
        PyMem_Free(fs2)
        PyMem_Free(es2)
