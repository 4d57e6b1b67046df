# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_pykernels``.

LR tableaux are enumerated depth first (letter, then row) over fixed C
arrays. Shapes taller than ``MAXR`` rows are delegated to the Python kernels.
"""

from libc.stdlib cimport calloc, free

from qschubert import _pykernels

cdef enum:
    MAXR = 40


cdef struct Fill:
    int nrows
    int nletters
    int col_cap
    bint capped
    int content[MAXR]
    int row_cap[MAXR]
    int shape[MAXR]
    int old[MAXR][MAXR]
    int cum[MAXR][MAXR]


cdef inline int _imin(int a, int b):
    return a if a < b else b


cdef long long _count(Fill* f, int i, int r, int placed):
    cdef int rr, x, upper, room
    cdef long long total = 0
    if placed == f.content[i]:
        for rr in range(r, f.nrows):
            f.cum[i][rr] = placed
        if i + 1 == f.nletters:
            return 1
        for rr in range(f.nrows):
            f.old[i + 1][rr] = f.shape[rr]
        return _count(f, i + 1, 0, 0)
    if r >= f.nrows:
        return 0
    upper = f.col_cap if r == 0 else f.old[i][r - 1]
    if f.capped:
        upper = _imin(upper, f.row_cap[r])
    room = upper - f.old[i][r]
    if i > 0:
        room = _imin(room, (f.cum[i - 1][r - 1] if r > 0 else 0) - placed)
    room = _imin(room, f.content[i] - placed)
    x = room
    while x >= 0:
        f.shape[r] = f.old[i][r] + x
        f.cum[i][r] = placed + x
        total += _count(f, i, r + 1, placed + x)
        x -= 1
    f.shape[r] = f.old[i][r]
    return total


cdef void _collect(Fill* f, int i, int r, int placed, dict out):
    cdef int rr, x, upper, room, end
    if placed == f.content[i]:
        for rr in range(r, f.nrows):
            f.cum[i][rr] = placed
        if i + 1 == f.nletters:
            end = f.nrows
            while end > 0 and f.shape[end - 1] == 0:
                end -= 1
            key = tuple([f.shape[rr] for rr in range(end)])
            out[key] = out.get(key, 0) + 1
            return
        for rr in range(f.nrows):
            f.old[i + 1][rr] = f.shape[rr]
        _collect(f, i + 1, 0, 0, out)
        return
    if r >= f.nrows:
        return
    upper = f.col_cap if r == 0 else f.old[i][r - 1]
    room = upper - f.old[i][r]
    if i > 0:
        room = _imin(room, (f.cum[i - 1][r - 1] if r > 0 else 0) - placed)
    room = _imin(room, f.content[i] - placed)
    x = room
    while x >= 0:
        f.shape[r] = f.old[i][r] + x
        f.cum[i][r] = placed + x
        _collect(f, i, r + 1, placed + x, out)
        x -= 1
    f.shape[r] = f.old[i][r]


cdef void _setup(Fill* f, tuple inner, tuple content, int nrows, int col_cap):
    cdef int j
    f.nrows = nrows
    f.nletters = len(content)
    f.col_cap = col_cap
    f.capped = False
    for j in range(nrows):
        f.shape[j] = inner[j] if j < len(inner) else 0
        f.old[0][j] = f.shape[j]
    for j in range(f.nletters):
        f.content[j] = content[j]


def lr_coef(tuple outer, tuple inner, tuple content):
    cdef Fill f
    cdef int j
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if len(inner) > len(outer) or len(content) > len(outer):
        return 0
    for j in range(len(inner)):
        if inner[j] > outer[j]:
            return 0
    for j in range(len(content)):
        if content[j] > outer[j]:
            return 0
    if not content:
        return 1
    if len(outer) > MAXR:
        return _pykernels.lr_coef(outer, inner, content)
    _setup(&f, inner, content, len(outer), outer[0])
    f.capped = True
    for j in range(len(outer)):
        f.row_cap[j] = outer[j]
    return int(_count(&f, 0, 0, 0))


def lr_mult(tuple lam, tuple mu, int col_cap, int row_cap):
    cdef Fill f
    cdef int nrows = _imin(row_cap, len(lam) + len(mu))
    if len(lam) > nrows or (lam and lam[0] > col_cap):
        return {}
    if not mu:
        return {lam: 1}
    if nrows > MAXR:
        return _pykernels.lr_mult(lam, mu, col_cap, row_cap)
    out = {}
    _setup(&f, lam, mu, nrows, col_cap)
    _collect(&f, 0, 0, 0, out)
    return out


def core_sign(tuple p, int n):
    cdef int m = len(p)
    cdef int i, x, z, top, r = 0, parity = 0, between
    cdef bint moved
    cdef unsigned char* occ
    if m == 0:
        return (), 0, 0
    top = p[0] + m
    occ = <unsigned char*> calloc(top + 1, 1)
    if occ == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            occ[p[i] - i - 1 + m] = 1
        moved = True
        while moved:
            moved = False
            x = top
            while x >= n:
                if occ[x] and not occ[x - n]:
                    between = 0
                    for z in range(x - n + 1, x):
                        between += occ[z]
                    parity ^= between & 1
                    occ[x] = 0
                    occ[x - n] = 1
                    r += 1
                    moved = True
                    break
                x -= 1
        parts = []
        i = 0
        x = top
        while x >= 0:
            if occ[x]:
                parts.append(x - (m - 1 - i))
                i += 1
            x -= 1
    finally:
        free(occ)
    while parts and parts[len(parts) - 1] == 0:
        parts.pop()
    return tuple(parts), r, parity
