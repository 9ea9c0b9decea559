# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: sparse character convolution and path-model enumeration.

Mirrors ``_pure`` exactly; see there for the raw path conventions.
"""

from libc.stdlib cimport malloc, calloc, realloc, free

from . import _pure

BACKEND = "cython"

ctypedef long long i64

cdef enum:
    MAXR = 8
    MAXSEG = 64

DEF_BOX_LIMIT = 1 << 24


cdef struct Path:
    int nseg
    i64 length[MAXSEG]
    int dirs[MAXSEG][MAXR]


cdef struct Frame:
    Path path
    int next_op
    int depth[MAXR]


cdef inline int _push_seg(Path* p, const int* d, i64 ln, int rank) noexcept nogil:
    cdef int k, same
    if ln == 0:
        return 0
    if p.nseg > 0:
        same = 1
        for k in range(rank):
            if p.dirs[p.nseg - 1][k] != d[k]:
                same = 0
                break
        if same:
            p.length[p.nseg - 1] += ln
            return 0
    if p.nseg >= MAXSEG:
        return -2
    for k in range(rank):
        p.dirs[p.nseg][k] = d[k]
    p.length[p.nseg] = ln
    p.nseg += 1
    return 0


cdef inline void _reflect(const int* d, int i, const int* alpha, int* out, int rank) noexcept nogil:
    cdef int k
    cdef int c = d[i]
    for k in range(rank):
        out[k] = d[k] - c * alpha[k]


cdef int _lower(const Path* src, Path* dst, int i, const int* alpha, int rank, i64 denom) noexcept nogil:
    """f_i: 1 on success, 0 if it vanishes, negative on error."""
    cdef i64 hs[MAXSEG + 1]
    cdef i64 m, target, need, q
    cdef int k, j, n = src.nseg, last = 0
    cdef int buf[MAXR]
    hs[0] = 0
    m = 0
    for j in range(n):
        hs[j + 1] = hs[j] + src.length[j] * src.dirs[j][i]
    for j in range(n + 1):
        if hs[j] <= m:
            m = hs[j]
            last = j
    if hs[n] - m < denom:
        return 0
    target = m + denom
    dst.nseg = 0
    for j in range(last):
        if _push_seg(dst, src.dirs[j], src.length[j], rank) < 0:
            return -2
    k = last
    while hs[k + 1] < target:
        _reflect(src.dirs[k], i, alpha, buf, rank)
        if _push_seg(dst, buf, src.length[k], rank) < 0:
            return -2
        k += 1
    need = target - hs[k]
    if need % src.dirs[k][i] != 0:
        return -1
    q = need // src.dirs[k][i]
    _reflect(src.dirs[k], i, alpha, buf, rank)
    if _push_seg(dst, buf, q, rank) < 0:
        return -2
    if _push_seg(dst, src.dirs[k], src.length[k] - q, rank) < 0:
        return -2
    for j in range(k + 1, n):
        if _push_seg(dst, src.dirs[j], src.length[j], rank) < 0:
            return -2
    return 1


cdef inline void _min_heights(const Path* p, int rank, i64* mins) noexcept nogil:
    cdef i64 cur[MAXR]
    cdef int j, k
    for k in range(rank):
        cur[k] = 0
        mins[k] = 0
    for j in range(p.nseg):
        for k in range(rank):
            cur[k] += p.length[j] * p.dirs[j][k]
            if cur[k] < mins[k]:
                mins[k] = cur[k]


def enumerate_paths(simple_roots, lam, denom, shift, cap, depth_bounds=None):
    rank = len(lam)
    if depth_bounds is None or rank > MAXR:
        return _pure.enumerate_paths(simple_roots, lam, denom, shift, cap)
    cdef i64 size = 1
    strides = []
    for b in depth_bounds:
        strides.append(size)
        size *= b + 1
        if size > DEF_BOX_LIMIT:
            return _pure.enumerate_paths(simple_roots, lam, denom, shift, cap)

    cdef int r = rank
    cdef i64 L = denom, ncap = cap, count = 0, idx
    cdef int alpha[MAXR][MAXR]
    cdef int bounds[MAXR]
    cdef i64 stride[MAXR]
    cdef i64 floor[MAXR]
    cdef i64 mins[MAXR]
    cdef int i, j, k, res, ok, err = 0
    for i in range(r):
        bounds[i] = depth_bounds[i]
        stride[i] = strides[i]
        floor[i] = -L * shift[i]
        for k in range(r):
            alpha[i][k] = simple_roots[i][k]

    cdef i64* ends = <i64*> calloc(size, sizeof(i64))
    cdef i64* doms = <i64*> calloc(size, sizeof(i64))
    cdef i64 cap_frames = 64, sp = 0
    cdef Frame* stack = <Frame*> malloc(cap_frames * sizeof(Frame))
    cdef Frame* fr
    cdef Frame* child
    cdef Frame* grown
    if ends == NULL or doms == NULL or stack == NULL:
        free(ends); free(doms); free(stack)
        raise MemoryError()

    fr = &stack[0]
    fr.path.nseg = 1
    fr.path.length[0] = L
    for k in range(r):
        fr.path.dirs[0][k] = lam[k]
        fr.depth[k] = 0
    fr.next_op = 0
    sp = 1
    count = 1
    ends[0] += 1
    _min_heights(&fr.path, r, mins)
    ok = 1
    for k in range(r):
        if mins[k] < floor[k]:
            ok = 0
    if ok:
        doms[0] += 1

    with nogil:
        while sp > 0:
            if sp + 1 >= cap_frames:
                grown = <Frame*> realloc(stack, 2 * cap_frames * sizeof(Frame))
                if grown == NULL:
                    err = 3
                    break
                stack = grown
                cap_frames *= 2
            fr = &stack[sp - 1]
            if fr.next_op >= r:
                sp -= 1
                continue
            i = fr.next_op
            fr.next_op += 1
            child = &stack[sp]
            res = _lower(&fr.path, &child.path, i, alpha[i], r, L)
            if res == 0:
                continue
            if res < 0:
                err = -res
                break
            _min_heights(&child.path, r, mins)
            ok = 1
            for j in range(i):
                if mins[j] <= -L:
                    ok = 0
                    break
            if not ok:
                continue
            child.next_op = 0
            idx = 0
            for k in range(r):
                child.depth[k] = fr.depth[k] + (1 if k == i else 0)
                if child.depth[k] > bounds[k]:
                    err = 4
                idx += child.depth[k] * stride[k]
            if err:
                break
            sp += 1
            count += 1
            if count > ncap:
                err = 5
                break
            ends[idx] += 1
            ok = 1
            for k in range(r):
                if mins[k] < floor[k]:
                    ok = 0
                    break
            if ok:
                doms[idx] += 1

    free(stack)
    if err:
        free(ends); free(doms)
        if err == 5:
            return None
        if err == 1:
            raise ArithmeticError("breakpoint off the common denominator grid")
        if err == 2:
            raise OverflowError("path has too many segments")
        if err == 3:
            raise MemoryError()
        raise ValueError("depth bounds too small for this shape")

    endpoints = {}
    dominant = {}
    try:
        for idx in range(size):
            if ends[idx] == 0:
                continue
            rem = idx
            w = list(lam)
            for k in range(r):
                c = (rem // strides[k]) % (depth_bounds[k] + 1)
                if c:
                    for j in range(r):
                        w[j] -= c * simple_roots[k][j]
            key = tuple(w)
            endpoints[key] = ends[idx]
            if doms[idx]:
                dominant[key] = doms[idx]
    finally:
        free(ends); free(doms)
    return count, endpoints, dominant


def convolve(dict a, dict b):
    if not a or not b:
        return {}
    cdef Py_ssize_t na = len(a), nb = len(b)
    rank = len(next(iter(a)))
    if rank > MAXR:
        return _pure.convolve(a, b)
    lo_a = [min(w[k] for w in a) for k in range(rank)]
    lo_b = [min(w[k] for w in b) for k in range(rank)]
    hi_a = [max(w[k] for w in a) for k in range(rank)]
    hi_b = [max(w[k] for w in b) for k in range(rank)]
    if sum(abs(m) for m in a.values()) * sum(abs(m) for m in b.values()) >= (1 << 62):
        return _pure.convolve(a, b)
    strides = []
    size = 1
    for k in range(rank):
        strides.append(size)
        size *= hi_a[k] - lo_a[k] + hi_b[k] - lo_b[k] + 1
    if size > DEF_BOX_LIMIT:
        return _pure.convolve(a, b)

    cdef i64* ia = <i64*> malloc(na * sizeof(i64))
    cdef i64* ma = <i64*> malloc(na * sizeof(i64))
    cdef i64* ib = <i64*> malloc(nb * sizeof(i64))
    cdef i64* mb = <i64*> malloc(nb * sizeof(i64))
    cdef i64* out = <i64*> calloc(size, sizeof(i64))
    cdef Py_ssize_t x, y, t
    cdef i64 av
    try:
        if ia == NULL or ma == NULL or ib == NULL or mb == NULL or out == NULL:
            raise MemoryError()
        for t, (w, m) in enumerate(a.items()):
            ia[t] = sum((w[k] - lo_a[k]) * strides[k] for k in range(rank))
            ma[t] = m
        for t, (w, m) in enumerate(b.items()):
            ib[t] = sum((w[k] - lo_b[k]) * strides[k] for k in range(rank))
            mb[t] = m
        with nogil:
            for x in range(na):
                av = ma[x]
                for y in range(nb):
                    out[ia[x] + ib[y]] += av * mb[y]
        result = {}
        origin = [lo_a[k] + lo_b[k] for k in range(rank)]
        for t in range(size):
            if out[t] != 0:
                rem = t
                w = []
                for k in range(rank):
                    w.append(origin[k] + (rem // strides[k]) % (hi_a[k] - lo_a[k] + hi_b[k] - lo_b[k] + 1))
                result[tuple(w)] = out[t]
        return result
    finally:
        free(ia); free(ma); free(ib); free(mb); free(out)
