# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subgroup kernels; see _kernels_py for the reference semantics."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

BACKEND = "compiled"

DEF MAXWORDS = 64  # 64 * 64 = 4096 elements

cdef inline bint _get(unsigned long long *bs, int x):
    return (bs[x >> 6] >> (x & 63)) & 1ULL

cdef inline void _set(unsigned long long *bs, int x):
    bs[x >> 6] |= 1ULL << (x & 63)


cdef object _mask_to_int(unsigned long long *bs, int n):
    cdef int nw = (n + 63) >> 6
    cdef bytes raw = (<char *>bs)[: nw * 8]
    return int.from_bytes(raw, "little")


cdef int _fill(int *buf, object seq) except -1:
    cdef int i = 0
    for x in seq:
        buf[i] = x
        i += 1
    return i


def extend(int[::1] mult, int n, object members, object gens, int g):
    """Members and mask of <H union {g}>; mirrors _kernels_py.extend."""
    cdef unsigned long long bs[MAXWORDS]
    cdef int *mem = NULL
    cdef int *work = NULL
    cdef int *stack = NULL
    cdef int *allg = NULL
    cdef int nmem, ngen, nout, top, x, y, h, i, s
    if n > MAXWORDS * 64:
        raise ValueError("group too large for compiled kernels")
    memset(bs, 0, sizeof(bs))
    nmem = len(members)
    ngen = len(gens) + 1
    mem = <int *>malloc(nmem * sizeof(int))
    work = <int *>malloc(n * sizeof(int))
    stack = <int *>malloc((n * ngen + ngen) * sizeof(int))
    allg = <int *>malloc(ngen * sizeof(int))
    try:
        _fill(mem, members)
        _fill(allg, gens)
        allg[ngen - 1] = g
        for i in range(nmem):
            _set(bs, mem[i])
            work[i] = mem[i]
        nout = nmem
        if _get(bs, g):
            return _mask_to_int(bs, n), tuple(members)
        top = 0
        stack[top] = g
        top += 1
        while top > 0:
            top -= 1
            x = stack[top]
            if _get(bs, x):
                continue
            for i in range(nmem):
                y = mult[mem[i] * n + x]
                if not _get(bs, y):
                    _set(bs, y)
                    work[nout] = y
                    nout += 1
            for i in range(ngen):
                s = mult[x * n + allg[i]]
                stack[top] = s
                top += 1
        out = sorted(work[i] for i in range(nout))
        return _mask_to_int(bs, n), tuple(out)
    finally:
        free(mem); free(work); free(stack); free(allg)


def closure(int[::1] mult, int n, int identity, object gens):
    members = (identity,)
    acc = []
    mask = 1 << identity
    for g in gens:
        if not mask >> g & 1:
            mask, members = extend(mult, n, members, acc, g)
        acc.append(g)
    return mask, members


def power_elements(int[::1] mult, int n, int identity, object members, int e):
    cdef unsigned long long bs[MAXWORDS]
    cdef int x, acc, base, k
    if n > MAXWORDS * 64:
        raise ValueError("group too large for compiled kernels")
    memset(bs, 0, sizeof(bs))
    out = []
    for x in members:
        acc = identity
        base = x
        k = e
        while k:
            if k & 1:
                acc = mult[acc * n + base]
            base = mult[base * n + base]
            k >>= 1
        if not _get(bs, acc):
            _set(bs, acc)
            out.append(acc)
    return out


def commutator_elements(int[::1] mult, int[::1] inv, int n, object members):
    cdef unsigned long long bs[MAXWORDS]
    cdef int *mem = NULL
    cdef int nmem, i, j, x, y, c
    if n > MAXWORDS * 64:
        raise ValueError("group too large for compiled kernels")
    memset(bs, 0, sizeof(bs))
    nmem = len(members)
    mem = <int *>malloc(nmem * sizeof(int))
    out = []
    try:
        _fill(mem, members)
        for i in range(nmem):
            x = mem[i]
            for j in range(nmem):
                y = mem[j]
                c = mult[mult[mult[x * n + y] * n + inv[x]] * n + inv[y]]
                if not _get(bs, c):
                    _set(bs, c)
                    out.append(c)
        return out
    finally:
        free(mem)


def is_abelian_members(int[::1] mult, int n, object members):
    cdef int *mem = NULL
    cdef int nmem, i, j
    nmem = len(members)
    mem = <int *>malloc(nmem * sizeof(int))
    try:
        _fill(mem, members)
        for i in range(nmem):
            for j in range(i + 1, nmem):
                if mult[mem[i] * n + mem[j]] != mult[mem[j] * n + mem[i]]:
                    return False
        return True
    finally:
        free(mem)


def is_normal_members(int[::1] mult, int[::1] inv, int n, object members, object mask):
    cdef unsigned long long bs[MAXWORDS]
    cdef int *mem = NULL
    cdef int nmem, nw, g, i
    if n > MAXWORDS * 64:
        raise ValueError("group too large for compiled kernels")
    nw = (n + 63) >> 6
    memset(bs, 0, sizeof(bs))
    raw = int(mask).to_bytes(nw * 8, "little")
    for i in range(nw * 8):
        (<char *>bs)[i] = (<const unsigned char *><const char *>raw)[i]
    nmem = len(members)
    mem = <int *>malloc(nmem * sizeof(int))
    try:
        _fill(mem, members)
        for g in range(n):
            for i in range(nmem):
                if not _get(bs, mult[mult[g * n + mem[i]] * n + inv[g]]):
                    return False
        return True
    finally:
        free(mem)


def conjugate_members(int[::1] mult, int[::1] inv, int n, object members, int g):
    cdef int ig = inv[g]
    out = sorted(mult[mult[g * n + x] * n + ig] for x in members)
    return tuple(out)


def centralizes(int[::1] mult, int n, int t, object members):
    cdef int x
    for x in members:
        if mult[t * n + x] != mult[x * n + t]:
            return False
    return True
