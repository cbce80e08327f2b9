# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word kernels; same signatures and results as ``_kernels_py``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

cdef enum:
    STACK = 64


cdef struct Buf:
    int* w
    int* scratch
    int* minus
    int n


cdef int _alloc(Buf* b, int n, int* stack_mem) except -1:
    b.n = n
    if n <= STACK:
        b.w = stack_mem
    else:
        b.w = <int*>PyMem_Malloc(4 * n * sizeof(int))
        if b.w == NULL:
            raise MemoryError()
    b.scratch = b.w + n
    b.minus = b.w + 2 * n
    return 0


cdef inline void _free(Buf* b, int* stack_mem):
    if b.w != stack_mem:
        PyMem_Free(b.w)


cdef int _load(Buf* b, tuple word) except -1:
    cdef Py_ssize_t k
    for k in range(b.n):
        b.w[k] = word[k]
    return 0


cdef tuple _dump(int* w, int n):
    return tuple([w[k] for k in range(n)])


cdef inline void _signature(int* w, int n, int i, int* plus, int* nplus,
                            int* minus, int* nminus) nogil:
    # plus[] receives uncanceled '+' positions, minus[] uncanceled '-'
    cdef int k, a, np = 0, nm = 0
    cdef int j = i + 1
    for k in range(n):
        a = w[k]
        if a == i:
            plus[np] = k
            np += 1
        elif a == j:
            if np > 0:
                np -= 1
            else:
                minus[nm] = k
                nm += 1
    nplus[0] = np
    nminus[0] = nm


cdef inline void _s_inplace(Buf* b, int i) nogil:
    cdef int np, nm, m, k
    _signature(b.w, b.n, i, b.scratch, &np, b.minus, &nm)
    m = np - nm
    if m > 0:
        for k in range(m):
            b.w[b.scratch[k]] = i + 1
    elif m < 0:
        for k in range(nm + m, nm):
            b.w[b.minus[k]] = i


cdef inline int _f_even_inplace(Buf* b, int i) nogil:
    cdef int np, nm
    _signature(b.w, b.n, i, b.scratch, &np, b.minus, &nm)
    if np == 0:
        return 0
    b.w[b.scratch[0]] = i + 1
    return 1


cdef inline int _e_even_inplace(Buf* b, int i) nogil:
    cdef int np, nm
    _signature(b.w, b.n, i, b.scratch, &np, b.minus, &nm)
    if nm == 0:
        return 0
    b.w[b.minus[nm - 1]] = i
    return 1


cdef inline int _f_odd1_inplace(int* w, int n) nogil:
    cdef int k
    for k in range(n - 1, -1, -1):
        if w[k] == 1:
            w[k] = 2
            return 1
        if w[k] == 2:
            return 0
    return 0


cdef inline int _e_odd1_inplace(int* w, int n) nogil:
    cdef int k
    for k in range(n - 1, -1, -1):
        if w[k] == 2:
            w[k] = 1
            return 1
        if w[k] == 1:
            return 0
    return 0


cdef int _odd_inplace(Buf* b, int i, bint lower) nogil:
    # conjugate by S_{w_i}: apply s_{i-1},...,s_1,s_i,...,s_2 then undo in reverse
    cdef int j, ok
    for j in range(i - 1, 0, -1):
        _s_inplace(b, j)
    for j in range(i, 1, -1):
        _s_inplace(b, j)
    if lower:
        ok = _f_odd1_inplace(b.w, b.n)
    else:
        ok = _e_odd1_inplace(b.w, b.n)
    if not ok:
        return 0
    for j in range(2, i + 1):
        _s_inplace(b, j)
    for j in range(1, i):
        _s_inplace(b, j)
    return 1


def weight(tuple word, int n):
    cdef list counts = [0] * n
    cdef object a
    for a in word:
        counts[<int>a - 1] += 1
    return tuple(counts)


def eps(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    cdef int np, nm
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        _signature(b.w, b.n, i, b.scratch, &np, b.minus, &nm)
        return nm
    finally:
        _free(&b, mem)


def phi(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    cdef int np, nm
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        _signature(b.w, b.n, i, b.scratch, &np, b.minus, &nm)
        return np
    finally:
        _free(&b, mem)


def f_even(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _f_even_inplace(&b, i):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


def e_even(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _e_even_inplace(&b, i):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


def f_odd1(tuple word):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _f_odd1_inplace(b.w, b.n):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


def e_odd1(tuple word):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _e_odd1_inplace(b.w, b.n):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


def s_action(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        _s_inplace(&b, i)
        return _dump(b.w, b.n)
    finally:
        _free(&b, mem)


def s_apply(tuple word, seq):
    """Apply ``S_j`` for each ``j`` of ``seq``, first element first."""
    cdef int mem[4 * STACK]
    cdef Buf b
    cdef int j
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        for j in seq:
            _s_inplace(&b, j)
        return _dump(b.w, b.n)
    finally:
        _free(&b, mem)


def conjugator(int i):
    """Application order of the simple reflections making up ``S_{w_i}``."""
    return tuple(range(i - 1, 0, -1)) + tuple(range(i, 1, -1))


def f_odd(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _odd_inplace(&b, i, True):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


def e_odd(tuple word, int i):
    cdef int mem[4 * STACK]
    cdef Buf b
    _alloc(&b, len(word), mem)
    try:
        _load(&b, word)
        if _odd_inplace(&b, i, False):
            return _dump(b.w, b.n)
        return None
    finally:
        _free(&b, mem)


cdef list _all(tuple word, int n, bint lower):
    cdef int mem[4 * STACK]
    cdef int mem2[4 * STACK]
    cdef Buf b, orig
    cdef int i, ok, k
    cdef Py_ssize_t length = len(word)
    cdef list out = []
    _alloc(&orig, length, mem2)
    _alloc(&b, length, mem)
    try:
        _load(&orig, word)
        for i in range(1, n):
            for k in range(length):
                b.w[k] = orig.w[k]
            ok = _f_even_inplace(&b, i) if lower else _e_even_inplace(&b, i)
            out.append(_dump(b.w, b.n) if ok else None)
        for i in range(1, n):
            for k in range(length):
                b.w[k] = orig.w[k]
            ok = _odd_inplace(&b, i, lower)
            out.append(_dump(b.w, b.n) if ok else None)
        return out
    finally:
        _free(&b, mem)
        _free(&orig, mem2)


def f_all(tuple word, int n):
    """Images under ``f_1..f_{n-1}`` then ``f_1bar..f_{n-1}bar`` (None when undefined)."""
    return _all(word, n, True)


def e_all(tuple word, int n):
    return _all(word, n, False)
