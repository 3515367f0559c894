# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels, mirroring quasisym._core_py exactly.

Returned dicts and lists are cached and shared: treat them as read-only.
"""

from cpython.ref cimport Py_INCREF
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from libc.stdlib cimport free, malloc

_shuffle_cache = {}
_chain_cache = {}


def quasi_shuffle(tuple a, tuple b):
    """Multiplicities of the quasi-shuffle words of two part tuples."""
    return _qs(a, b)


cdef dict _qs(tuple a, tuple b):
    cdef dict out
    cdef tuple ta, tb
    key = (a, b)
    cached = _shuffle_cache.get(key)
    if cached is not None:
        return <dict>cached
    if len(a) == 0:
        out = {b: 1}
    elif len(b) == 0:
        out = {a: 1}
    else:
        out = {}
        ta = a[1:]
        tb = b[1:]
        _accumulate(out, (a[0],), _qs(ta, b))
        _accumulate(out, (b[0],), _qs(a, tb))
        _accumulate(out, (a[0] + b[0],), _qs(ta, tb))
    _shuffle_cache[key] = out
    return out


cdef void _accumulate(dict out, tuple head, dict sub):
    cdef tuple word
    for comp, mult in sub.items():
        word = head + <tuple>comp
        if word in out:
            out[word] = out[word] + mult
        else:
            out[word] = mult


def chain_monomials(tuple exps, tuple strict, int n):
    """Exponent vectors of the chained summation; see the pure twin."""
    key = (exps, strict, n)
    cached = _chain_cache.get(key)
    if cached is not None:
        return cached

    cdef int length = len(exps)
    cdef list out = []
    if length == 0:
        out.append((0,) * n)
        _chain_cache[key] = out
        return out

    cdef int *e = <int *> malloc(length * sizeof(int))
    cdef int *need = <int *> malloc(length * sizeof(int))
    cdef int *step = <int *> malloc(length * sizeof(int))
    cdef int *vec = <int *> malloc(n * sizeof(int))
    if e is NULL or need is NULL or step is NULL or vec is NULL:
        free(e); free(need); free(step); free(vec)
        raise MemoryError()

    cdef int p
    try:
        for p in range(length):
            e[p] = exps[p]
            step[p] = 0
        for p in range(length - 1):
            if strict[p]:
                step[p] = 1
        need[length - 1] = 0
        for p in range(length - 2, -1, -1):
            need[p] = need[p + 1] + step[p]
        for p in range(n):
            vec[p] = 0
        _descend(out, 0, 0, length, n, e, need, step, vec)
    finally:
        free(e); free(need); free(step); free(vec)

    _chain_cache[key] = out
    return out


cdef void _descend(list out, int pos, int lo, int length, int n,
                   int *e, int *need, int *step, int *vec):
    cdef int hi = n - need[pos]
    cdef int exponent = e[pos]
    cdef int i, q
    cdef tuple mono
    cdef bint leaf = pos == length - 1
    for i in range(lo, hi):
        vec[i] += exponent
        if leaf:
            mono = PyTuple_New(n)
            for q in range(n):
                item = <object> vec[q]
                Py_INCREF(item)
                PyTuple_SET_ITEM(mono, q, item)
            out.append(mono)
        else:
            _descend(out, pos + 1, i + step[pos], length, n, e, need, step, vec)
        vec[i] -= exponent


def clear_caches():
    _shuffle_cache.clear()
    _chain_cache.clear()
