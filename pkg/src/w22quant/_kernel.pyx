# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW straightening kernel; same contract as ``_kernel_py``."""

cdef long long W_OFF = 1LL << 40
cdef long long W_THR = 1LL << 39

W_OFFSET = W_OFF

cdef object _mutation = None
cdef int _mut_code = 0         # 0 none, 1 bracket_sign, 2 pbw_swap

cdef dict _gen_cache = {}
cdef dict _word_cache = {}


def encode(kind, long long index):
    if not -W_THR < index < W_THR:
        raise OverflowError("generator index %d out of range" % index)
    return index + W_OFF if kind == "W" else index


def decode(long long code):
    if code >= W_THR:
        return "W", code - W_OFF
    return "L", code


def set_mutation(name):
    global _mutation, _mut_code
    _mutation = name
    _mut_code = {None: 0, "bracket_sign": 1, "pbw_swap": 2}[name]
    clear_cache()


def get_mutation():
    return _mutation


def clear_cache():
    _gen_cache.clear()
    _word_cache.clear()


cdef tuple _bracket(long long a, long long b):
    cdef bint a_w = a >= W_THR
    cdef bint b_w = b >= W_THR
    cdef long long m, n, c
    if a_w and b_w:
        return ()
    m = a - W_OFF if a_w else a
    n = b - W_OFF if b_w else b
    c = m + n if _mut_code == 1 else m - n
    if c == 0:
        return ()
    if a_w or b_w:
        return ((m + n + W_OFF, c),)
    return ((m + n, c),)


def bracket(long long a, long long b):
    return _bracket(a, b)


cdef dict _mul_gen(tuple u, long long g):
    cdef tuple key = (u, g)
    cdef object hit = _gen_cache.get(key)
    if hit is not None:
        return <dict>hit
    cdef Py_ssize_t n = len(u)
    cdef long long h
    cdef tuple a, br, w, w2
    cdef dict res, inner
    cdef object c, c2
    if n == 0 or <long long>u[n - 1] <= g:
        res = {u + (g,): 1}
    else:
        h = u[n - 1]
        a = u[:n - 1]
        res = {}
        for w, c in _mul_gen(a, g).items():
            inner = _mul_gen(w, h)
            for w2, c2 in inner.items():
                res[w2] = res.get(w2, 0) + c * c2
        br = _bracket(g, h) if _mut_code == 2 else _bracket(h, g)
        for item in br:
            for w2, c2 in _mul_gen(a, item[0]).items():
                res[w2] = res.get(w2, 0) + item[1] * c2
        res = {w: c for w, c in res.items() if c}
    _gen_cache[key] = res
    return res


cdef dict _mul_words(tuple u, tuple v):
    cdef Py_ssize_t nu = len(u), nv = len(v)
    if nv == 0:
        return {u: 1}
    if nu == 0 or <long long>u[nu - 1] <= <long long>v[0]:
        return {u + v: 1}
    cdef tuple key = (u, v)
    cdef object hit = _word_cache.get(key)
    if hit is not None:
        return <dict>hit
    cdef dict res = {}
    cdef tuple rest = v[1:]
    cdef tuple w, w2
    cdef object c, c2
    for w, c in _mul_gen(u, v[0]).items():
        for w2, c2 in _mul_words(w, rest).items():
            res[w2] = res.get(w2, 0) + c * c2
    res = {w: c for w, c in res.items() if c}
    _word_cache[key] = res
    return res


def mul_words(tuple u, tuple v):
    return _mul_words(u, v)


def cache_size():
    return len(_gen_cache) + len(_word_cache)
