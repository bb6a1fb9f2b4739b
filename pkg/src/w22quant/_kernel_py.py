"""Pure-Python PBW straightening kernel.

Generators are packed into integers so that words are plain tuples of ints
and the PBW order is integer order: ``L_n -> n`` and ``W_n -> n + W_OFFSET``.
Products of basis words have integer coefficients, so the kernel never
touches rationals.
"""

W_OFFSET = 1 << 40
_W_THRESHOLD = 1 << 39

# None, "bracket_sign" or "pbw_swap"; see w22quant.mutations
_mutation = None

_gen_cache = {}
_word_cache = {}


def encode(kind, index):
    if not -_W_THRESHOLD < index < _W_THRESHOLD:
        raise OverflowError("generator index %d out of range" % index)
    return index + W_OFFSET if kind == "W" else index


def decode(code):
    if code >= _W_THRESHOLD:
        return "W", code - W_OFFSET
    return "L", code


def set_mutation(name):
    global _mutation
    _mutation = name
    clear_cache()


def get_mutation():
    return _mutation


def clear_cache():
    _gen_cache.clear()
    _word_cache.clear()


def bracket(a, b):
    """[a, b] for two packed generators, as a tuple of (code, coeff)."""
    a_w = a >= _W_THRESHOLD
    b_w = b >= _W_THRESHOLD
    if a_w and b_w:
        return ()
    m = a - W_OFFSET if a_w else a
    n = b - W_OFFSET if b_w else b
    c = m + n if _mutation == "bracket_sign" else m - n
    if c == 0:
        return ()
    if a_w or b_w:
        return ((m + n + W_OFFSET, c),)
    return ((m + n, c),)


def _mul_gen(u, g):
    key = (u, g)
    hit = _gen_cache.get(key)
    if hit is not None:
        return hit
    if not u or u[-1] <= g:
        res = {u + (g,): 1}
    else:
        # u = a h with h > g:  h g = g h + [h, g]
        h = u[-1]
        a = u[:-1]
        res = {}
        for w, c in _mul_gen(a, g).items():
            for w2, c2 in _mul_gen(w, h).items():
                res[w2] = res.get(w2, 0) + c * c2
        br = bracket(g, h) if _mutation == "pbw_swap" else bracket(h, g)
        for code, c in br:
            for w2, c2 in _mul_gen(a, code).items():
                res[w2] = res.get(w2, 0) + c * c2
        res = {w: c for w, c in res.items() if c}
    _gen_cache[key] = res
    return res


def mul_words(u, v):
    """Normal form of the product of two sorted words.

    The returned dict is shared with the cache and must not be mutated.
    """
    if not v:
        return {u: 1}
    if not u or u[-1] <= v[0]:
        return {u + v: 1}
    key = (u, v)
    hit = _word_cache.get(key)
    if hit is not None:
        return hit
    res = {}
    rest = v[1:]
    for w, c in _mul_gen(u, v[0]).items():
        for w2, c2 in mul_words(w, rest).items():
            res[w2] = res.get(w2, 0) + c * c2
    res = {w: c for w, c in res.items() if c}
    _word_cache[key] = res
    return res


def cache_size():
    return len(_gen_cache) + len(_word_cache)
