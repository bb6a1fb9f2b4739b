"""Undeformed Hopf structure on U(W(2,2)): primitive coproduct, antipode, counit."""

from __future__ import annotations

from fractions import Fraction

from .algebra import UNIT_WORD, AlgebraElement
from .series import TruncatedSeries
from .tensor import TensorElement, slot_map

_delta_cache: dict = {}
_s0_cache: dict = {}


def clear_caches():
    _delta_cache.clear()
    _s0_cache.clear()


def _primitive(code: int) -> TensorElement:
    return TensorElement._raw_n(2, {((code,), UNIT_WORD): Fraction(1), (UNIT_WORD, (code,)): Fraction(1)})


def delta0_word(word) -> TensorElement:
    hit = _delta_cache.get(word)
    if hit is None:
        if not word:
            hit = TensorElement.one(2)
        else:
            hit = delta0_word(word[:-1]) * _primitive(word[-1])
        _delta_cache[word] = hit
    return hit


def delta0(a: AlgebraElement) -> TensorElement:
    res = TensorElement.zero(2)
    for w, c in a.terms.items():
        res = res + delta0_word(w).scale(c)
    return res


def s0_word(word) -> AlgebraElement:
    """S°(g1 ... gk) = S°(g2 ... gk) S°(g1), with S°(g) = -g."""
    hit = _s0_cache.get(word)
    if hit is None:
        if not word:
            hit = AlgebraElement.one()
        else:
            hit = s0_word(word[1:]) * AlgebraElement._raw({(word[0],): Fraction(-1)})
        _s0_cache[word] = hit
    return hit


def s0(a: AlgebraElement) -> AlgebraElement:
    res = AlgebraElement.zero()
    for w, c in a.terms.items():
        res = res + s0_word(w).scale(c)
    return res


def eps_word(word) -> Fraction:
    return Fraction(0) if word else Fraction(1)


def eps(a: AlgebraElement) -> Fraction:
    return a.constant_term()


_MAPS = {
    "delta0": delta0_word,
    "eps": eps_word,
    "s0": s0_word,
}

_ALIASES = {"Δ°": "delta0", "delta": "delta0", "ε": "eps", "S°": "s0", "S0": "s0", "Id": "id"}


def _parse_map(name: str):
    sep = "⊗" if "⊗" in name else "@"
    parts = [p.strip() for p in name.split(sep)]
    if len(parts) != 2:
        raise ValueError("unsupported map %r" % name)
    parts = [_ALIASES.get(p, p) for p in parts]
    if parts[0] == "id" and parts[1] in _MAPS:
        return 1, _MAPS[parts[1]]
    if parts[1] == "id" and parts[0] in _MAPS:
        return 0, _MAPS[parts[0]]
    raise ValueError("unsupported map %r" % name)


def lift(name: str, x):
    """Apply ``f⊗Id`` or ``Id⊗f`` (f in delta0, eps, s0) to a tensor or a series of tensors."""
    slot, f = _parse_map(name)
    if isinstance(x, TruncatedSeries):
        return x.map(lambda c: slot_map(c, slot, f))
    if not isinstance(x, TensorElement) or x.arity != 2:
        raise TypeError("lift expects an order-2 tensor or a series of them")
    return slot_map(x, slot, f)
