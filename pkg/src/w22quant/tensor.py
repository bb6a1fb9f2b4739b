"""Order-2 and order-3 tensor powers of U(W(2,2)).

Keys are tuples of PBW words, one per slot; products act slotwise with no
signs since the algebra is ungraded.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian

from . import kernel
from .algebra import (
    UNIT_WORD,
    AlgebraElement,
    LinearCombination,
    as_scalar,
    format_coeff_term,
    format_word,
    scalar_to_json,
    word_from_exponents,
    word_to_json,
)


class TensorElement(LinearCombination):
    """Rational combination of slot tuples of PBW words (arity 2 or 3)."""

    __slots__ = ("arity",)

    def __init__(self, arity: int, terms=None):
        if arity not in (2, 3):
            raise ValueError("tensor arity must be 2 or 3")
        super().__init__(terms)
        self.arity = arity
        for k in self.terms:
            if len(k) != arity:
                raise ValueError("key %r does not have arity %d" % (k, arity))

    @classmethod
    def _raw_n(cls, arity, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.arity = arity
        return obj

    def _like(self, terms):
        return self._raw_n(self.arity, terms)

    def _arity_key(self):
        return self.arity

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.arity != self.arity:
            raise TypeError("tensor arity mismatch: %d vs %d" % (self.arity, other.arity))

    @classmethod
    def zero(cls, arity: int) -> "TensorElement":
        return cls._raw_n(arity, {})

    @classmethod
    def one(cls, arity: int) -> "TensorElement":
        return cls._raw_n(arity, {(UNIT_WORD,) * arity: Fraction(1)})

    def scalar_like(self, s):
        s = as_scalar(s)
        return self._raw_n(self.arity, {(UNIT_WORD,) * self.arity: s} if s else {})

    def _mul(self, other):
        return mul_tensor(self, other)

    def slot_degrees(self) -> set:
        from .algebra import word_degree

        return {tuple(word_degree(w) for w in key) for key in self.terms}

    def __repr__(self):
        return "TensorElement%d(%s)" % (self.arity, format_tensor(self))

    def __str__(self):
        return format_tensor(self)


def format_tensor(x: TensorElement) -> str:
    if not x.terms:
        return "0"
    out = []
    for i, (key, c) in enumerate(x.sorted_items()):
        body = " ⊗ ".join(format_word(w) for w in key)
        if all(not w for w in key):
            body = "1"
        out.append(format_coeff_term(c, body, i == 0))
    return "".join(out)


def tensor(*factors: AlgebraElement) -> TensorElement:
    """Outer product of 2 or 3 algebra elements."""
    res = {}
    for items in cartesian(*(f.terms.items() for f in factors)):
        c = Fraction(1)
        for _, ci in items:
            c *= ci
        res[tuple(w for w, _ in items)] = c
    return TensorElement._raw_n(len(factors), res)


def tensor2(a: AlgebraElement, b: AlgebraElement) -> TensorElement:
    return tensor(a, b)


def tensor3(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> TensorElement:
    return tensor(a, b, c)


def mul_tensor(x: TensorElement, y: TensorElement) -> TensorElement:
    if x.arity != y.arity:
        raise TypeError("tensor arity mismatch")
    mw = kernel.mul_words
    res: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            c = cx * cy
            slots = [mw(u, v).items() for u, v in zip(kx, ky)]
            if len(slots) == 2:
                for w0, k0 in slots[0]:
                    ck = c * k0
                    for w1, k1 in slots[1]:
                        key = (w0, w1)
                        res[key] = res.get(key, 0) + ck * k1
            else:
                for combo in cartesian(*slots):
                    k = c
                    for _, ki in combo:
                        k *= ki
                    key = tuple(w for w, _ in combo)
                    res[key] = res.get(key, 0) + k
    return TensorElement._raw_n(x.arity, {k: v for k, v in res.items() if v})


mul2 = mul_tensor
mul3 = mul_tensor

EMBED_PATTERNS = ("x⊗1", "1⊗x")
_PATTERN_ALIASES = {"x⊗1": "x⊗1", "x@1": "x⊗1", "D⊗1": "x⊗1", "1⊗x": "1⊗x", "1@x": "1⊗x", "1⊗D": "1⊗x"}


def embed(pattern: str, x: TensorElement) -> TensorElement:
    """Tensor2 -> Tensor3 by inserting the unit in the last ('x⊗1') or first ('1⊗x') slot."""
    p = _PATTERN_ALIASES.get(pattern)
    if p is None:
        raise ValueError("invalid embedding pattern %r; expected one of %s" % (pattern, EMBED_PATTERNS))
    if x.arity != 2:
        raise ValueError("embed expects an order-2 tensor")
    if p == "x⊗1":
        return TensorElement._raw_n(3, {k + (UNIT_WORD,): c for k, c in x.terms.items()})
    return TensorElement._raw_n(3, {(UNIT_WORD,) + k: c for k, c in x.terms.items()})


def slot_map(x: TensorElement, slot: int, f) -> LinearCombination:
    """Apply a linear map ``f(word) -> AlgebraElement | TensorElement | Fraction`` in one slot.

    The image is spliced in place of the slot, so the arity changes by the
    image arity minus one (scalars remove the slot).  An arity-1 result is
    returned as an AlgebraElement.
    """
    res: dict = {}
    cache = {}
    for key, c in x.terms.items():
        w = key[slot]
        img = cache.get(w)
        if img is None:
            img = cache[w] = f(w)
        before, after = key[:slot], key[slot + 1:]
        if isinstance(img, AlgebraElement):
            items = (((v,), k) for v, k in img.terms.items())
        elif isinstance(img, TensorElement):
            items = img.terms.items()
        else:
            s = as_scalar(img)
            items = (((), s),) if s else ()
        for sub, k in items:
            nk = before + sub + after
            res[nk] = res.get(nk, 0) + c * k
    res = {k: v for k, v in res.items() if v}
    arity = len(next(iter(res))) if res else _image_arity(x.arity, f)
    if arity == 1:
        return AlgebraElement._raw({k[0]: v for k, v in res.items()})
    return TensorElement._raw_n(arity, res)


def _image_arity(arity, f):
    img = f(UNIT_WORD)
    if isinstance(img, AlgebraElement):
        return arity
    if isinstance(img, TensorElement):
        return arity + img.arity - 1
    return arity - 1


def mu(x: TensorElement) -> AlgebraElement:
    """Multiplication map H ⊗ H -> H."""
    if x.arity != 2:
        raise ValueError("mu expects an order-2 tensor")
    mw = kernel.mul_words
    res: dict = {}
    for (u, v), c in x.terms.items():
        for w, k in mw(u, v).items():
            res[w] = res.get(w, 0) + c * k
    return AlgebraElement._raw({k: v for k, v in res.items() if v})


def tensor_to_json(x: TensorElement) -> list:
    return [
        {"coeff": scalar_to_json(c), "monomial": [word_to_json(w) for w in key]}
        for key, c in x.sorted_items()
    ]


def tensor_from_json(data: list, arity: int) -> TensorElement:
    res: dict = {}
    for item in data:
        key = tuple(word_from_exponents(m) for m in item["monomial"])
        res[key] = res.get(key, 0) + Fraction(item["coeff"])
    return TensorElement(arity, res)
