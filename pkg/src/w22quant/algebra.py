"""Exact arithmetic in the enveloping algebra U(W(2,2)) over the rationals.

A PBW word is a sorted tuple of packed generator codes (see ``kernel``);
an element is a finite map word -> Fraction with no zero coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from . import kernel

Word = tuple  # tuple[int, ...], non-decreasing

UNIT_WORD: Word = ()


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars: %r" % x)
    return Fraction(x)


@dataclass(frozen=True, order=True)
class Generator:
    """L_n or W_n.  Ordering puts every L before every W, then by index."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("L", "W"):
            raise ValueError("generator kind must be 'L' or 'W', got %r" % (self.kind,))

    @property
    def code(self) -> int:
        return kernel.encode(self.kind, self.index)

    @classmethod
    def from_code(cls, code: int) -> "Generator":
        return cls(*kernel.decode(code))

    def __str__(self):
        return "%s_%d" % (self.kind, self.index)


def word_degree(word: Word) -> int:
    return sum(kernel.decode(c)[1] for c in word)


def word_exponents(word: Word) -> list:
    """Run-length form [(kind, index, exponent), ...] of a sorted word."""
    out = []
    for c in word:
        kind, idx = kernel.decode(c)
        if out and out[-1][0] == kind and out[-1][1] == idx:
            out[-1][2] += 1
        else:
            out.append([kind, idx, 1])
    return [tuple(x) for x in out]


def word_from_exponents(items: Iterable) -> Word:
    codes = []
    for kind, idx, exp in items:
        if exp < 0:
            raise ValueError("negative exponent in monomial")
        codes.extend([kernel.encode(kind, int(idx))] * int(exp))
    return tuple(sorted(codes))


def format_word(word: Word) -> str:
    if not word:
        return "1"
    parts = []
    for kind, idx, exp in word_exponents(word):
        parts.append("%s_%d" % (kind, idx) + ("^%d" % exp if exp > 1 else ""))
    return " ".join(parts)


class LinearCombination:
    """Shared machinery for finite rational combinations over hashable keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        if terms is None:
            terms = {}
        self.terms = {k: as_scalar(v) for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, terms: dict):
        # terms already clean: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def _like(self, terms: dict):
        return self._raw(terms)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot combine %s with %s" % (type(self).__name__, type(other).__name__))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.scalar_like(other)
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms and self._arity_key() == other._arity_key()

    def _arity_key(self):
        return None

    def __hash__(self):
        return hash((type(self).__name__, self._arity_key(), frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.scalar_like(other)
        self._check_compatible(other)
        res = dict(self.terms)
        for k, c in other.terms.items():
            v = res.get(k, 0) + c
            if v:
                res[k] = v
            else:
                res.pop(k, None)
        return self._like(res)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.scalar_like(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "LinearCombination":
        s = as_scalar(s)
        if not s:
            return self._like({})
        return self._like({k: c * s for k, c in self.terms.items()})

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def sorted_items(self):
        return sorted(self.terms.items())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        return self._mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        res = self.scalar_like(1)
        base = self
        while k:
            if k & 1:
                res = res * base
            k >>= 1
            if k:
                base = base * base
        return res


class AlgebraElement(LinearCombination):
    """Element of U(W(2,2)) in PBW normal form."""

    __slots__ = ()

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "AlgebraElement":
        return cls._raw({UNIT_WORD: Fraction(1)})

    @classmethod
    def scalar(cls, s) -> "AlgebraElement":
        s = as_scalar(s)
        return cls._raw({UNIT_WORD: s} if s else {})

    def scalar_like(self, s):
        return AlgebraElement.scalar(s)

    @classmethod
    def from_generator(cls, g: Generator) -> "AlgebraElement":
        return cls._raw({(g.code,): Fraction(1)})

    @classmethod
    def from_word(cls, word: Word, coeff=1) -> "AlgebraElement":
        return cls._raw({tuple(word): as_scalar(coeff)}) if coeff else cls.zero()

    def _mul(self, other):
        return multiply(self, other)

    def constant_term(self) -> Fraction:
        return self.terms.get(UNIT_WORD, Fraction(0))

    def is_homogeneous(self) -> bool:
        return len({word_degree(w) for w in self.terms}) <= 1

    def degrees(self) -> set:
        return {word_degree(w) for w in self.terms}

    def __repr__(self):
        return "AlgebraElement(%s)" % format_element(self)

    def __str__(self):
        return format_element(self)


def format_coeff_term(c: Fraction, body: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if body == "1":
        text = str(a)
    elif a == 1:
        text = body
    else:
        text = "%s %s" % (a, body)
    if first:
        return ("-" if sign == "-" else "") + text
    return " %s %s" % (sign, text)


def format_element(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    return "".join(
        format_coeff_term(c, format_word(w), i == 0) for i, (w, c) in enumerate(a.sorted_items())
    )


def L(n: int) -> AlgebraElement:
    return AlgebraElement.from_generator(Generator("L", n))


def W(n: int) -> AlgebraElement:
    return AlgebraElement.from_generator(Generator("W", n))


def gen(kind: str, n: int) -> AlgebraElement:
    return AlgebraElement.from_generator(Generator(kind, n))


ONE = AlgebraElement.one()
ZERO = AlgebraElement.zero()


def bracket_basis(g: Generator, h: Generator) -> AlgebraElement:
    """Structure constants of W(2,2) on two basis generators."""
    return AlgebraElement._raw(
        {(code,): Fraction(c) for code, c in kernel.bracket(g.code, h.code)}
    )


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    res: dict = {}
    mw = kernel.mul_words
    for u, c1 in a.terms.items():
        for v, c2 in b.terms.items():
            c12 = c1 * c2
            for w, k in mw(u, v).items():
                res[w] = res.get(w, 0) + c12 * k
    return AlgebraElement._raw({w: c for w, c in res.items() if c})


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return multiply(a, b) - multiply(b, a)


def ad_power(x: AlgebraElement, k: int, y: AlgebraElement) -> AlgebraElement:
    """(ad x)^k (y), iterated commutators computed in the enveloping algebra."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        if not y:
            break
        y = commutator(x, y)
    return y


def binomial(b, i: int) -> Fraction:
    """Generalized binomial coefficient b(b-1)...(b-i+1)/i!."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    b = as_scalar(b)
    num = Fraction(1)
    for k in range(i):
        num *= b - k
    return num / factorial(i)


@dataclass(frozen=True)
class TwistConfig:
    """Twist data: X = L_{n0} or W_{n0}, truncation order N of the t-series."""

    n0: int = 1
    twist_kind: str = "L"
    order: int = 4

    def __post_init__(self):
        if not isinstance(self.n0, int) or self.n0 == 0:
            raise ValueError("n0 must be a nonzero integer")
        if self.twist_kind not in ("L", "W"):
            raise ValueError("twist_kind must be 'L' or 'W'")
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")

    @property
    def X(self) -> AlgebraElement:
        return gen(self.twist_kind, self.n0)

    def with_order(self, order: int) -> "TwistConfig":
        return TwistConfig(self.n0, self.twist_kind, order)

    def as_dict(self) -> dict:
        return {"n0": self.n0, "twist_kind": self.twist_kind, "order": self.order}


def hbar(cfg: TwistConfig) -> AlgebraElement:
    return L(0).scale(Fraction(-1, cfg.n0))


def eigenvalue(cfg: TwistConfig, g: Generator) -> Fraction:
    """The scalar e with [hbar, g] = e g, read off from the commutator."""
    comm = commutator(hbar(cfg), AlgebraElement.from_generator(g))
    e = comm.coeff((g.code,))
    if comm != AlgebraElement.from_generator(g).scale(e):
        raise ArithmeticError("%s is not an eigenvector of ad hbar" % g)
    return e


@lru_cache(maxsize=None)
def _factorial_element(n0: int, b: Fraction, i: int, step: int) -> AlgebraElement:
    if i == 0:
        return ONE
    h = L(0).scale(Fraction(-1, n0))
    prev = _factorial_element(n0, b, i - 1, step)
    return multiply(prev, h + (b + step * (i - 1)))


def hbar_rising(cfg: TwistConfig, b, i: int) -> AlgebraElement:
    """(hbar+b)(hbar+b+1)...(hbar+b+i-1)."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return _factorial_element(cfg.n0, as_scalar(b), i, 1)


def hbar_falling(cfg: TwistConfig, b, i: int) -> AlgebraElement:
    """(hbar+b)(hbar+b-1)...(hbar+b-i+1)."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    return _factorial_element(cfg.n0, as_scalar(b), i, -1)


def clear_caches():
    kernel.clear_cache()
    _factorial_element.cache_clear()


# canonical JSON --------------------------------------------------------------


def scalar_to_json(c: Fraction) -> str:
    return "%d/%d" % (c.numerator, c.denominator)


def word_to_json(word: Word) -> list:
    return [list(x) for x in word_exponents(word)]


def element_to_json(a: AlgebraElement) -> list:
    return [{"coeff": scalar_to_json(c), "monomial": word_to_json(w)} for w, c in a.sorted_items()]


def element_from_json(data: list) -> AlgebraElement:
    res: dict = {}
    for item in data:
        w = word_from_exponents(item["monomial"])
        res[w] = res.get(w, 0) + Fraction(item["coeff"])
    return AlgebraElement(res)
