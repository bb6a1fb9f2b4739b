"""Truncated formal power series in t over the coefficient algebras.

A series of order N carries coefficients of t^0 .. t^N; every operation
drops higher degrees.  Binary operations refuse mixed orders.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, LinearCombination, TwistConfig, as_scalar, binomial, multiply


class OrderMismatch(ValueError):
    pass


class NonUnitConstant(ValueError):
    pass


class TruncatedSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least a constant coefficient")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        zero = coeffs[0].scale(0)
        coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, x: LinearCombination, order: int) -> "TruncatedSeries":
        return cls([x], order)

    @classmethod
    def monomial(cls, x: LinearCombination, k: int, order: int) -> "TruncatedSeries":
        """x t^k."""
        zero = x.scale(0)
        return cls([zero] * k + [x], order) if k <= order else cls([zero], order)

    def zero_coeff(self):
        return self.coeffs[0].scale(0)

    def __getitem__(self, k: int):
        if 0 <= k <= self.order:
            return self.coeffs[k]
        if k > self.order:
            raise IndexError("degree %d beyond truncation order %d" % (k, self.order))
        return self.zero_coeff()

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries, got %s" % type(other).__name__)
        if other.order != self.order:
            raise OrderMismatch("truncation orders differ: %d vs %d" % (self.order, other.order))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def scale(self, s) -> "TruncatedSeries":
        s = as_scalar(s)
        return TruncatedSeries([a.scale(s) for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinearCombination):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if not a or not b:
                    continue
                p = a * b
                acc = p if acc is None else acc + p
            out.append(acc if acc is not None else self.zero_coeff())
        return TruncatedSeries(out, n)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinearCombination):
            return TruncatedSeries([other * a for a in self.coeffs], self.order)
        return NotImplemented

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        z = self.zero_coeff()
        return TruncatedSeries([z] * k + list(self.coeffs[: max(0, self.order + 1 - k)]), self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatch("cannot raise truncation order from %d to %d" % (self.order, order))
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def map(self, f) -> "TruncatedSeries":
        """Apply a t-linear map coefficientwise."""
        return TruncatedSeries([f(a) for a in self.coeffs], self.order)

    def is_constant(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def invert(self) -> "TruncatedSeries":
        return series_invert(self)

    def __repr__(self):
        return "TruncatedSeries(order=%d, %s)" % (self.order, format_series(self))

    def __str__(self):
        return format_series(self)


def format_series(s: TruncatedSeries) -> str:
    parts = ["[t^%d] %s" % (k, c) for k, c in enumerate(s.coeffs) if c]
    return "; ".join(parts) if parts else "0"


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x + y


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x * y


def series_invert(x: TruncatedSeries) -> TruncatedSeries:
    """Two-sided inverse mod t^{N+1}; the constant term must be the unit."""
    one = x.coeffs[0].scalar_like(1)
    if x.coeffs[0] != one:
        raise NonUnitConstant("constant term is not the unit of the coefficient algebra")
    y = [one]
    for k in range(1, x.order + 1):
        acc = x.zero_coeff()
        for j in range(1, k + 1):
            if x.coeffs[j] and y[k - j]:
                acc = acc + x.coeffs[j] * y[k - j]
        y.append(-acc)
    return TruncatedSeries(y, x.order)


@lru_cache(maxsize=None)
def _x_powers(n0: int, kind: str, upto: int) -> tuple:
    x = TwistConfig(n0, kind, 0).X
    pw = [AlgebraElement.one()]
    for _ in range(upto):
        pw.append(multiply(pw[-1], x))
    return tuple(pw)


def x_powers(cfg: TwistConfig, upto: int | None = None) -> tuple:
    """X^0 .. X^upto (default: the truncation order)."""
    return _x_powers(cfg.n0, cfg.twist_kind, cfg.order if upto is None else upto)


def one_minus_Xt_power(cfg: TwistConfig, q) -> TruncatedSeries:
    """Binomial expansion of (1 - X t)^q for rational q."""
    q = as_scalar(q)
    xp = x_powers(cfg)
    return TruncatedSeries(
        [xp[k].scale((-1) ** k * binomial(q, k)) for k in range(cfg.order + 1)], cfg.order
    )


def clear_caches():
    _x_powers.cache_clear()


# JSON ------------------------------------------------------------------------


def series_to_json(s: TruncatedSeries, coeff_to_json) -> dict:
    return {"order": s.order, "coeffs": [coeff_to_json(c) for c in s.coeffs]}


def series_from_json(data: dict, coeff_from_json) -> TruncatedSeries:
    return TruncatedSeries([coeff_from_json(c) for c in data["coeffs"]], int(data["order"]))
