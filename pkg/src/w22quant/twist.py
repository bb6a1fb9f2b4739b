"""Twist elements C_b, D_b, U_b, V_b and the twisted Hopf structure.

The twisted coproduct and antipode are computed by conjugation; the closed
forms are evaluated independently so the two can be compared.  The
coefficients b_k come from iterated brackets ad(X)^k applied to a
generator rather than from a printed product formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import (
    AlgebraElement,
    Generator,
    TwistConfig,
    ad_power,
    as_scalar,
    eigenvalue,
    gen,
    hbar_falling,
    hbar_rising,
    multiply,
)
from .hopf import delta0, s0
from .series import TruncatedSeries, one_minus_Xt_power, series_invert, x_powers
from .tensor import TensorElement, tensor2

# set by w22quant.mutations
_drop_t2 = False


@dataclass(frozen=True)
class TwistElements:
    cfg: TwistConfig
    b: Fraction
    C: TruncatedSeries
    D: TruncatedSeries
    U: TruncatedSeries
    V: TruncatedSeries


@dataclass(frozen=True)
class TwistCoefficients:
    n: int
    kind: str
    values: tuple

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


@lru_cache(maxsize=None)
def _build(cfg: TwistConfig, b: Fraction) -> TwistElements:
    xp = x_powers(cfg)
    N = cfg.order
    C, D, U, V = [], [], [], []
    for k in range(N + 1):
        f = Fraction(1, factorial(k))
        sgn = (-1) ** k
        C.append(tensor2(hbar_rising(cfg, b, k), xp[k]).scale(f))
        D.append(tensor2(hbar_falling(cfg, b, k), xp[k]).scale(sgn * f))
        U.append(multiply(hbar_falling(cfg, -b, k), xp[k]).scale(sgn * f))
        V.append(multiply(hbar_falling(cfg, b, k), xp[k]).scale(f))
    if _drop_t2 and N >= 2:
        D[2] = TensorElement.zero(2)
    return TwistElements(cfg, b, *(TruncatedSeries(s, N) for s in (C, D, U, V)))


def build_twist(cfg: TwistConfig, b=0) -> TwistElements:
    return _build(cfg, as_scalar(b))


@lru_cache(maxsize=None)
def d_inverse(cfg: TwistConfig) -> TruncatedSeries:
    """D_0^{-1} by generic series inversion (not via C_0)."""
    return series_invert(build_twist(cfg).D)


def clear_caches():
    _build.cache_clear()
    d_inverse.cache_clear()
    ad_term.cache_clear()


def nu(cfg: TwistConfig, g: Generator, sign: int = 1) -> Fraction:
    """Exponent 𝕟 for generator g: the ad(hbar) eigenvalue, or its negative."""
    return sign * eigenvalue(cfg, g)


@lru_cache(maxsize=None)
def ad_term(cfg: TwistConfig, g: Generator, k: int) -> AlgebraElement:
    """ad(X)^k(g) / k!."""
    return ad_power(cfg.X, k, AlgebraElement.from_generator(g)).scale(Fraction(1, factorial(k)))


def _single_coeff(a: AlgebraElement) -> Fraction:
    if not a.terms:
        return Fraction(0)
    if len(a.terms) != 1:
        raise ArithmeticError("expected a multiple of one generator, got %s" % a)
    return next(iter(a.terms.values()))


def bk_coefficients(cfg: TwistConfig, n: int, kmax: int, kind: str = "L") -> TwistCoefficients:
    """b_0 .. b_kmax read off ad(X)^k(g_n) = k! b_k g'_{n + k n0}."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    g = Generator(kind, n)
    return TwistCoefficients(n, kind, tuple(_single_coeff(ad_term(cfg, g, k)) for k in range(kmax + 1)))


def printed_bk(cfg: TwistConfig, n: int, k: int, variant: str = "n0") -> Fraction:
    """Product formula for b_k as printed.

    ``n0``: (1/k!) prod_{p<k} ((1-p) n0 - n).
    ``nu``: (1/k!) prod_{p<k} ((1-p) n/n0 - n).
    """
    if variant == "n0":
        base = Fraction(cfg.n0)
    elif variant == "nu":
        base = Fraction(n, cfg.n0)
    else:
        raise ValueError("unknown b_k variant %r" % variant)
    prod = Fraction(1)
    for p in range(k):
        prod *= (1 - p) * base - n
    return prod / factorial(k)


def _as_series(a, order: int) -> TruncatedSeries:
    if isinstance(a, TruncatedSeries):
        if a.order != order:
            raise ValueError("series order %d does not match config order %d" % (a.order, order))
        return a
    return TruncatedSeries.constant(a, order)


def twisted_delta(cfg: TwistConfig, a) -> TruncatedSeries:
    """D Δ°(a) D^{-1}; ``a`` may be an element or a series of elements."""
    a = _as_series(a, cfg.order)
    return build_twist(cfg).D * a.map(delta0) * d_inverse(cfg)


def twisted_antipode(cfg: TwistConfig, a) -> TruncatedSeries:
    """U^{-1} S°(a) U with U^{-1} = V_0."""
    a = _as_series(a, cfg.order)
    tw = build_twist(cfg)
    return tw.V * a.map(s0) * tw.U


# closed forms ----------------------------------------------------------------


@dataclass(frozen=True)
class Reading:
    """How to read the printed closed forms.

    nu_sign: +1 takes 𝕟 = n/n0, -1 takes 𝕟 = -n/n0.
    coeffs: 'ad' uses ad(X)^k(g)/k!, 'printed' uses the printed b_k times the
        printed generator.
    factorial: 'rising' or 'falling' factor hbar_k^{<k>} / hbar_k^{[k]} in S.
    """

    nu_sign: int = 1
    coeffs: str = "ad"
    factorial: str = "falling"

    def label(self) -> str:
        return "nu=%sn/n0,coeffs=%s,factorial=%s" % ("+" if self.nu_sign > 0 else "-", self.coeffs, self.factorial)


# the reading under which closed forms agree with conjugation
DEFAULT_READING = Reading()


def _closed_terms(cfg: TwistConfig, g: Generator, reading: Reading) -> list:
    """T_k for k = 0..N, the generator part of the k-th closed-form term."""
    N = cfg.order
    if reading.coeffs == "ad":
        return [ad_term(cfg, g, k) for k in range(N + 1)]
    if reading.coeffs != "printed":
        raise ValueError("unknown coefficient reading %r" % reading.coeffs)
    n, n0 = g.index, cfg.n0
    if cfg.twist_kind == "W" and g.kind == "W":
        return [gen("W", n)] + [AlgebraElement.zero()] * N
    out_kind = g.kind if cfg.twist_kind == "L" else "W"
    return [gen(out_kind, n + k * n0).scale(printed_bk(cfg, n, k)) for k in range(N + 1)]


def closed_form_delta(cfg: TwistConfig, g: Generator, reading: Reading = DEFAULT_READING) -> TruncatedSeries:
    """g⊗(1-Xt)^𝕟 + Σ_k (-1)^k hbar^{<k>} ⊗ (1-Xt)^{-k} T_k t^k."""
    N = cfg.order
    gel = AlgebraElement.from_generator(g)
    res = one_minus_Xt_power(cfg, nu(cfg, g, reading.nu_sign)).map(lambda c: tensor2(gel, c))
    for k, T in enumerate(_closed_terms(cfg, g, reading)):
        if not T:
            continue
        right = (one_minus_Xt_power(cfg, -k) * T).shift(k)
        left = hbar_rising(cfg, 0, k).scale((-1) ** k)
        res = res + right.map(lambda c: tensor2(left, c))
    return res


def closed_form_antipode(cfg: TwistConfig, g: Generator, reading: Reading = DEFAULT_READING) -> TruncatedSeries:
    """-(1-Xt)^{-𝕟} Σ_k T_k hbar_k^{[k]} t^k (or hbar_k^{<k>} under the rising reading)."""
    N = cfg.order
    fact = hbar_rising if reading.factorial == "rising" else hbar_falling
    if reading.factorial not in ("rising", "falling"):
        raise ValueError("unknown factorial reading %r" % reading.factorial)
    zero = AlgebraElement.zero()
    inner = [zero] * (N + 1)
    for k, T in enumerate(_closed_terms(cfg, g, reading)):
        if T:
            inner[k] = multiply(T, fact(cfg, k, k))
    return -(one_minus_Xt_power(cfg, -nu(cfg, g, reading.nu_sign)) * TruncatedSeries(inner, N))


def all_readings() -> list:
    return [
        Reading(s, c, f) for s in (1, -1) for c in ("ad", "printed") for f in ("rising", "falling")
    ]
