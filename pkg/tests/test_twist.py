from fractions import Fraction

import pytest

from w22quant.algebra import ONE, AlgebraElement, Generator, TwistConfig, L, W, hbar, hbar_falling
from w22quant.hopf import delta0, s0
from w22quant.series import TruncatedSeries, one_minus_Xt_power, series_invert
from w22quant.tensor import tensor2
from w22quant.twist import (
    DEFAULT_READING,
    Reading,
    all_readings,
    bk_coefficients,
    build_twist,
    closed_form_antipode,
    closed_form_delta,
    d_inverse,
    nu,
    printed_bk,
    twisted_antipode,
    twisted_delta,
)

CONFIGS = [TwistConfig(n0, k, 4) for k in "LW" for n0 in (1, 2, -1)]
GENS = [Generator(k, n) for k in "LW" for n in range(-3, 4)]


def test_build_twist_examples():
    cfg = TwistConfig(1, "L", 3)
    tw = build_twist(cfg)
    assert tw.D[0] == tensor2(ONE, ONE)
    assert tw.D[1] == tensor2(hbar(cfg), cfg.X).scale(-1)
    assert tw.U[2] == (hbar_falling(cfg, 0, 2) * cfg.X * cfg.X).scale(Fraction(1, 2))


@pytest.mark.parametrize("cfg", CONFIGS)
def test_inverse_pairs(cfg):
    for b in (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)):
        tw, twn = build_twist(cfg, b), build_twist(cfg, -b)
        assert tw.D * tw.C == TruncatedSeries.constant(tensor2(ONE, ONE), cfg.order)
        assert twn.V * tw.U == TruncatedSeries.constant(ONE, cfg.order)
    assert d_inverse(cfg) == build_twist(cfg).C


def test_bk_examples():
    cfg = TwistConfig(1)
    b = bk_coefficients(cfg, 3, 4)
    assert b[0] == 1 and b[1] == -2 and b[2] == 3
    for n in range(-3, 4):
        for k in range(5):
            assert printed_bk(cfg, n, k) == bk_coefficients(cfg, n, 4)[k]
    with pytest.raises(ValueError):
        bk_coefficients(cfg, 1, -1)
    with pytest.raises(ValueError):
        printed_bk(cfg, 1, 1, "other")


def test_bk_w_twist_on_l():
    # ad(W)^k L_n stops after one step: k = 0 gives L_n, k >= 2 gives zero
    cfg = TwistConfig(1, "W")
    b = bk_coefficients(cfg, 3, 3, "L")
    assert b.values == (1, -2, 0, 0)


def test_nu_sign():
    cfg = TwistConfig(2)
    assert nu(cfg, Generator("L", 3)) == Fraction(3, 2)
    assert nu(cfg, Generator("W", -4), sign=-1) == 2


def test_twisted_examples():
    cfg = TwistConfig(1, "L", 3)
    assert twisted_delta(cfg, ONE) == TruncatedSeries.constant(tensor2(ONE, ONE), 3)
    assert twisted_antipode(cfg, ONE) == TruncatedSeries.constant(ONE, 3)
    for g in GENS:
        e = AlgebraElement.from_generator(g)
        assert twisted_delta(cfg, e)[0] == delta0(e)
        assert twisted_antipode(cfg, e)[0] == s0(e)


def test_w_twist_coproduct_two_terms():
    cfg = TwistConfig(1, "W", 4)
    for n in range(-3, 4):
        w = W(n)
        nn = Fraction(n)
        expected = one_minus_Xt_power(cfg, nn).map(lambda c: tensor2(w, c)) + \
            TruncatedSeries.constant(tensor2(ONE, w), 4)
        assert twisted_delta(cfg, w) == expected
        assert twisted_antipode(cfg, w) == -(one_minus_Xt_power(cfg, -nn) * w)


def test_closed_form_t1_coefficient():
    cfg = TwistConfig(1, "L", 4)
    d = closed_form_delta(cfg, Generator("L", 3))
    # 𝕟 L_3 ⊗ (-X) + (-1) b_1 hbar ⊗ L_4 with 𝕟 = 3, b_1 = -2, hbar = -L_0
    assert d[1] == tensor2(L(3), L(1)).scale(-3) + tensor2(L(0), L(4)).scale(-2)
    assert d == twisted_delta(cfg, L(3))


@pytest.mark.parametrize("cfg", CONFIGS)
def test_closed_forms_match_conjugation(cfg):
    for g in GENS:
        e = AlgebraElement.from_generator(g)
        assert closed_form_delta(cfg, g) == twisted_delta(cfg, e), g
        assert closed_form_antipode(cfg, g) == twisted_antipode(cfg, e), g


def test_readings():
    assert len(all_readings()) == 8
    assert DEFAULT_READING == Reading(1, "ad", "falling")
    cfg = TwistConfig(1, "L", 4)
    g = Generator("L", 2)
    # the negated exponent fails once n != 0
    assert closed_form_delta(cfg, g, Reading(-1)) != twisted_delta(cfg, L(2))
    assert closed_form_antipode(cfg, g, Reading(1, "ad", "rising")) != twisted_antipode(cfg, L(2))
    with pytest.raises(ValueError):
        closed_form_antipode(cfg, g, Reading(1, "ad", "sideways"))
    with pytest.raises(ValueError):
        closed_form_delta(cfg, g, Reading(1, "neither"))


def test_antipode_inverse_cross_check():
    cfg = TwistConfig(2, "W", 4)
    tw = build_twist(cfg)
    assert series_invert(tw.U) == tw.V


def test_series_argument_order_checked():
    cfg = TwistConfig(1, "L", 3)
    with pytest.raises(ValueError):
        twisted_delta(cfg, TruncatedSeries.constant(L(1), 2))
    # a series argument L_1 + W_2 t is conjugated degreewise
    s = TruncatedSeries([L(1), W(2)], 3)
    assert twisted_delta(cfg, s) == twisted_delta(cfg, L(1)) + twisted_delta(cfg, W(2)).shift(1)
