from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from w22quant.algebra import ONE, TwistConfig, L, W, hbar, hbar_falling, hbar_rising
from w22quant.expr import (
    Add,
    Apply,
    ArityError,
    Fact,
    Gen,
    Hbar,
    KindMismatch,
    Mul,
    Neg,
    Num,
    Ox,
    ParseError,
    Pow,
    Sub,
    Twist,
    UnknownIdentifier,
    evaluate,
    parse,
    to_source,
)
from w22quant.series import TruncatedSeries, one_minus_Xt_power
from w22quant.tensor import tensor2, tensor3


def test_parse_examples():
    assert parse("L(3)*W(-2) + 2") == Add(Mul(Gen("L", 3), Gen("W", -2)), Num(Fraction(2)))
    assert parse("Delta(L(3))") == Apply("Delta", Gen("L", 3))
    assert parse("hb_r(-1/2, 3)") == Fact(True, Fraction(-1, 2), 3)
    assert parse("C(1/2)") == Twist("C", Fraction(1, 2))
    assert parse("L(1) ⊗ hb") == Ox((Gen("L", 1), Hbar()))


def test_precedence():
    # ^ > * > ox > +/-
    assert parse("L(1)*L(2)^2") == Mul(Gen("L", 1), Pow(Gen("L", 2), 2))
    assert parse("L(1) ox L(2)*L(3)") == Ox((Gen("L", 1), Mul(Gen("L", 2), Gen("L", 3))))
    assert parse("L(1) ox L(2) + 1") == Add(Ox((Gen("L", 1), Gen("L", 2))), Num(Fraction(1)))
    assert parse("-L(1)^2") == Neg(Pow(Gen("L", 1), 2))
    assert parse("1 - 2 - 3") == Sub(Sub(Num(Fraction(1)), Num(Fraction(2))), Num(Fraction(3)))


def test_syntax_error_position():
    with pytest.raises(ParseError) as e:
        parse("L(")
    assert e.value.position == 2
    assert e.value.expected
    with pytest.raises(ParseError) as e:
        parse("L(1) L(2)")
    assert e.value.position == 5


@pytest.mark.parametrize("src,exc", [
    ("L(1,2)", ArityError),
    ("hb_r(1)", ArityError),
    ("Delta(L(1), L(2))", ArityError),
    ("L(1) ox L(1) ox L(1) ox L(1)", ArityError),
    ("foo(1)", UnknownIdentifier),
    ("L(1/2)", ParseError),
    ("hb_f(0, -1)", ParseError),
    ("1/0", ParseError),
    ("L(1)^x", ParseError),
    ("$", ParseError),
])
def test_errors(src, exc):
    with pytest.raises(exc):
        parse(src)


def test_num_is_nonnegative():
    with pytest.raises(ValueError):
        Num(Fraction(-1))


# evaluation

CFG = TwistConfig(1, "L", 3)


def test_evaluate_examples():
    v = evaluate("eps(L(5))", CFG)
    assert v.kind == "scalar" and v.data == 0
    v = evaluate("D(0)*C(0)", CFG)
    assert v.series and v.kind == "tensor2"
    assert v.data == TruncatedSeries.constant(tensor2(ONE, ONE), 3)
    cfg = TwistConfig(1, "W", 4)
    v = evaluate("S(W(2))", cfg)
    assert v.data == -(one_minus_Xt_power(cfg, -2) * W(2))
    assert v.order == 4


def test_evaluate_atoms():
    assert evaluate("hb", CFG).data == hbar(CFG)
    assert evaluate("hb_r(1/2,2)", CFG).data == hbar_rising(CFG, Fraction(1, 2), 2)
    assert evaluate("hb_f(1,3)", CFG).data == hbar_falling(CFG, 1, 3)
    assert evaluate("2*L(1) - 1/2", CFG).data == L(1).scale(2) - Fraction(1, 2)
    assert evaluate("(L(1) + 1)^2", CFG).data == (L(1) + 1) * (L(1) + 1)
    assert evaluate("L(1) ox W(2) ox 3", CFG).data == tensor3(L(1), W(2), ONE).scale(3)
    assert evaluate("Delta0(L(2))", CFG).data == tensor2(L(2), ONE) + tensor2(ONE, L(2))
    assert evaluate("S0(L(2)*W(1))", CFG).data == W(1) * L(2)
    assert evaluate("2^3", CFG).data == 8


def test_series_promotion():
    v = evaluate("U(0)*V(0) + L(1)", CFG)
    assert v.series and v.kind == "algebra"
    assert v.data == TruncatedSeries.constant(L(1) + 1, 3)
    v = evaluate("C(0) - 1", CFG)
    assert v.data[0].is_zero()
    v = evaluate("V(0) ox L(1)", CFG)
    assert v.kind == "tensor2" and v.data[1] == tensor2(hbar(CFG) * CFG.X, L(1))
    v = evaluate("eps(U(1))", CFG)
    assert v.series and v.data[0] == ONE


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        evaluate("Delta0(L(1)) ox L(2)", CFG)
    with pytest.raises(KindMismatch):
        evaluate("Delta0(L(1)) + L(2)", CFG)
    with pytest.raises(KindMismatch):
        evaluate("S(C(0))", CFG)
    with pytest.raises(KindMismatch):
        evaluate("Delta0(L(1)) * (L(1) ox L(1) ox L(1))", CFG)


# canonical printing round trip

rationals = st.builds(Fraction, st.integers(0, 9), st.integers(1, 4))
signed = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
leaves = st.one_of(
    rationals.map(Num),
    st.builds(Gen, st.sampled_from("LW"), st.integers(-5, 5)),
    st.just(Hbar()),
    st.builds(Fact, st.booleans(), signed, st.integers(0, 4)),
    st.builds(Twist, st.sampled_from("CDUV"), signed),
)


def _extend(children):
    return st.one_of(
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Mul, children, children),
        st.builds(Neg, children),
        st.builds(Pow, children, st.integers(0, 3)),
        st.builds(Apply, st.sampled_from(["Delta0", "S0", "eps", "Delta", "S"]), children),
        st.lists(children, min_size=2, max_size=3).map(lambda xs: Ox(tuple(xs))),
    )


asts = st.recursive(leaves, _extend, max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(asts)
def test_print_parse_roundtrip(e):
    src = to_source(e)
    assert parse(src) == e, src
    assert to_source(parse(src)) == src
