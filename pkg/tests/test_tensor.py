from fractions import Fraction

import pytest
from hypothesis import given, settings

from w22quant.algebra import ONE, AlgebraElement, TwistConfig, L, W, hbar
from w22quant.hopf import delta0, eps, s0
from w22quant.tensor import (
    TensorElement,
    embed,
    mu,
    mul2,
    slot_map,
    tensor2,
    tensor3,
    tensor_from_json,
    tensor_to_json,
)
from tests.strategies import elements


def test_tensor2_examples():
    assert tensor2(L(1), ONE) == TensorElement(2, {((L(1).sorted_items()[0][0]), ()): 1})
    assert tensor2(AlgebraElement.zero(), W(3)).is_zero()
    cfg = TwistConfig(1)
    assert tensor2(hbar(cfg), cfg.X) == tensor2(L(0), L(1)).scale(-1)


def test_mul2_examples():
    a, b = L(2) + W(-1), W(3) * L(1)
    assert mul2(tensor2(a, ONE), tensor2(ONE, b)) == tensor2(a, b)
    h = hbar(TwistConfig(1))
    assert mul2(tensor2(ONE, L(4)), tensor2(h, ONE)) == tensor2(h, L(4))
    x = tensor2(h, L(1))
    assert x * x == tensor2(h * h, L(1) * L(1))


def test_arity_mismatch():
    with pytest.raises(TypeError):
        tensor2(L(1), ONE) + tensor3(L(1), ONE, ONE)
    with pytest.raises(ValueError):
        TensorElement(4)


def test_embed_patterns():
    x = tensor2(L(1), W(2))
    assert embed("x⊗1", x) == tensor3(L(1), W(2), ONE)
    assert embed("1⊗x", x) == tensor3(ONE, L(1), W(2))
    assert embed("D⊗1", x) == embed("x@1", x)
    with pytest.raises(ValueError):
        embed("1⊗x⊗1", x)


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements(), elements())
def test_embed_preserves_products(a, b, c, d):
    x, y = tensor2(a, b), tensor2(c, d)
    for p in ("x⊗1", "1⊗x"):
        assert embed(p, x * y) == embed(p, x) * embed(p, y)


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements())
def test_bilinear(a, a2, b):
    assert tensor2(a + a2, b) == tensor2(a, b) + tensor2(a2, b)
    assert tensor2(b, a + a2) == tensor2(b, a) + tensor2(b, a2)
    assert tensor2(a.scale(Fraction(3, 2)), b) == tensor2(a, b.scale(Fraction(3, 2)))


@settings(max_examples=30, deadline=None)
@given(elements(), elements(), elements(), elements(), elements(), elements())
def test_mul2_associative(a, b, c, d, e, f):
    x, y, z = tensor2(a, b), tensor2(c, d), tensor2(e, f)
    assert (x * y) * z == x * (y * z)


def test_slot_degree_additivity():
    x = tensor2(L(2), W(-1))
    y = tensor2(W(3), L(1) * L(1))
    assert (x * y).slot_degrees() == {(5, 1)}


def test_slot_map():
    x = tensor2(L(1), W(2)) + tensor2(ONE, L(3))
    x2 = tensor2(L(1), ONE) + tensor2(ONE, L(3))
    assert slot_map(x2, 1, lambda w: eps(AlgebraElement.from_word(w))) == L(1)
    assert mu(tensor2(L(1), W(2))) == L(1) * W(2)
    assert slot_map(x, 0, lambda w: s0(AlgebraElement.from_word(w))) == tensor2(-L(1), W(2)) + tensor2(ONE, L(3))
    assert slot_map(tensor2(L(1), ONE), 0, lambda w: delta0(AlgebraElement.from_word(w))).arity == 3


@settings(max_examples=40, deadline=None)
@given(elements(), elements())
def test_json_roundtrip(a, b):
    x = tensor2(a, b)
    assert tensor_from_json(tensor_to_json(x), 2) == x
    y = tensor3(a, b, a)
    assert tensor_from_json(tensor_to_json(y), 3) == y
