"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from w22quant.algebra import AlgebraElement, Generator

generators = st.builds(Generator, st.sampled_from(["L", "W"]), st.integers(-4, 4))
small_rationals = st.sampled_from([Fraction(x) for x in ("0", "1", "-1", "1/2", "-1/2", "2", "3/4")])


@st.composite
def words(draw, max_len=3):
    gs = draw(st.lists(generators, max_size=max_len))
    el = AlgebraElement.one()
    for g in gs:
        el = el * AlgebraElement.from_generator(g)
    return el


@st.composite
def elements(draw, max_terms=3, max_len=2):
    acc = AlgebraElement.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        acc = acc + draw(words(max_len)).scale(draw(small_rationals))
    return acc
