from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamred.superblade import (
    Blade,
    Element,
    ElementParseError,
    Signature,
    blade_product,
    format_element,
    odd_partial,
    parity_decompose,
    parse_element,
    poisson_bracket,
    supercommutator,
)

from oracles import dict_product, to_words, word_product

C4 = Signature.clifford(4)


@st.composite
def signatures(draw, n_max=6):
    n = draw(st.integers(1, n_max))
    return Signature(tuple(draw(st.sampled_from((-1, 0, 1))) for _ in range(n)))


@st.composite
def elements(draw, sig, max_terms=4, parity=None):
    masks = draw(st.lists(st.integers(0, sig.dim - 1), min_size=0, max_size=max_terms))
    if parity is not None:
        masks = [m ^ 1 if m.bit_count() % 2 != parity else m for m in masks]
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return Element(sig, {m: draw(coeffs) for m in masks})


@st.composite
def sig_and_elements(draw, k=3, parity=False):
    sig = draw(signatures())
    if parity:
        ps = [draw(st.integers(0, 1)) for _ in range(k)]
        return sig, ps, [draw(elements(sig, parity=p)) for p in ps]
    return sig, [draw(elements(sig)) for _ in range(k)]


# blade products


@pytest.mark.parametrize(
    "a, b, sig, expected",
    [
        ((1,), (1,), (-1, -1), (-1, ())),
        ((1,), (2,), (-1, -1), (1, (1, 2))),
        ((2,), (1,), (1, 0), (-1, (1, 2))),
        ((1,), (1,), (0, 0), (0, ())),
    ],
)
def test_blade_product_basic(a, b, sig, expected):
    s, blade = blade_product(Blade.from_indices(a), Blade.from_indices(b), Signature(sig))
    scale, idx = expected
    assert s == scale
    if s:
        assert blade.indices == idx


def test_blade_product_out_of_range():
    with pytest.raises((ValueError, IndexError)):
        blade_product(Blade.from_indices((3,)), Blade.from_indices((1,)), Signature((-1, -1)))


@settings(max_examples=300, deadline=None)
@given(signatures(), st.data())
def test_blade_product_matches_letter_oracle(sig, data):
    a = data.draw(st.integers(0, sig.dim - 1))
    b = data.draw(st.integers(0, sig.dim - 1))
    ba, bb = Blade(a), Blade(b)
    s, blade = blade_product(ba, bb, sig)
    s_ref, w = word_product(ba.indices, bb.indices, sig.entries)
    assert s == s_ref
    if s:
        assert blade.indices == w


def test_wx_wy_is_xy():
    w, x, y = (Element.generator(C4, i) for i in (1, 2, 3))
    assert (w * x) * (w * y) == x * y


# element arithmetic


def test_casimir_quantized():
    theta = Element.monomial(C4, (1, 2, 3, 4))
    a_plus = parse_element("1/2 x1 x2 + 1/2 x3 x4", C4)
    assert a_plus * a_plus == (theta - 1).scale(Fraction(1, 2))


def test_unit_law_and_zero():
    f = parse_element("3 x1 - 1/2 x2 x4 + 7", C4)
    one = Element.scalar(C4)
    assert one * f == f and f * one == f
    assert not Element.zero(C4) * f
    assert f ** 0 == one


def test_signature_mismatch_raises():
    with pytest.raises(ValueError):
        Element.generator(C4, 1) * Element.generator(Signature.clifford(3), 1)


@settings(max_examples=200, deadline=None)
@given(sig_and_elements(2))
def test_product_matches_letter_oracle(args):
    sig, (f, g) = args
    assert to_words(f * g) == dict_product(to_words(f), to_words(g), sig.entries)


@settings(max_examples=200, deadline=None)
@given(sig_and_elements(3))
def test_associative_and_distributive(args):
    sig, (f, g, h) = args
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h


# supercommutator


def test_generator_brackets():
    for i in range(1, 5):
        for j in range(1, 5):
            b = supercommutator(Element.generator(C4, i), Element.generator(C4, j))
            assert b == Element.scalar(C4, -2 if i == j else 0)


def test_spin3_brackets():
    a_p = parse_element("1/2 x1 x2 + 1/2 x3 x4", C4)
    b_p = parse_element("1/2 x1 x3 + 1/2 x4 x2", C4)
    c_p = parse_element("1/2 x1 x4 + 1/2 x2 x3", C4)
    b_m = parse_element("1/2 x1 x3 - 1/2 x4 x2", C4)
    assert supercommutator(a_p, b_p) == c_p.scale(2)
    assert not supercommutator(a_p, b_m)


@settings(max_examples=200, deadline=None)
@given(sig_and_elements(3, parity=True))
def test_super_antisymmetry_and_jacobi(args):
    sig, (pf, pg, _), (f, g, h) = args
    sign = -1 if pf & pg else 1
    assert supercommutator(f, g) == supercommutator(g, f).scale(-sign)
    lhs = supercommutator(f, supercommutator(g, h))
    rhs = supercommutator(supercommutator(f, g), h) + supercommutator(g, supercommutator(f, h)).scale(sign)
    assert lhs == rhs


def test_parity_decompose():
    theta = Element.monomial(C4, (1, 2, 3, 4))
    x1 = Element.generator(C4, 1)
    even, odd = parity_decompose(theta + x1)
    assert even == theta and odd == x1
    e0, o0 = parity_decompose(Element.zero(C4))
    assert not e0 and not o0
    a = parse_element("1/2 x1 x2 + 1/2 x3 x4", C4)
    assert parity_decompose(a + Element.generator(C4, 1)) == (a, Element.generator(C4, 1))
    assert (theta + x1).parity() is None and theta.parity() == 0 and x1.parity() == 1


# odd derivative


def test_odd_partial_examples():
    c7 = Signature.clifford(7)
    eps = parse_element("x1 x2 x3 + x1 x4 x5 + x1 x6 x7 + x2 x4 x6 + x2 x7 x5 + x3 x7 x4 + x3 x6 x5", c7)
    assert odd_partial(1, eps) == parse_element("x2 x3 + x4 x5 + x6 x7", c7)
    assert odd_partial(1, Element.generator(C4, 1)) == Element.scalar(C4)
    assert odd_partial(2, Element.monomial(C4, (1, 2))) == -Element.generator(C4, 1)
    with pytest.raises(IndexError):
        odd_partial(5, Element.generator(C4, 1))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.data())
def test_odd_partial_matches_counting_oracle(i, data):
    sig = Signature.grassmann(5)
    mask = data.draw(st.integers(0, sig.dim - 1))
    f = Element(sig, {mask: 1})
    idx = Blade(mask).indices
    got = odd_partial(i, f)
    if i not in idx:
        assert not got
    else:
        k = idx.index(i)
        rest = tuple(j for j in idx if j != i)
        assert got == Element.monomial(sig, rest, (-1) ** k)


# Poisson bracket


def test_poisson_generators():
    g = Signature.grassmann(4)
    x1, x2 = Element.generator(g, 1), Element.generator(g, 2)
    assert poisson_bracket(x1, x1) == Element.scalar(g, -2)
    assert not poisson_bracket(x1, x2)
    with pytest.raises(ValueError):
        poisson_bracket(Element.generator(C4, 1), Element.generator(C4, 1))


def test_poisson_classical_spin3():
    g = Signature.grassmann(4)
    a = parse_element("1/2 x1 x2 + 1/2 x3 x4", g)
    b = parse_element("1/2 x1 x3 + 1/2 x4 x2", g)
    c = parse_element("1/2 x1 x4 + 1/2 x2 x3", g)
    assert poisson_bracket(a, b) == c.scale(2)
    assert poisson_bracket(b, c) == a.scale(2)
    assert poisson_bracket(c, a) == b.scale(2)
    theta = Element.monomial(g, (1, 2, 3, 4))
    assert (a * a).scale(2) == theta


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_poisson_is_a_superderivation(data):
    g = Signature.grassmann(5)
    pf, pg, ph = (data.draw(st.integers(0, 1)) for _ in range(3))
    f = data.draw(elements(g, parity=pf))
    u = data.draw(elements(g, parity=pg))
    v = data.draw(elements(g, parity=ph))
    # {f, uv} = {f, u} v + (-1)^{|f||u|} u {f, v}
    sign = -1 if pf & pg else 1
    assert poisson_bracket(f, u * v) == poisson_bracket(f, u) * v + (u * poisson_bracket(f, v)).scale(sign)


# text grammar


def test_parse_examples():
    a = parse_element("1/2 x1 x2 + 1/2 x3 x4", C4)
    assert a.coeff((1, 2)) == Fraction(1, 2) and a.coeff((3, 4)) == Fraction(1, 2)
    assert not parse_element("0", C4)
    assert format_element(parse_element("x2 x1", C4)) == "-1 x1 x2"
    assert parse_element("x1 x1", C4) == Element.scalar(C4, -1)
    assert parse_element("- x1 + 2", C4) == 2 - Element.generator(C4, 1)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("", 0),
        ("x1 + + x2", 5),
        ("x1 x2 3", 6),
        ("x5", 0),
        ("x1 +", 4),
        ("1/0 x1", 0),
        ("x1 ? x2", 3),
    ],
)
def test_parse_errors(text, pos):
    with pytest.raises(ElementParseError) as info:
        parse_element(text, C4)
    assert info.value.position == pos


@settings(max_examples=200, deadline=None)
@given(signatures(), st.data())
def test_format_parse_roundtrip(sig, data):
    f = data.draw(elements(sig))
    assert parse_element(format_element(f), sig) == f
