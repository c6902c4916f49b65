from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from hamred.algebra import clifford_algebra
from hamred.catalog import entry, lagrangian_example, spin3_action, spin3_elements
from hamred.linalg import rref_span
from hamred.reduction import (
    ActionSpec,
    classical_reduce,
    commutant,
    cyclic_module,
    endomorphism_algebra,
    invariant_subalgebra,
    left_ideal,
    lie_closure,
    morita_check,
    reduce,
    regular_module,
    verify_bracket_table,
)
from hamred.superblade import Blade, Element, Signature, parse_element

from oracles import dense_rank, dict_product, to_words

C4 = Signature.clifford(4)


@pytest.fixture(scope="module")
def spin3minus():
    return reduce(spin3_action("-"))


def _words_vector(words, n):
    v = [Fraction(0)] * (1 << n)
    for w, c in words.items():
        v[Blade.from_indices(w).mask] = c
    return v


def _oracle_ideal_dim(spec):
    n, sig = spec.n, spec.signature.entries
    rows = []
    for g in spec.generators:
        gw = to_words(g)
        for mask in range(1 << n):
            rows.append(_words_vector(dict_product({Blade(mask).indices: 1}, gw, sig), n))
    return dense_rank(rows)


def _oracle_invariant_dim(spec):
    n, sig = spec.n, spec.signature.entries
    rows = []
    for g in spec.generators:
        gw = to_words(g)
        cols = []
        for mask in range(1 << n):
            b = {Blade(mask).indices: 1}
            gb = dict_product(gw, b, sig)
            bg = dict_product(b, gw, sig)
            cols.append([x - y for x, y in zip(_words_vector(gb, n), _words_vector(bg, n))])
        rows.extend(zip(*cols))
    return (1 << n) - dense_rank(rows)


def test_ideal_and_invariant_dims_match_oracle():
    spec = spin3_action("-")
    assert left_ideal(spec).dim == _oracle_ideal_dim(spec) == 8
    assert invariant_subalgebra(spec).dim == _oracle_invariant_dim(spec) == 5


def test_ideal_edge_cases():
    assert left_ideal(ActionSpec("triv", C4, ())).dim == 0
    assert left_ideal(entry("spin8").spec).dim == 256


def test_spin3_minus_reduction(spin3minus):
    res = spin3minus
    assert res.dims() == {
        "algebra": 16, "ideal": 8, "invariants": 5, "intersection": 1,
        "quotient_even": 4, "quotient_odd": 0, "module_even": 4, "module_odd": 4,
    }
    theta = Element.monomial(C4, (1, 2, 3, 4))
    assert res.in_intersection(theta + 1)
    a = spin3_elements("+")["a"]
    one = res.project(Element.scalar(C4))
    assert list(res.quotient.mul(res.project(a), res.project(a))) == list(-one)
    q = res.quotient
    assert q.check_unit() and q.check_associative() and q.check_parity()


def test_project_and_lift(spin3minus):
    res = spin3minus
    b = spin3_elements("+")["b"]
    coords = res.project(b)
    assert res.in_intersection(res.lift(coords) - b)
    with pytest.raises(ValueError):
        res.project(Element.generator(C4, 1))


def test_representatives_do_not_matter(spin3minus):
    res = spin3minus
    theta = Element.monomial(C4, (1, 2, 3, 4))
    plus = spin3_elements("+")
    # theta is -1 modulo the intersection; shift b+ by an intersection element
    reps = [theta, plus["a"], plus["b"] - (theta + 1).scale(3), plus["c"]]
    other = reduce(res.spec, reps=reps)
    assert other.quotient.dims == (4, 0)
    assert other.quotient.check_associative()
    assert list(other.project(Element.scalar(C4))) == [-1, 0, 0, 0]
    # a+ b+ = c+ in both bases (the class of 1 is minus the class of theta)
    for q in (res, other):
        ab = q.quotient.mul(q.project(plus["a"]), q.project(plus["b"]))
        assert q.in_intersection(q.lift(ab) - plus["c"])


def test_reduce_rejects_classical_and_odd():
    with pytest.raises(ValueError):
        reduce(spin3_action("-", Signature.grassmann(4)))
    with pytest.raises(ValueError):
        reduce(lagrangian_example())
    with pytest.raises(ValueError):
        invariant_subalgebra(lagrangian_example())
    with pytest.raises(ValueError):
        ActionSpec("odd", C4, (Element.generator(C4, 1),))
    with pytest.raises(ValueError):
        ActionSpec("mixed", C4, (Element.generator(C4, 1) + 1,), allow_odd=True)
    with pytest.raises(ValueError):
        ActionSpec("ctx", C4, (Element.generator(Signature.clifford(3), 1) * Element.generator(Signature.clifford(3), 2),))


def test_trivial_action_gives_whole_algebra():
    c3 = Signature.clifford(3)
    res = reduce(ActionSpec("triv", c3, ()))
    assert res.quotient.dim == 8 and res.quotient.dims == (4, 4)


# brackets


def test_bracket_table_spin3():
    for sign in "+-":
        rep = verify_bracket_table(spin3_action(sign))
        assert rep.table_ok and rep.closed and rep.closure_dim == 3
    plus, minus = spin3_elements("+"), spin3_elements("-")
    bad = ActionSpec("bad", C4, tuple(plus.values()), expected_brackets={(0, 1): minus["c"]})
    assert not verify_bracket_table(bad).table_ok


def test_lie_closure_grows():
    x12 = Element.monomial(C4, (1, 2))
    x23 = Element.monomial(C4, (2, 3))
    assert len(lie_closure([x12, x23])) == 3
    assert lie_closure([]) == []


# modules and endomorphisms


def test_cyclic_module_spin3(spin3minus):
    M = cyclic_module(spin3minus.spec, spin3minus)
    assert M.dim == (4, 4)
    assert M.check_relations()
    for mask in (0, 3, 5, 15, 9):
        f = Element(C4, {mask: 1})
        assert np.array_equal(M.blade_actions()[mask], M.left_action(f))


def test_zero_module_raises():
    with pytest.raises(ValueError):
        cyclic_module(entry("spin8").spec)


def test_regular_module_commutant_is_whole_algebra():
    for sig in (Signature.clifford(2), Signature((-1, 1)), Signature((1, 0, -1))):
        M = regular_module(sig)
        assert endomorphism_algebra(M).dim == sig.dim


def test_spin3_end_is_quaternion_dim(spin3minus):
    M = cyclic_module(spin3minus.spec, spin3minus)
    end = endomorphism_algebra(M, "A")
    assert end.dims == (4, 0)
    assert end.check_associative() and end.check_unit()


def test_lagrangian_module():
    spec = lagrangian_example()
    M = cyclic_module(spec)
    assert M.dim == (1, 1) and M.check_relations()
    for signed in (False, True):
        assert endomorphism_algebra(M, signed=signed).dims == (1, 0)


def test_commutant_sign_conventions():
    # odd operator t with t^2 = 1 on (1|1): plain commutant is {1, t}, signed is {1, J t}
    t = np.array([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], dtype=object)
    plain = commutant([t], [1], [0, 1])
    signed = commutant([t], [1], [0, 1], signed=True)
    assert [p for p, _ in plain] == [0, 1] and [p for p, _ in signed] == [0, 1]
    _, f = plain[1]
    assert np.array_equal(f @ t, t @ f)
    _, g = signed[1]
    assert np.array_equal(g @ t, -(t @ g))


def test_endomorphism_over_bad_side(spin3minus):
    with pytest.raises(ValueError):
        endomorphism_algebra(cyclic_module(spin3minus.spec, spin3minus), over="C")


def test_morita_spin3(spin3minus):
    m = morita_check(spin3minus.spec, spin3minus)
    assert m.passed
    assert (m.dim_module, m.dim_A, m.dim_B) == (8, 16, 4)
    assert m.end_A_dim == 4 and m.end_B_dim == 16


def test_morita_zero_quotient_raises():
    with pytest.raises(ValueError):
        morita_check(entry("spin8").spec)


# classical limit


def test_classical_spin3():
    cres = classical_reduce(spin3_action("-", Signature.grassmann(4)))
    B = cres.quotient
    assert B.dims == (4, 0)
    g = Signature.grassmann(4)
    cls = {k: cres.reduction.project(v) for k, v in spin3_elements("+", g).items()}
    zero = [0] * 4
    for p, q in combinations("abc", 2):
        assert list(B.mul(cls[p], cls[q])) == zero
    for p in "abc":
        assert list(B.mul(cls[p], cls[p])) == zero
    assert list(cres.bracket(cls["a"], cls["b"])) == list(2 * cls["c"])
    assert list(cres.bracket(cls["b"], cls["c"])) == list(2 * cls["a"])
    assert list(cres.bracket(cls["c"], cls["a"])) == list(2 * cls["b"])


def test_classical_trivial_and_errors():
    g1 = Signature.grassmann(1)
    assert classical_reduce(ActionSpec("triv", g1, ())).quotient.dim == 2
    with pytest.raises(ValueError):
        classical_reduce(spin3_action("-"))


def test_invariants_listed_elements(spin3minus):
    plus = spin3_elements("+")
    listed = [Element.scalar(C4), *plus.values(), Element.monomial(C4, (1, 2, 3, 4))]
    assert rref_span([f.terms for f in listed], 16) == spin3minus.invariants


def test_clifford_algebra_structure():
    A = clifford_algebra(Signature((-1, 1)))
    assert A.dim == 4 and A.check_associative() and A.check_unit() and A.check_parity()
    x1 = A.basis_vector(1)
    assert list(A.mul(x1, x1)) == [-1, 0, 0, 0]
    assert parse_element("x1 x2", Signature((-1, 1))) * parse_element("x1 x2", Signature((-1, 1))) == Element.scalar(
        Signature((-1, 1)), 1
    )
