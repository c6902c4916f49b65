from fractions import Fraction

import pytest

from hamred.algebra import QuotientAlgebra, clifford_algebra, fraction_array
from hamred.catalog import entry, spin3_elements
from hamred.identify import AlgebraTag, IsoWitness, identify, verify_relations
from hamred.reduction import reduce
from hamred.superblade import Signature


def _algebra(parities, table):
    """Structure constants from ``{(i, j): {k: c}}``; basis element 0 is the unit."""
    d = len(parities)
    sc = fraction_array(None, (d, d, d))
    for (i, j), out in table.items():
        for k, c in out.items():
            sc[i, j, k] = Fraction(c)
    unit = tuple(Fraction(int(i == 0)) for i in range(d))
    return QuotientAlgebra(tuple(parities), unit, sc)


def _unital(parities, rest):
    d = len(parities)
    table = {(0, i): {i: 1} for i in range(d)}
    table.update({(i, 0): {i: 1} for i in range(d)})
    table.update(rest)
    return _algebra(parities, table)


QUATERNIONS = _unital(
    (0, 0, 0, 0),
    {
        (1, 1): {0: -1}, (2, 2): {0: -1}, (3, 3): {0: -1},
        (1, 2): {3: 1}, (2, 1): {3: -1},
        (2, 3): {1: 1}, (3, 2): {1: -1},
        (3, 1): {2: 1}, (1, 3): {2: -1},
    },
)


@pytest.fixture(scope="module")
def spin3minus():
    return reduce(entry("spin3minus").spec)


def test_quaternions_from_table():
    tag, w = identify(QUATERNIONS)
    assert tag is AlgebraTag.QUATERNIONS and w.holds
    assert verify_relations(QUATERNIONS, w)


def test_small_cases():
    R = _unital((0,), {})
    assert identify(R)[0] is AlgebraTag.REALS
    C = _unital((0, 0), {(1, 1): {0: -1}})
    assert identify(C)[0] is AlgebraTag.COMPLEXES
    split = _unital((0, 0), {(1, 1): {0: 1}})
    assert identify(split)[0] is AlgebraTag.UNKNOWN
    cm = _unital((0, 1), {(1, 1): {0: 1}})
    assert identify(cm)[0] is AlgebraTag.CLIFF_MINUS1
    cp = _unital((0, 1), {(1, 1): {0: -1}})
    assert identify(cp)[0] is AlgebraTag.CLIFF_PLUS1
    zero = QuotientAlgebra((), (), fraction_array(None, (0, 0, 0)))
    assert identify(zero)[0] is AlgebraTag.ZERO


def test_rescaled_generator_is_normalized():
    # t^2 = 4 still gives Cliff(-1) with t/2 as the witness
    cm = _unital((0, 1), {(1, 1): {0: 4}})
    tag, w = identify(cm)
    assert tag is AlgebraTag.CLIFF_MINUS1
    assert w.images["t"] == (0, Fraction(1, 2))
    # t^2 = 2 has no rational normalization
    assert identify(_unital((0, 1), {(1, 1): {0: 2}}))[0] is AlgebraTag.UNKNOWN


def test_clifford_algebras():
    assert identify(clifford_algebra(Signature((-1,))))[0] is AlgebraTag.CLIFF_PLUS1
    assert identify(clifford_algebra(Signature((1,))))[0] is AlgebraTag.CLIFF_MINUS1
    assert identify(clifford_algebra(Signature((-1, 1))))[0] is AlgebraTag.MAT1_1
    # Cliff(2) is (2|2) with even part C: no nontrivial even idempotent
    assert identify(clifford_algebra(Signature((-1, -1))))[0] is AlgebraTag.UNKNOWN
    # Grassmann(1) is (1|1) but its odd generator squares to zero
    assert identify(clifford_algebra(Signature((0,))))[0] is AlgebraTag.UNKNOWN


def test_theorem_quotients(spin3minus):
    plus = spin3_elements("+")
    hints = [spin3minus.project(plus[k]) for k in "abc"]
    tag, w = identify(spin3minus.quotient, hints)
    assert tag is AlgebraTag.QUATERNIONS
    assert [w.images[k] for k in "ijk"] == [tuple(h) for h in hints]
    assert not w.notes
    assert identify(reduce(entry("g2").spec).quotient)[0] is AlgebraTag.CLIFF_MINUS1


def test_plus_action_reorients(spin3minus):
    res = reduce(entry("spin3plus").spec)
    minus = spin3_elements("-")
    hints = [res.project(minus[k]) for k in "abc"]
    tag, w = identify(res.quotient, hints)
    assert tag is AlgebraTag.QUATERNIONS and w.holds
    assert w.notes and "re-oriented" in w.notes[0]


def test_verify_relations_rejects_corruption(spin3minus):
    tag, w = identify(QUATERNIONS)
    bad = IsoWitness(tag, dict(w.images, i=(1, 0, 0, 0)))
    assert not verify_relations(QUATERNIONS, bad)
    cm = _unital((0, 1), {(1, 1): {0: 1}})
    assert not verify_relations(cm, IsoWitness(AlgebraTag.CLIFF_MINUS1, {"t": (1, 0)}))
    with pytest.raises(ValueError):
        verify_relations(QUATERNIONS, IsoWitness(AlgebraTag.QUATERNIONS, {"i": (0, 1, 0, 0)}))
    with pytest.raises(ValueError):
        verify_relations(QUATERNIONS, IsoWitness(AlgebraTag.REALS, {"1": (1, 0)}))


def test_even_algebras_never_get_odd_tags():
    for B in (QUATERNIONS, _unital((0,), {}), _unital((0, 0), {(1, 1): {0: -1}})):
        assert identify(B)[0] not in (AlgebraTag.CLIFF_MINUS1, AlgebraTag.CLIFF_PLUS1, AlgebraTag.MAT1_1)


def test_json_roundtrip():
    data = QUATERNIONS.to_json()
    B = QuotientAlgebra.from_json(data)
    assert identify(B)[0] is AlgebraTag.QUATERNIONS
    for broken in ({}, {"dim": 1, "parities": ["even"], "unit": ["1/1"], "structure_constants": [[["x"]]]},
                   {"dim": 2, "parities": ["even"], "unit": ["1", "0"], "structure_constants": []}, [1]):
        with pytest.raises(ValueError):
            QuotientAlgebra.from_json(broken)
