import random

import pytest

from hamred.catalog import entry
from hamred.fuzz import (
    check_associativity,
    check_centrality,
    check_ideal_absorption,
    check_invariant_closure,
    check_representative_independence,
    check_super_antisymmetry,
    check_super_jacobi,
    check_two_sidedness,
    default_seed,
    random_element,
    random_signature,
)
from hamred.reduction import reduce


def test_seed_from_env(monkeypatch):
    monkeypatch.delenv("HAMRED_SEED", raising=False)
    assert default_seed() == 0
    monkeypatch.setenv("HAMRED_SEED", "17")
    assert default_seed() == 17
    monkeypatch.setenv("HAMRED_SEED", "x")
    with pytest.raises(ValueError):
        default_seed()


def test_random_element_parity():
    rng = random.Random(3)
    for _ in range(200):
        sig = random_signature(rng)
        p = rng.randint(0, 1)
        f = random_element(rng, sig, parity=p)
        assert not f or f.parity() == p


def test_same_seed_same_samples():
    a = [random_element(random.Random(5), random_signature(random.Random(5))) for _ in range(3)]
    b = [random_element(random.Random(5), random_signature(random.Random(5))) for _ in range(3)]
    assert a == b


def test_algebra_laws_small():
    rng = random.Random(1)
    for check in (check_associativity, check_super_antisymmetry, check_super_jacobi):
        res = check(rng, 200)
        assert res.passed and res.trials == 200


def test_action_laws_small():
    rng = random.Random(2)
    res = reduce(entry("g2").spec)
    for check in (check_ideal_absorption, check_invariant_closure, check_centrality,
                  check_two_sidedness, check_representative_independence):
        out = check(res, rng, 20)
        assert out.passed, out.failures


def test_failures_are_reported():
    # with the invariants standing in for the ideal, absorption must fail
    res = reduce(entry("spin3minus").spec)
    broken = type(res)(**{**res.__dict__, "ideal": res.invariants})
    out = check_ideal_absorption(broken, random.Random(0), 50)
    assert not out.passed and out.failures
