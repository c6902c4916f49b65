"""Randomized checks of the algebraic laws the engine relies on.

Each ``check_*`` function draws its samples from a ``random.Random`` and
returns a :class:`FuzzResult`; nothing here raises on a failed law.
``HAMRED_SEED`` picks the default seed.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .reduction import ReductionResult, quotient_algebra
from .superblade import Element, Signature, parity_decompose, supercommutator

__all__ = [
    "FuzzResult",
    "check_associativity",
    "check_centrality",
    "check_ideal_absorption",
    "check_invariant_closure",
    "check_representative_independence",
    "check_super_antisymmetry",
    "check_super_jacobi",
    "check_two_sidedness",
    "default_seed",
    "random_element",
    "random_signature",
]

_COEFFS = [Fraction(p, q) for p in range(-3, 4) if p for q in (1, 2, 3)]


def default_seed() -> int:
    raw = os.environ.get("HAMRED_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"HAMRED_SEED must be an integer, got {raw!r}") from None


@dataclass
class FuzzResult:
    name: str
    trials: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.trials > 0 and not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "trials": self.trials, "failures": self.failures[:5], "pass": self.passed}


def random_signature(rng: random.Random, n_max: int = 8) -> Signature:
    n = rng.randint(1, n_max)
    return Signature(tuple(rng.choice((-1, 0, 1)) for _ in range(n)))


def random_element(rng: random.Random, sig: Signature, max_terms: int = 4, parity: int | None = None) -> Element:
    """A few random blades with small rational coefficients.

    With ``parity`` set every blade has that parity (n must allow it).
    """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mask = rng.randrange(sig.dim)
        if parity is not None and mask.bit_count() % 2 != parity:
            mask ^= 1  # flip x1 to fix the parity
        terms[mask] = rng.choice(_COEFFS)
    return Element(sig, terms)


def check_associativity(rng: random.Random, trials: int, n_max: int = 8) -> FuzzResult:
    res = FuzzResult("associativity")
    for _ in range(trials):
        sig = random_signature(rng, n_max)
        f, g, h = (random_element(rng, sig) for _ in range(3))
        res.trials += 1
        if (f * g) * h != f * (g * h):
            res.failures.append(f"sig={sig}: ({f})({g})({h})")
    return res


def _homogeneous_triple(rng, n_max):
    sig = random_signature(rng, n_max)
    ps = [rng.randint(0, 1) for _ in range(3)]
    return sig, ps, [random_element(rng, sig, 3, p) for p in ps]


def check_super_antisymmetry(rng: random.Random, trials: int, n_max: int = 8) -> FuzzResult:
    res = FuzzResult("super-antisymmetry")
    for _ in range(trials):
        sig, (pf, pg, _), (f, g, _) = _homogeneous_triple(rng, n_max)
        res.trials += 1
        sign = -1 if pf & pg else 1
        if supercommutator(f, g) != supercommutator(g, f).scale(-sign):
            res.failures.append(f"sig={sig}: [{f}, {g}]")
    return res


def check_super_jacobi(rng: random.Random, trials: int, n_max: int = 8) -> FuzzResult:
    res = FuzzResult("super-jacobi")
    for _ in range(trials):
        sig, (pf, pg, _), (f, g, h) = _homogeneous_triple(rng, n_max)
        res.trials += 1
        sign = -1 if pf & pg else 1
        lhs = supercommutator(f, supercommutator(g, h))
        rhs = supercommutator(supercommutator(f, g), h) + supercommutator(g, supercommutator(f, h)).scale(sign)
        if lhs != rhs:
            res.failures.append(f"sig={sig}: {f} | {g} | {h}")
    return res


def _random_member(rng: random.Random, sig: Signature, basis, k: int = 3) -> Element:
    if not basis:
        return Element.zero(sig)
    out: dict[int, Fraction] = {}
    for _ in range(k):
        row = rng.choice(basis)
        c = rng.choice(_COEFFS)
        for i, a in enumerate(row):
            if a:
                out[i] = out.get(i, 0) + c * a
    return Element(sig, out)


def check_ideal_absorption(result: ReductionResult, rng: random.Random, trials: int) -> FuzzResult:
    """``b * v`` stays in the left ideal for random blades ``b`` and members ``v``."""
    res = FuzzResult(f"ideal-absorption[{result.spec.name}]")
    sig = result.signature
    basis = result.ideal.basis
    for _ in range(trials):
        b = Element(sig, {rng.randrange(sig.dim): 1})
        v = _random_member(rng, sig, basis)
        res.trials += 1
        if not result.ideal.contains((b * v).terms):
            res.failures.append(f"{b} * {v}")
    return res


def check_invariant_closure(result: ReductionResult, rng: random.Random, trials: int) -> FuzzResult:
    res = FuzzResult(f"invariant-closure[{result.spec.name}]")
    sig = result.signature
    basis = result.invariants.basis
    for _ in range(trials):
        f = _random_member(rng, sig, basis, 2)
        g = _random_member(rng, sig, basis, 2)
        res.trials += 1
        if not result.invariants.contains((f * g).terms):
            res.failures.append(f"{f} * {g}")
    return res


def check_centrality(result: ReductionResult, rng: random.Random, trials: int) -> FuzzResult:
    res = FuzzResult(f"centrality[{result.spec.name}]")
    sig = result.signature
    gens = result.spec.generators
    for _ in range(trials):
        f = _random_member(rng, sig, result.invariants.basis, 2)
        g = rng.choice(gens)
        res.trials += 1
        if supercommutator(g, f):
            res.failures.append(f"[{g}, {f}]")
    return res


def check_two_sidedness(result: ReductionResult, rng: random.Random, trials: int) -> FuzzResult:
    res = FuzzResult(f"two-sidedness[{result.spec.name}]")
    sig = result.signature
    for _ in range(trials):
        f = _random_member(rng, sig, result.invariants.basis, 2)
        v = _random_member(rng, sig, result.intersection.basis, 2)
        res.trials += 1
        if not (result.intersection.contains((f * v).terms) and result.intersection.contains((v * f).terms)):
            res.failures.append(f"{f} / {v}")
    return res


def check_representative_independence(result: ReductionResult, rng: random.Random, trials: int) -> FuzzResult:
    """Shift each quotient representative by a random intersection element and
    recompute the structure constants; they must not change."""
    res = FuzzResult(f"representative-independence[{result.spec.name}]")
    sig = result.signature
    base = result.quotient
    for _ in range(trials):
        # intersection is graded, so the parity part of a member stays inside it
        shifted = [
            r + parity_decompose(_random_member(rng, sig, result.intersection.basis, 2))[r.parity()]
            for r in result.reps
        ]
        q = quotient_algebra(sig, result.invariants, result.intersection, shifted)
        res.trials += 1
        same = np.array_equal(q.structure_constants, base.structure_constants) and tuple(q.unit) == tuple(base.unit)
        if not same:
            res.failures.append("structure constants changed: " + ", ".join(str(s) for s in shifted))
    return res
