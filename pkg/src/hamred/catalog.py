"""Actions and examples: Spin(3) on Cliff(4), G2 on Cliff(7), Spin(7) and
Spin(8) on Cliff(8), the split-form Lagrangian, and the classical Spin(3)
reduction.

Every entry keeps its element data as literal strings in the element text
grammar; where a generating rule exists (G2 generators from the 3-form,
Spin(7) generators from the 4-form) the rule is run as well and must agree
with the literal data.

The letters ``w, x, y, z`` of the four-dimensional case are ``x1, x2, x3, x4``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .linalg import rref_span
from .reduction import ActionSpec
from .superblade import Element, Signature, odd_partial, parse_element, supercommutator

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "Expected",
    "SPIN3_LETTERS",
    "all_entries",
    "classical_spin3_entry",
    "entry",
    "g2_action",
    "g2_data",
    "g2_rule_generators",
    "lagrangian_example",
    "load_action",
    "names",
    "spin3_action",
    "spin3_elements",
    "spin7_action",
    "spin7_alphas",
    "spin7_data",
    "spin8_action",
]

SPIN3_LETTERS = {"w": 1, "x": 2, "y": 3, "z": 4}


class CatalogError(ValueError):
    """Hardcoded data and its generating rule disagree, or input is malformed."""


@dataclass
class Expected:
    """Outcomes a catalog entry must reproduce.

    ``dims`` uses the keys of :meth:`ReductionResult.dims`. Membership maps
    are name -> element; ``annihilates`` lists elements killed on the left by
    every generator; ``identities`` are ``(name, lhs, rhs)`` equalities.
    """

    dims: dict[str, int] = field(default_factory=dict)
    tag: str | None = None
    in_ideal: dict[str, Element] = field(default_factory=dict)
    not_in_ideal: dict[str, Element] = field(default_factory=dict)
    in_invariants: dict[str, Element] = field(default_factory=dict)
    in_intersection: dict[str, Element] = field(default_factory=dict)
    annihilates: dict[str, Element] = field(default_factory=dict)
    identities: list[tuple[str, Element, Element]] = field(default_factory=list)
    closure_dim: int | None = None
    morita: bool = False
    invariants_exact: bool = False  # in_invariants spans the whole invariant subalgebra


@dataclass
class CatalogEntry:
    name: str
    spec: ActionSpec
    expected: Expected
    description: str = ""

    @property
    def outcome_tag(self) -> str:
        return self.expected.tag or "-"


# Spin(3) x Spin(3) on R^{0|4}

_SPIN3_TEXT = {
    "+": {
        "a": "1/2 x1 x2 + 1/2 x3 x4",
        "b": "1/2 x1 x3 + 1/2 x4 x2",
        "c": "1/2 x1 x4 + 1/2 x2 x3",
    },
    "-": {
        "a": "1/2 x1 x2 - 1/2 x3 x4",
        "b": "1/2 x1 x3 - 1/2 x4 x2",
        "c": "1/2 x1 x4 - 1/2 x2 x3",
    },
}

# the eight listed ideal elements for the minus action, in w,x,y,z letters
_SPIN3_MINUS_IDEAL = {
    "a-": "1/2 x1 x2 - 1/2 x3 x4",
    "b-": "1/2 x1 x3 - 1/2 x4 x2",
    "c-": "1/2 x1 x4 - 1/2 x2 x3",
    "w - xyz": "x1 - x2 x3 x4",
    "x + wyz": "x2 + x1 x3 x4",
    "y + wzx": "x3 + x1 x4 x2",
    "z + wxy": "x4 + x1 x2 x3",
    "theta + 1": "x1 x2 x3 x4 + 1",
}


def spin3_elements(sign: str, sig: Signature | None = None) -> dict[str, Element]:
    """``{"a": ..., "b": ..., "c": ...}`` for the ``sign`` action."""
    if sign not in _SPIN3_TEXT:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    sig = sig or Signature.clifford(4)
    return {k: parse_element(v, sig) for k, v in _SPIN3_TEXT[sign].items()}


def spin3_action(sign: str, sig: Signature | None = None) -> ActionSpec:
    """One of the two commuting so(3) actions; ``sig`` defaults to ``Cliff(4)``.

    Brackets are normalized as ``[a, b] = ±2c`` and cyclically.
    """
    sig = sig or Signature.clifford(4)
    own = spin3_elements(sign, sig)
    other = spin3_elements("-" if sign == "+" else "+", sig)
    s = 2 if sign == "+" else -2
    a, b, c = own["a"], own["b"], own["c"]
    expected = {(0, 1): c.scale(s), (1, 2): a.scale(s), (2, 0): b.scale(s)}
    osign = "-" if sign == "+" else "+"
    hints = tuple((f"{k}{osign}", v) for k, v in other.items())
    return ActionSpec(
        name=f"spin3{sign}",
        signature=sig,
        generators=(a, b, c),
        expected_brackets=expected,
        hints=hints,
    )


def _theta(sig: Signature) -> Element:
    return Element.monomial(sig, range(1, sig.n + 1))


def _spin3_entry(sign: str) -> CatalogEntry:
    spec = spin3_action(sign)
    sig = spec.signature
    theta = _theta(sig)
    other = spin3_elements("-" if sign == "+" else "+", sig)
    exp = Expected(
        dims={"algebra": 16, "ideal": 8, "invariants": 5, "intersection": 1,
              "quotient_even": 4, "quotient_odd": 0, "module_even": 4, "module_odd": 4},
        tag="H",
        in_invariants={"1": Element.scalar(sig), **{f"{k}{'-' if sign == '+' else '+'}": v for k, v in other.items()}, "theta": theta},
        in_intersection={"theta + 1": theta + 1} if sign == "-" else {"1 - theta": 1 - theta},
        closure_dim=3,
        morita=True,
        invariants_exact=True,
    )
    if sign == "-":
        exp.in_ideal = {k: parse_element(v, sig) for k, v in _SPIN3_MINUS_IDEAL.items()}
    else:
        # mirror image of the listed basis under the symmetry swapping the actions
        exp.in_ideal = {"theta - 1": theta - 1}
    return CatalogEntry(
        name=f"spin3{'plus' if sign == '+' else 'minus'}",
        spec=spec,
        expected=exp,
        description=f"Spin(3){sign} on Cliff(4)",
    )


# G2 on R^{0|7}

_EPSILON = "x1 x2 x3 + x1 x4 x5 + x1 x6 x7 + x2 x4 x6 + x2 x7 x5 + x3 x7 x4 + x3 x6 x5"

_G2_GENERATORS = (
    "x2 x3 - x4 x5", "x4 x5 - x6 x7", "x3 x1 - x4 x6", "x4 x6 - x7 x5", "x1 x2 - x7 x4",
    "x7 x4 - x6 x5", "x5 x1 - x6 x2", "x6 x2 - x3 x7", "x1 x4 - x2 x7", "x2 x7 - x3 x6",
    "x7 x1 - x2 x4", "x2 x4 - x5 x3", "x1 x6 - x5 x2", "x5 x2 - x4 x3",
)


def _monomials(f: Element) -> list[Element]:
    return [Element(f.signature, {b.mask: c}) for b, c in f.items()]


def g2_data(sig: Signature | None = None) -> dict[str, object]:
    """The 3-form, its derivatives ``e1..e7``, ``theta`` and the dual quartic."""
    sig = sig or Signature.clifford(7)
    eps = parse_element(_EPSILON, sig)
    theta = _theta(sig)
    return {
        "epsilon": eps,
        "e": [odd_partial(i, eps) for i in range(1, 8)],
        "theta": theta,
        "epsilon_bar": theta * eps,
    }


def g2_rule_generators(sig: Signature | None = None) -> list[Element]:
    """All differences of two monomials of some ``e_i``; they span the same space."""
    data = g2_data(sig)
    out = []
    for e in data["e"]:
        ms = _monomials(e)
        out.extend(a - b for a, b in combinations(ms, 2))
    return out


def g2_action(sig: Signature | None = None) -> ActionSpec:
    """The 14 listed generators, cross-checked against the ``e_i``."""
    sig = sig or Signature.clifford(7)
    gens = tuple(parse_element(t, sig) for t in _G2_GENERATORS)
    data = g2_data(sig)
    diffs = {}
    for i, e in enumerate(data["e"], start=1):
        for a, b in combinations(_monomials(e), 2):
            diffs[a - b] = i
            diffs[b - a] = i
    for g in gens:
        if g not in diffs:
            raise CatalogError(f"G2 generator {g} is not a difference of two monomials of any e_i")
    rule = rref_span([g.terms for g in g2_rule_generators(sig)], sig.dim)
    listed = rref_span([g.terms for g in gens], sig.dim)
    if rule != listed:
        raise CatalogError("G2 generators disagree with the span of the e_i monomial differences")
    return ActionSpec(name="g2", signature=sig, generators=gens)


def _g2_entry() -> CatalogEntry:
    spec = g2_action()
    sig = spec.signature
    d = g2_data(sig)
    eps, theta, eps_bar = d["epsilon"], d["theta"], d["epsilon_bar"]
    one = Element.scalar(sig)
    x = lambda *i: Element.monomial(sig, i)  # noqa: E731
    exp = Expected(
        dims={"algebra": 128, "ideal": 112, "invariants": 4, "intersection": 2,
              "quotient_even": 1, "quotient_odd": 1, "module_even": 8, "module_odd": 8},
        tag="Cliff(-1)",
        in_invariants={"1": one, "epsilon": eps, "epsilon_bar": eps_bar, "theta": theta},
        in_ideal={"7 theta + epsilon": theta.scale(7) + eps, "7 + epsilon_bar": eps_bar + 7},
        in_intersection={"7 theta + epsilon": theta.scale(7) + eps, "7 + epsilon_bar": eps_bar + 7},
        not_in_ideal={"1": one},
        annihilates={"theta - epsilon": theta - eps},
        identities=[
            ("theta^2 = 1", theta * theta, one),
            ("epsilon_bar = theta epsilon", eps_bar, theta * eps),
            ("e1 = x2x3 + x4x5 + x6x7", d["e"][0], parse_element("x2 x3 + x4 x5 + x6 x7", sig)),
            ("x1x4x5x6x7 (x2x3 - x4x5) = theta + x1x6x7",
             x(1, 4, 5, 6, 7) * parse_element("x2 x3 - x4 x5", sig), theta + x(1, 6, 7)),
        ],
        closure_dim=14,
        morita=True,
        invariants_exact=True,
    )
    return CatalogEntry("g2", spec, exp, "G2 on Cliff(7)")


# Spin(7) and Spin(8) on R^{0|8}

_PHI = (
    "x1 x2 x3 x4 + x1 x2 x5 x6 + x1 x2 x7 x8 + x1 x3 x5 x7 - x1 x3 x6 x8 - x1 x4 x5 x8 - x1 x4 x6 x7"
    " + x5 x6 x7 x8 + x3 x4 x7 x8 + x3 x4 x5 x6 + x2 x4 x6 x8 - x2 x4 x5 x7 - x2 x3 x6 x7 - x2 x3 x5 x8"
)

_KAPPA_13_57 = "x1 x2 x3 x4 - x1 x3 x6 x8 + x5 x6 x7 x8 - x2 x4 x5 x7"
_LAMBDA_13_57 = (
    "x1 x2 x5 x6 + x1 x2 x7 x8 - x1 x4 x5 x8 - x1 x4 x6 x7"
    " + x3 x4 x7 x8 + x3 x4 x5 x6 - x2 x3 x6 x7 - x2 x3 x5 x8"
)


def spin7_data(sig: Signature | None = None) -> dict[str, Element]:
    sig = sig or Signature.clifford(8)
    return {"phi": parse_element(_PHI, sig), "theta": _theta(sig)}


def spin7_alphas(sig: Signature | None = None) -> list[Element]:
    """Every ``x_ij ± x_kl`` (disjoint pairs) with ``-α²/2 - 1`` a signed term of phi."""
    sig = sig or Signature.clifford(8)
    phi = spin7_data(sig)["phi"]
    terms = set(_monomials(phi))
    pairs = list(combinations(range(1, 9), 2))
    out = []
    for p, q in combinations(pairs, 2):
        if set(p) & set(q):
            continue
        xp = Element.monomial(sig, p)
        xq = Element.monomial(sig, q)
        for s in (1, -1):
            alpha = xp + xq.scale(s)
            beta = (alpha * alpha).scale(Fraction(-1, 2)) - 1
            if beta in terms:
                out.append(alpha)
    return out


def spin7_action(sig: Signature | None = None) -> ActionSpec:
    """Generators: canonical basis of the span of the 42 matching α's (dim 21)."""
    sig = sig or Signature.clifford(8)
    alphas = spin7_alphas(sig)
    span = rref_span([a.terms for a in alphas], sig.dim)
    if span.dim != 21:
        raise CatalogError(f"Spin(7) generator span has dimension {span.dim}, expected 21")
    gens = tuple(Element(sig, {i: c for i, c in enumerate(v) if c}) for v in span.basis)
    return ActionSpec(name="spin7", signature=sig, generators=gens)


def _spin7_entry() -> CatalogEntry:
    spec = spin7_action()
    sig = spec.signature
    d = spin7_data(sig)
    phi, theta = d["phi"], d["theta"]
    one = Element.scalar(sig)
    alpha = parse_element("x1 x3 - x5 x7", sig)
    kappa = parse_element(_KAPPA_13_57, sig)
    lam = parse_element(_LAMBDA_13_57, sig)
    x1357 = Element.monomial(sig, (1, 3, 5, 7))
    zero = Element.zero(sig)
    exp = Expected(
        dims={"algebra": 256, "ideal": 240, "invariants": 3, "intersection": 2,
              "quotient_even": 1, "quotient_odd": 0, "module_even": 8, "module_odd": 8},
        tag="R",
        in_invariants={"1": one, "phi": phi, "theta": theta},
        in_ideal={"phi + 14": phi + 14, "theta - 1": theta - 1},
        in_intersection={"phi + 14": phi + 14, "theta - 1": theta - 1},
        not_in_ideal={"1": one},
        # alpha x_ijkl = +alpha, so the annihilated element is phi - 1 - theta
        annihilates={"phi - 1 - theta": phi - 1 - theta},
        identities=[
            ("theta^2 = 1", theta * theta, one),
            ("theta phi = phi", theta * phi, phi),
            ("phi theta = phi", phi * theta, phi),
            ("phi^2 = 14 theta + 14 - 12 phi", phi * phi, theta.scale(14) + 14 - phi.scale(12)),
            ("phi = x1357 (1 + theta) + kappa + lambda", phi, x1357 * (1 + theta) + kappa + lam),
            ("(x13 - x57) kappa = 0", alpha * kappa, zero),
            ("(x13 - x57) lambda = 0", alpha * lam, zero),
            ("[x13 - x57, x1357 (1 + theta)] = 0", supercommutator(alpha, x1357 * (1 + theta)), zero),
            ("[x13 - x57, kappa] = 0", supercommutator(alpha, kappa), zero),
            ("(x13 - x57) x1357 (1 + theta) = (x13 - x57)(1 + theta)",
             alpha * x1357 * (1 + theta), alpha * (1 + theta)),
        ],
        closure_dim=21,
        morita=True,
        invariants_exact=True,
    )
    return CatalogEntry("spin7", spec, exp, "Spin(7) on Cliff(8)")


def spin8_action(sig: Signature | None = None) -> ActionSpec:
    sig = sig or Signature.clifford(8)
    gens = tuple(Element.monomial(sig, p) for p in combinations(range(1, 9), 2))
    return ActionSpec(name="spin8", signature=sig, generators=gens)


def _spin8_entry() -> CatalogEntry:
    spec = spin8_action()
    sig = spec.signature
    x12 = Element.monomial(sig, (1, 2))
    exp = Expected(
        dims={"algebra": 256, "ideal": 256, "quotient_even": 0, "quotient_odd": 0,
              "module_even": 0, "module_odd": 0},
        tag="zero",
        in_ideal={"1": Element.scalar(sig)},
        identities=[("x12 (-x12) = 1", x12 * (-x12), Element.scalar(sig))],
        closure_dim=28,
    )
    return CatalogEntry("spin8", spec, exp, "Spin(8) on Cliff(8)")


# Split-form R^{0|2} with the Lagrangian spanned by (1, 1)


def lagrangian_example() -> ActionSpec:
    sig = Signature((-1, 1))
    return ActionSpec(
        name="lagrangian",
        signature=sig,
        generators=(parse_element("x1 - x2", sig),),
        allow_odd=True,
    )


def _lagrangian_entry() -> CatalogEntry:
    spec = lagrangian_example()
    sig = spec.signature
    g = spec.generators[0]
    e = parse_element("1/2 - 1/2 x1 x2", sig)
    exp = Expected(
        dims={"algebra": 4, "ideal": 2, "module_even": 1, "module_odd": 1},
        tag="Mat(1|1)",
        identities=[
            ("(x1 - x2)^2 = 0", g * g, Element.zero(sig)),
            ("e = (1 - x1x2)/2 is idempotent", e * e, e),
        ],
    )
    return CatalogEntry("lagrangian", spec, exp, "split-form R^{0|2}, Lagrangian (1,1)")


# Classical limit


def classical_spin3_entry() -> CatalogEntry:
    sig = Signature.grassmann(4)
    spec = spin3_action("-", sig)
    theta = _theta(sig)
    plus = spin3_elements("+", sig)
    minus = spin3_elements("-", sig)
    exp = Expected(
        dims={"algebra": 16, "quotient_even": 4, "quotient_odd": 0},
        tag=None,
        in_invariants={"1": Element.scalar(sig), **{f"{k}+": v for k, v in plus.items()}, "theta": theta},
        identities=[
            *[(f"2 {k}+^2 = wxyz", (v * v).scale(2), theta) for k, v in plus.items()],
            *[(f"-2 {k}-^2 = wxyz", (v * v).scale(-2), theta) for k, v in minus.items()],
        ],
        closure_dim=3,
    )
    return CatalogEntry("classical-spin3", spec, exp, "Spin(3)- on the exterior algebra of R^4")


_BUILDERS = {
    "spin3minus": lambda: _spin3_entry("-"),
    "spin3plus": lambda: _spin3_entry("+"),
    "g2": _g2_entry,
    "spin7": _spin7_entry,
    "spin8": _spin8_entry,
    "lagrangian": _lagrangian_entry,
    "classical-spin3": classical_spin3_entry,
}


def entry(name: str) -> CatalogEntry:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(_BUILDERS)}") from None


def all_entries() -> list[CatalogEntry]:
    return [b() for b in _BUILDERS.values()]


def names() -> list[str]:
    return list(_BUILDERS)


def load_action(source: str | Path | dict) -> ActionSpec:
    """Read ``{name, n, signature, generators}`` (a path, JSON text or dict)."""
    if isinstance(source, dict):
        data = source
    else:
        text = Path(source).read_text() if Path(str(source)).exists() else str(source)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CatalogError("action JSON must be an object")
    try:
        name = str(data.get("name", "custom"))
        n = int(data["n"])
        raw_sig = data.get("signature", [-1] * n)
        gens_text = data.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed action: {exc}") from exc
    if not isinstance(raw_sig, list) or len(raw_sig) != n:
        raise CatalogError(f"signature must be a list of length n={n}")
    try:
        sig = Signature(tuple(raw_sig))
    except (ValueError, TypeError) as exc:
        raise CatalogError(str(exc)) from exc
    if not isinstance(gens_text, list) or not all(isinstance(t, str) for t in gens_text):
        raise CatalogError("generators must be a list of element strings")
    try:
        gens = tuple(parse_element(t, sig) for t in gens_text)
        return ActionSpec(name=name, signature=sig, generators=gens, allow_odd=bool(data.get("allow_odd", False)))
    except ValueError as exc:
        raise CatalogError(str(exc)) from exc
