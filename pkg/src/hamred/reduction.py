"""Quantum and classical Hamiltonian reduction of Clifford/Grassmann algebras.

For a Lie algebra acting on ``A`` through a comoment map (its image is the
list of generators of an :class:`ActionSpec`), the reduction is::

    A // G  =  A^G / (A^G ∩ I),     I = left ideal generated by the image

with ``A^G`` computed as the common kernel of the inner derivations. The
quotient module ``M = A / I`` is a left ``A``-module and a right
``A // G``-module; :func:`morita_check` checks that it is a Morita
equivalence via dimension counts and double centralizers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from .algebra import QuotientAlgebra, fraction_array
from .linalg import (
    Echelon,
    SpanSolver,
    Subspace,
    _kernel_of_echelon,
    _sparse_int,
    complement_reps,
    intersect,
    rref_span,
)
from .superblade import EVEN, ODD, Element, Signature, format_element, poisson_bracket, supercommutator

__all__ = [
    "ActionSpec",
    "BracketReport",
    "ClassicalResult",
    "ModuleRep",
    "MoritaReport",
    "ReductionError",
    "ReductionResult",
    "classical_reduce",
    "commutant",
    "cyclic_module",
    "endomorphism_algebra",
    "invariant_subalgebra",
    "left_ideal",
    "lie_closure",
    "morita_check",
    "quotient_algebra",
    "reduce",
    "regular_module",
    "verify_bracket_table",
]

log = logging.getLogger(__name__)


class ReductionError(RuntimeError):
    """An internal consistency check of the reduction pipeline failed."""


@dataclass(frozen=True)
class ActionSpec:
    """A Lie algebra action on ``Cliff(signature)`` through its comoment map.

    ``generators`` are the images of a basis of the Lie algebra.
    ``expected_brackets`` maps generator index pairs to the expected
    supercommutator. ``hints`` are named candidate elements used when
    identifying the reduced algebra.
    """

    name: str
    signature: Signature
    generators: tuple[Element, ...]
    expected_brackets: Mapping[tuple[int, int], Element] | None = None
    hints: tuple[tuple[str, Element], ...] = ()
    allow_odd: bool = False

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "hints", tuple(self.hints))
        for g in self.generators:
            if g.signature != self.signature:
                raise ValueError(f"{self.name}: generator {g} lives in {g.signature}, expected {self.signature}")
            p = g.parity()
            if p is None:
                raise ValueError(f"{self.name}: generator {g} is not parity-homogeneous")
            if p == ODD and not self.allow_odd:
                raise ValueError(f"{self.name}: odd generator {g} (set allow_odd for module-only use)")
        for _, h in self.hints:
            if h.signature != self.signature:
                raise ValueError(f"{self.name}: hint {h} has the wrong signature")

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def is_classical(self) -> bool:
        return not any(self.signature.entries)


def _blade(sig: Signature, mask: int) -> Element:
    return Element._raw(sig, {mask: Fraction(1)})


def _vec(f: Element) -> dict[int, Fraction]:
    return f.terms


def _element(sig: Signature, v) -> Element:
    items = v.items() if isinstance(v, Mapping) else enumerate(v)
    return Element(sig, {i: c for i, c in items if c})


def left_ideal(spec: ActionSpec) -> Subspace:
    """Span of ``b * g`` over all blades ``b`` and generators ``g``."""
    sig = spec.signature
    d = sig.dim
    ech = Echelon(d)
    for g in spec.generators:
        for mask in range(d):
            if len(ech) == d:
                break
            ech.add(_sparse_int(_vec(_blade(sig, mask) * g)))
    return Subspace(d, ech.basis())


def _derivation(spec: ActionSpec) -> Callable[[Element, Element], Element]:
    # quadratic generators act by the supercommutator quantum mechanically
    # and by the Poisson bracket on the exterior algebra
    return poisson_bracket if spec.is_classical else supercommutator


def invariant_subalgebra(spec: ActionSpec) -> Subspace:
    """Common kernel of ``f -> [g, f]`` over all generators ``g``."""
    if any(g.parity() == ODD for g in spec.generators):
        raise ValueError(f"{spec.name}: invariants are only defined for even generators")
    sig = spec.signature
    d = sig.dim
    bracket = _derivation(spec)
    ech = Echelon(d)
    for g in spec.generators:
        # rows of the matrix of ad_g: entry (r, j) = coeff of blade r in [g, blade j]
        rows: dict[int, dict[int, Fraction]] = {}
        for j in range(d):
            for r, c in bracket(g, _blade(sig, j)).terms.items():
                rows.setdefault(r, {})[j] = c
        for r in sorted(rows):
            ech.add(_sparse_int(rows[r]))
        if len(ech) == d:
            break

    return _kernel_of_echelon(ech)


def quotient_algebra(
    sig: Signature,
    invariants: Subspace,
    intersection: Subspace,
    reps: Sequence[Element],
    product: Callable[[Element, Element], Element] | None = None,
) -> QuotientAlgebra:
    """Structure constants of ``invariants / intersection`` on the classes of ``reps``."""
    product = product or (lambda a, b: a * b)
    k = len(reps)
    if k == 0:
        return QuotientAlgebra((), (), fraction_array(None, (0, 0, 0)))
    t = intersection.dim
    solver = SpanSolver([list(v) for v in intersection.basis] + [r.to_vector() for r in reps], sig.dim)

    def project(f: Element) -> list[Fraction]:
        return solver.solve(f.terms)[t:]

    sc = fraction_array(None, (k, k, k))
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            sc[i, j] = fraction_array(project(product(a, b)))
    unit = tuple(project(Element.scalar(sig)))
    parities = []
    for r in reps:
        p = r.parity()
        if p is None:
            raise ReductionError(f"representative {r} is not parity-homogeneous")
        parities.append(p)
    labels = tuple(format_element(r) for r in reps)
    return QuotientAlgebra(tuple(parities), unit, sc, labels)


@dataclass(frozen=True, eq=False)
class ReductionResult:
    spec: ActionSpec
    ideal: Subspace
    invariants: Subspace
    intersection: Subspace
    reps: tuple[Element, ...]
    quotient: QuotientAlgebra
    module_dim: tuple[int, int]
    witnesses: tuple[tuple[str, Element], ...] = ()
    _solver: SpanSolver | None = field(default=None, repr=False)

    @property
    def signature(self) -> Signature:
        return self.spec.signature

    def project(self, f: Element) -> np.ndarray:
        """Coordinates of the class of an invariant element in the quotient."""
        if self.quotient.dim == 0:
            return fraction_array(None, (0,))
        if not self.invariants.contains(f.to_vector()):
            raise ValueError(f"{f} is not invariant")
        t = self.intersection.dim
        return fraction_array(self._solver.solve(f.terms)[t:])

    def lift(self, coords: Sequence) -> Element:
        """An invariant element in the class with the given coordinates."""
        out = Element.zero(self.signature)
        for c, r in zip(coords, self.reps):
            out = out + r.scale(c)
        return out

    def in_ideal(self, f: Element) -> bool:
        return self.ideal.contains(f.to_vector())

    def in_invariants(self, f: Element) -> bool:
        return self.invariants.contains(f.to_vector())

    def in_intersection(self, f: Element) -> bool:
        return self.intersection.contains(f.to_vector())

    def dims(self) -> dict[str, int]:
        qe, qo = self.quotient.dims
        me, mo = self.module_dim
        return {
            "algebra": self.signature.dim,
            "ideal": self.ideal.dim,
            "invariants": self.invariants.dim,
            "intersection": self.intersection.dim,
            "quotient_even": qe,
            "quotient_odd": qo,
            "module_even": me,
            "module_odd": mo,
        }


def _module_dims(sig: Signature, ideal: Subspace) -> tuple[int, int]:
    pivots = set(ideal.pivots)
    even = odd = 0
    for m in range(sig.dim):
        if m not in pivots:
            if m.bit_count() & 1:
                odd += 1
            else:
                even += 1
    return even, odd


def _check_two_sided(sig, invariants: Subspace, intersection: Subspace, product) -> None:
    inv = [_element(sig, v) for v in invariants.basis]
    for v in intersection.basis:
        ve = _element(sig, v)
        for f in inv:
            if not intersection.contains(product(f, ve).to_vector()):
                raise ReductionError("f * v left the intersection: not a left ideal of the invariants")
            if not intersection.contains(product(ve, f).to_vector()):
                raise ReductionError("v * f left the intersection: not a right ideal of the invariants")


def _run_pipeline(spec: ActionSpec, reps_override: Sequence[Element] | None = None) -> ReductionResult:
    sig = spec.signature
    ideal = left_ideal(spec)
    invariants = invariant_subalgebra(spec)
    intersection = intersect(invariants, ideal)
    _check_two_sided(sig, invariants, intersection, lambda a, b: a * b)
    if reps_override is None:
        reps = tuple(_element(sig, v) for v in complement_reps(invariants, intersection))
    else:
        reps = tuple(reps_override)
    quotient = quotient_algebra(sig, invariants, intersection, reps)
    solver = None
    if reps:
        solver = SpanSolver([list(v) for v in intersection.basis] + [r.to_vector() for r in reps], sig.dim)
    witnesses = tuple((f"intersection[{i}]", _element(sig, v)) for i, v in enumerate(intersection.basis))
    return ReductionResult(
        spec=spec,
        ideal=ideal,
        invariants=invariants,
        intersection=intersection,
        reps=reps,
        quotient=quotient,
        module_dim=_module_dims(sig, ideal),
        witnesses=witnesses,
        _solver=solver,
    )


def reduce(spec: ActionSpec, reps: Sequence[Element] | None = None) -> ReductionResult:
    """``A // G = A^G / (A^G ∩ I)`` with structure constants.

    ``reps`` overrides the default choice of quotient representatives; any
    invariant elements whose classes form a basis give the same algebra.
    """
    if spec.is_classical:
        raise ValueError("use classical_reduce for the all-zero signature")
    if any(g.parity() == ODD for g in spec.generators):
        raise ValueError(f"{spec.name}: reduce needs even generators")
    return _run_pipeline(spec, reps)


# Lie brackets


@dataclass
class BracketReport:
    entries: list[tuple[int, int, Element, Element, bool]]
    closure_dim: int
    span_dim: int

    @property
    def table_ok(self) -> bool:
        return all(ok for *_, ok in self.entries)

    @property
    def closed(self) -> bool:
        """True when the generator span is already bracket-closed."""
        return self.closure_dim == self.span_dim

    @property
    def passed(self) -> bool:
        return self.table_ok and self.closed

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "j": j, "expected": format_element(e), "actual": format_element(a), "pass": ok}
                for i, j, e, a, ok in self.entries
            ],
            "span_dim": self.span_dim,
            "closure_dim": self.closure_dim,
            "closed": self.closed,
            "pass": self.passed,
        }


def lie_closure(elements: Sequence[Element], bracket=supercommutator) -> list[Element]:
    """Basis of the smallest bracket-closed subspace containing ``elements``."""
    if not elements:
        return []
    sig = elements[0].signature
    ech = Echelon(sig.dim)
    basis: list[Element] = []
    queue = []
    for e in elements:
        if ech.add(_sparse_int(e.terms)):
            basis.append(e)
            queue.append(e)
    while queue:
        new = queue.pop()
        for b in list(basis):
            c = bracket(b, new)
            if c and ech.add(_sparse_int(c.terms)):
                basis.append(c)
                queue.append(c)
    return basis


def verify_bracket_table(spec: ActionSpec) -> BracketReport:
    entries = []
    for (i, j), expected in sorted((spec.expected_brackets or {}).items()):
        actual = supercommutator(spec.generators[i], spec.generators[j])
        entries.append((i, j, expected, actual, actual == expected))
    bracket = _derivation(spec)
    span_dim = rref_span([g.terms for g in spec.generators], spec.signature.dim).dim
    closure = lie_closure(list(spec.generators), bracket)
    return BracketReport(entries, len(closure), span_dim)


# modules


@dataclass(frozen=True, eq=False)
class ModuleRep:
    """A finite-dimensional supermodule given by action matrices.

    ``generator_action[i]`` is the matrix of left multiplication by
    ``x_{i+1}`` (columns are images of basis vectors). ``right_action`` holds
    the matrices of right multiplication by the reduced-algebra basis, when
    known.
    """

    parities: tuple[int, ...]
    generator_action: tuple[np.ndarray, ...]
    signature: Signature
    basis_labels: tuple[str, ...] = ()
    right_action: tuple[np.ndarray, ...] = ()
    right_parities: tuple[int, ...] = ()

    @property
    def dim(self) -> tuple[int, int]:
        odd = sum(self.parities)
        return len(self.parities) - odd, odd

    @property
    def total_dim(self) -> int:
        return len(self.parities)

    def blade_actions(self) -> list[np.ndarray]:
        """Matrices of left multiplication by every blade, indexed by bitmask."""
        d = self.total_dim
        nz = [[(a, b, L[a, b]) for a in range(d) for b in range(d) if L[a, b]] for L in self.generator_action]
        out = [_identity(d)]
        for mask in range(1, 1 << self.signature.n):
            low = (mask & -mask).bit_length() - 1
            rest = out[mask ^ (1 << low)]
            # x_low * (rest blade): ascending order puts the lowest index first
            m = fraction_array(None, (d, d))
            for a, b, v in nz[low]:
                m[a] = m[a] + v * rest[b]
            out.append(m)
        return out

    def left_action(self, f: Element) -> np.ndarray:
        """Matrix of left multiplication by an arbitrary element."""
        d = self.total_dim
        out = fraction_array(None, (d, d))
        eye = _identity(d)
        for mask, c in f.terms.items():
            m = eye
            for i in range(self.signature.n):
                if mask >> i & 1:
                    m = m @ self.generator_action[i]
            out = out + c * m
        return out

    def check_relations(self) -> bool:
        """``L_i^2 = sig[i] Id`` and ``L_i L_j + L_j L_i = 0`` for ``i != j``."""
        d = self.total_dim
        eye = _identity(d)
        zero = fraction_array(None, (d, d))
        L = self.generator_action
        for i in range(len(L)):
            if not _mat_eq(L[i] @ L[i], self.signature.entries[i] * eye):
                return False
            for j in range(i + 1, len(L)):
                if not _mat_eq(L[i] @ L[j] + L[j] @ L[i], zero):
                    return False
        return True


def _identity(d: int) -> np.ndarray:
    eye = fraction_array(None, (d, d))
    for i in range(d):
        eye[i, i] = Fraction(1)
    return eye


def _mat_eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _quotient_action(sig: Signature, ideal: Subspace, reps: Sequence[int], act: Callable[[Element], Element]):
    col_of = {m: k for k, m in enumerate(reps)}
    d = len(reps)
    mat = fraction_array(None, (d, d))
    for j, m in enumerate(reps):
        nf = ideal.normal_form(act(_blade(sig, m)).terms)
        for r, c in nf.items():
            mat[col_of[r], j] = c
    return mat


def cyclic_module(spec: ActionSpec, result: ReductionResult | None = None) -> ModuleRep:
    """``A / I`` on blade coset representatives, with left generator action.

    With a ``result`` whose quotient is nonzero, the right action of the
    reduced algebra's basis is included as well.
    """
    sig = spec.signature
    ideal = result.ideal if result is not None else left_ideal(spec)
    if ideal.dim == sig.dim:
        raise ValueError(f"{spec.name}: the ideal is the whole algebra (zero module)")
    pivots = set(ideal.pivots)
    reps = [m for m in range(sig.dim) if m not in pivots]
    gens = tuple(
        _quotient_action(sig, ideal, reps, lambda b, i=i: Element.generator(sig, i) * b)
        for i in range(1, sig.n + 1)
    )
    right: tuple[np.ndarray, ...] = ()
    right_par: tuple[int, ...] = ()
    if result is not None and result.quotient.dim:
        right = tuple(_quotient_action(sig, ideal, reps, lambda b, r=r: b * r) for r in result.reps)
        right_par = result.quotient.parities
    labels = tuple(format_element(_blade(sig, m)).removeprefix("1 ") for m in reps)
    return ModuleRep(
        parities=tuple(m.bit_count() & 1 for m in reps),
        generator_action=gens,
        signature=sig,
        basis_labels=labels,
        right_action=right,
        right_parities=right_par,
    )


def regular_module(sig: Signature) -> ModuleRep:
    """``A`` acting on itself by left multiplication."""
    spec = ActionSpec("regular", sig, ())
    return cyclic_module(spec)


def commutant(
    operators: Sequence[np.ndarray],
    operator_parities: Sequence[int],
    module_parities: Sequence[int],
    signed: bool = False,
) -> list[tuple[int, np.ndarray]]:
    """Parity-homogeneous basis of the maps commuting with ``operators``.

    Returns ``(parity, matrix)`` pairs, even ones first. With ``signed``,
    an odd map must satisfy ``f L = (-1)^{|L|} L f``; otherwise every
    homogeneous map simply commutes, which is the linearity condition for
    maps written on the right of the module.
    """
    d = len(module_parities)
    out: list[tuple[int, np.ndarray]] = []
    for fp in (EVEN, ODD):
        allowed = [(r, c) for r in range(d) for c in range(d) if (module_parities[r] + module_parities[c]) % 2 == fp]
        if not allowed:
            continue
        var = {rc: k for k, rc in enumerate(allowed)}
        nv = len(allowed)
        ech = Echelon(nv)
        for L, lp in zip(operators, operator_parities):
            s = -1 if (signed and fp == ODD and lp == ODD) else 1
            nz = [(a, b, L[a, b]) for a in range(d) for b in range(d) if L[a, b]]
            # (F L - s L F)[r, c] = sum_k F[r,k] L[k,c] - s sum_k L[r,k] F[k,c]
            eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
            for k, c, val in nz:
                for r in range(d):
                    v = var.get((r, k))
                    if v is not None:
                        row = eqs.setdefault((r, c), {})
                        row[v] = row.get(v, 0) + val
            for r, k, val in nz:
                for c in range(d):
                    v = var.get((k, c))
                    if v is not None:
                        row = eqs.setdefault((r, c), {})
                        row[v] = row.get(v, 0) - s * val
            for key in sorted(eqs):
                ech.add(_sparse_int({i: x for i, x in eqs[key].items() if x}))

        for vec in _kernel_of_echelon(ech).basis:
            m = fraction_array(None, (d, d))
            for k, x in enumerate(vec):
                if x:
                    m[allowed[k]] = x
            out.append((fp, m))
    return out


def _matrix_algebra(basis: Sequence[tuple[int, np.ndarray]]) -> QuotientAlgebra:
    """Superalgebra spanned by ``basis`` with the product ``f g = g ∘ f``."""
    k = len(basis)
    if k == 0:
        return QuotientAlgebra((), (), fraction_array(None, (0, 0, 0)))
    d = basis[0][1].shape[0]
    solver = SpanSolver([list(m.flat) for _, m in basis], d * d)
    sc = fraction_array(None, (k, k, k))
    for i, (_, f) in enumerate(basis):
        for j, (_, g) in enumerate(basis):
            sc[i, j] = fraction_array(solver.solve(list((g @ f).flat)))
    unit = tuple(solver.solve(list(_identity(d).flat)))
    return QuotientAlgebra(tuple(p for p, _ in basis), unit, sc)


def endomorphism_algebra(module: ModuleRep, over: str = "A", signed: bool = False) -> QuotientAlgebra:
    """``End`` of ``module`` over the left algebra (``"A"``) or the right one (``"B"``).

    Composition follows ``f g = g ∘ f`` (endomorphisms act from the right).
    """
    if over == "A":
        ops, pars = module.generator_action, (ODD,) * len(module.generator_action)
    elif over == "B":
        ops, pars = module.right_action, module.right_parities
    else:
        raise ValueError(f"over must be 'A' or 'B', got {over!r}")
    return _matrix_algebra(commutant(ops, pars, module.parities, signed=signed))


@dataclass
class MoritaReport:
    dim_module: int
    dim_A: int
    dim_B: int
    dim_identity: bool
    end_A_dim: int
    right_action_injective: bool
    right_action_in_end: bool
    structure_match: bool
    end_B_dim: int
    faithful: bool
    end_A: QuotientAlgebra | None = None

    @property
    def passed(self) -> bool:
        return (
            self.dim_identity
            and self.end_A_dim == self.dim_B
            and self.right_action_injective
            and self.right_action_in_end
            and self.structure_match
            and self.end_B_dim == self.dim_A
            and self.faithful
        )

    def to_json(self) -> dict:
        return {
            "dim_identity": self.dim_identity,
            "dim_module": self.dim_module,
            "dim_A": self.dim_A,
            "dim_B": self.dim_B,
            "end_A_dim": self.end_A_dim,
            "end_B_dim": self.end_B_dim,
            "right_action_injective": self.right_action_injective,
            "right_action_in_end": self.right_action_in_end,
            "structure_match": self.structure_match,
            "faithful": self.faithful,
            "pass": self.passed,
        }


def _rank(matrices: Sequence[np.ndarray]) -> int:
    if not matrices:
        return 0
    n = matrices[0].size
    ech = Echelon(n)
    for m in matrices:
        ech.add(_sparse_int(list(m.flat)))
    return len(ech)


def morita_check(spec: ActionSpec, result: ReductionResult | None = None) -> MoritaReport:
    """Check that ``M = A / I`` is a Morita equivalence between ``A`` and ``A // G``.

    The checks are: ``dim(M)^2 = dim(A) dim(B)``; ``End_A(M)`` has dimension
    ``dim(B)`` and right multiplication by ``B`` maps onto it as an algebra
    isomorphism; ``End_B(M)`` has dimension ``dim(A)``; and ``A`` acts
    faithfully.
    """
    result = result if result is not None else reduce(spec)
    B = result.quotient
    if B.dim == 0:
        raise ValueError(f"{spec.name}: the reduction is zero; no Morita witness")
    M = cyclic_module(spec, result)
    dM, dA, dB = M.total_dim, spec.signature.dim, B.dim

    end_a_basis = commutant(M.generator_action, (ODD,) * spec.n, M.parities)
    end_A = _matrix_algebra(end_a_basis)
    R = M.right_action
    in_end = all(
        _mat_eq(r @ L, L @ r) for r in R for L in M.generator_action
    )
    injective = _rank(R) == len(R)
    # R_i . R_j = R_j ∘ R_i must equal sum_k c[i, j, k] R_k
    match = True
    for i in range(dB):
        for j in range(dB):
            expect = fraction_array(None, (dM, dM))
            for k in np.flatnonzero(B.structure_constants[i, j]):
                expect = expect + B.structure_constants[i, j, k] * R[k]
            if not _mat_eq(R[j] @ R[i], expect):
                match = False
    end_b_basis = commutant(R, B.parities, M.parities)
    blades = M.blade_actions()
    faithful = _rank(blades) == dA
    return MoritaReport(
        dim_module=dM,
        dim_A=dA,
        dim_B=dB,
        dim_identity=dM * dM == dA * dB,
        end_A_dim=len(end_a_basis),
        right_action_injective=injective,
        right_action_in_end=in_end,
        structure_match=match,
        end_B_dim=len(end_b_basis),
        faithful=faithful,
        end_A=end_A,
    )


# classical limit


@dataclass(frozen=True, eq=False)
class ClassicalResult:
    reduction: ReductionResult
    brackets: np.ndarray  # brackets[i, j] = coords of {b_i, b_j}

    @property
    def quotient(self) -> QuotientAlgebra:
        return self.reduction.quotient

    def bracket(self, u: Sequence, v: Sequence) -> np.ndarray:
        d = self.quotient.dim
        out = fraction_array(None, (d,))
        for i in range(d):
            for j in range(d):
                if u[i] and v[j]:
                    out = out + u[i] * v[j] * self.brackets[i, j]
        return out


def classical_reduce(spec: ActionSpec) -> ClassicalResult:
    """Reduction of the exterior algebra with its Poisson bracket.

    Invariants are the common kernel of ``{g, -}``; the quotient carries the
    induced Poisson bracket, returned as a table on the quotient basis.
    """
    if not spec.is_classical:
        raise ValueError("classical_reduce needs the all-zero signature")
    res = _run_pipeline(spec)
    d = res.quotient.dim
    br = fraction_array(None, (d, d, d))
    for i, a in enumerate(res.reps):
        for j, b in enumerate(res.reps):
            br[i, j] = res.project(poisson_bracket(a, b))
    return ClassicalResult(res, br)
