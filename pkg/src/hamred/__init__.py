"""Exact Hamiltonian reduction of Clifford superalgebras.

Elements of ``Cliff(n)`` (or of the exterior algebra) are sparse dicts from
blade bitmasks to rationals; every subspace, quotient and representation is
computed with exact integer linear algebra.
"""

__version__ = "0.1.0"

from .algebra import QuotientAlgebra, clifford_algebra, rational_str
from .catalog import CatalogError, entry, load_action
from .identify import AlgebraTag, IsoWitness, identify, verify_relations
from .linalg import Subspace, complement_reps, intersect, kernel, rref_span
from .reduction import (
    ActionSpec,
    ReductionError,
    ReductionResult,
    classical_reduce,
    commutant,
    cyclic_module,
    endomorphism_algebra,
    invariant_subalgebra,
    left_ideal,
    morita_check,
    reduce,
    verify_bracket_table,
)
from .superblade import (
    Blade,
    Element,
    ElementParseError,
    Signature,
    format_element,
    odd_partial,
    parse_element,
    poisson_bracket,
    supercommutator,
)

__all__ = [
    "ActionSpec",
    "AlgebraTag",
    "Blade",
    "CatalogError",
    "Element",
    "ElementParseError",
    "IsoWitness",
    "QuotientAlgebra",
    "ReductionError",
    "ReductionResult",
    "Signature",
    "Subspace",
    "classical_reduce",
    "clifford_algebra",
    "commutant",
    "complement_reps",
    "cyclic_module",
    "endomorphism_algebra",
    "entry",
    "format_element",
    "identify",
    "intersect",
    "invariant_subalgebra",
    "kernel",
    "left_ideal",
    "load_action",
    "morita_check",
    "odd_partial",
    "parse_element",
    "poisson_bracket",
    "rational_str",
    "reduce",
    "rref_span",
    "supercommutator",
    "verify_bracket_table",
    "verify_relations",
]
