"""Recognize small superalgebras and certify the answer with explicit relations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Sequence

import numpy as np

from .algebra import QuotientAlgebra, fraction_array, rational_str
from .linalg import rref_span
from .superblade import EVEN, ODD

__all__ = ["AlgebraTag", "IsoWitness", "identify", "verify_relations"]


class AlgebraTag(enum.Enum):
    ZERO = "zero"
    REALS = "R"
    COMPLEXES = "C"
    QUATERNIONS = "H"
    CLIFF_PLUS1 = "Cliff(+1)"
    CLIFF_MINUS1 = "Cliff(-1)"
    MAT1_1 = "Mat(1|1)"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


# generator names each tag's witness must provide
_SHAPES = {
    AlgebraTag.ZERO: (),
    AlgebraTag.REALS: ("1",),
    AlgebraTag.COMPLEXES: ("i",),
    AlgebraTag.QUATERNIONS: ("i", "j", "k"),
    AlgebraTag.CLIFF_PLUS1: ("t",),
    AlgebraTag.CLIFF_MINUS1: ("t",),
    AlgebraTag.MAT1_1: ("e",),
    AlgebraTag.UNKNOWN: (),
}


@dataclass
class IsoWitness:
    tag: AlgebraTag
    images: dict[str, tuple[Fraction, ...]] = field(default_factory=dict)
    relations: list[tuple[str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.relations)

    def to_json(self) -> dict:
        return {
            "tag": str(self.tag),
            "images": {k: [rational_str(c) for c in v] for k, v in sorted(self.images.items())},
            "relations": [{"relation": r, "holds": ok} for r, ok in self.relations],
            "notes": list(self.notes),
        }


def _eq(u, v) -> bool:
    return all(Fraction(a) == Fraction(b) for a, b in zip(u, v))


def _rank(vectors) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return rref_span(vectors).dim


def _rational_sqrt(c: Fraction) -> Fraction | None:
    if c <= 0:
        return None
    p, q = isqrt(c.numerator), isqrt(c.denominator)
    if p * p == c.numerator and q * q == c.denominator:
        return Fraction(p, q)
    return None


def _relations(B: QuotientAlgebra, tag: AlgebraTag, img: dict[str, np.ndarray]) -> list[tuple[str, bool]]:
    one = B.unit_vector() if B.dim else None
    rel: list[tuple[str, bool]] = []
    if tag is AlgebraTag.ZERO:
        rel.append(("dim = 0", B.dim == 0))
    elif tag is AlgebraTag.REALS:
        u = img["1"]
        rel.append(("dim = (1|0)", B.dims == (1, 0)))
        rel.append(("image of 1 is the unit", B.dim == 1 and _eq(u, one)))
    elif tag is AlgebraTag.COMPLEXES:
        i = img["i"]
        rel.append(("dim = (2|0)", B.dims == (2, 0)))
        rel.append(("i even", B.parity_of(i) == EVEN))
        rel.append(("i^2 = -1", _eq(B.mul(i, i), -one)))
        rel.append(("{1, i} independent", _rank([one, i]) == 2))
        rel.append(("commutative", B.is_commutative()))
    elif tag is AlgebraTag.QUATERNIONS:
        i, j, k = img["i"], img["j"], img["k"]
        rel.append(("dim = (4|0)", B.dims == (4, 0)))
        for name, v in (("i", i), ("j", j), ("k", k)):
            rel.append((f"{name} even", B.parity_of(v) == EVEN))
            rel.append((f"{name}^2 = -1", _eq(B.mul(v, v), -one)))
        rel.append(("ij = k", _eq(B.mul(i, j), k)))
        rel.append(("ijk = -1", _eq(B.mul(B.mul(i, j), k), -one)))
        rel.append(("{1, i, j, k} independent", _rank([one, i, j, k]) == 4))
    elif tag in (AlgebraTag.CLIFF_PLUS1, AlgebraTag.CLIFF_MINUS1):
        t = img["t"]
        sq = 1 if tag is AlgebraTag.CLIFF_MINUS1 else -1
        rel.append(("dim = (1|1)", B.dims == (1, 1)))
        rel.append(("t odd", B.parity_of(t) == ODD and any(t)))
        rel.append((f"t^2 = {sq:+d}", _eq(B.mul(t, t), sq * one)))
    elif tag is AlgebraTag.MAT1_1:
        e = img["e"]
        rel.append(("dim = (2|2)", B.dims == (2, 2)))
        rel.append(("e even", B.parity_of(e) == EVEN))
        rel.append(("e^2 = e", _eq(B.mul(e, e), e)))
        rel.append(("e != 0, 1", any(e) and not _eq(e, one)))
        corner = [B.mul(B.mul(e, B.basis_vector(m)), e) for m in range(B.dim)]
        even = [c for c, p in zip(corner, B.parities) if p == EVEN]
        odd = [c for c, p in zip(corner, B.parities) if p == ODD]
        rel.append(("eBe = (1|0)", _rank(even) == 1 and _rank(odd) == 0))
    return rel


def verify_relations(B: QuotientAlgebra, witness: IsoWitness) -> bool:
    """Re-evaluate every relation of ``witness`` from ``B``'s structure constants."""
    tag = witness.tag
    need = _SHAPES[tag]
    if set(witness.images) != set(need):
        raise ValueError(f"witness for {tag} needs images {need}, got {sorted(witness.images)}")
    if tag is AlgebraTag.UNKNOWN:
        return False
    img = {}
    for k, v in witness.images.items():
        if len(v) != B.dim:
            raise ValueError(f"image {k} has length {len(v)}, algebra has dim {B.dim}")
        img[k] = fraction_array(list(v))
    rel = _relations(B, tag, img)
    return all(ok for _, ok in rel)


def _candidates(B: QuotientAlgebra, hints: Sequence[np.ndarray]):
    """Hints, then basis vectors, then small integer combinations."""
    seen = set()
    pool = [fraction_array(list(h)) for h in hints]
    pool += [B.basis_vector(i) for i in range(B.dim)]
    for v in pool:
        key = tuple(v)
        if key not in seen and any(v):
            seen.add(key)
            yield v
    if B.dim <= 5:
        for coeffs in product(range(-2, 3), repeat=B.dim):
            key = tuple(Fraction(c) for c in coeffs)
            if key not in seen and any(coeffs):
                seen.add(key)
                yield fraction_array(list(coeffs))


def _normalized_square_root(B, v, sign: int):
    """Rescale ``v`` so that ``v^2 = sign``; None when impossible over Q."""
    c = B.is_scalar(B.mul(v, v))
    if c is None or c == 0 or (c > 0) != (sign > 0):
        return None
    r = _rational_sqrt(abs(c))
    if r is None:
        return None
    return v * (1 / r)


def _find_quaternions(B, hints):
    one = B.unit_vector()
    roots = []
    for v in _candidates(B, hints):
        if B.parity_of(v) != EVEN or B.is_scalar(v) is not None:
            continue
        u = _normalized_square_root(B, v, -1)
        if u is not None and not any(_eq(u, r) or _eq(u, -r) for r in roots):
            roots.append(u)
        for i in roots:
            for j in roots:
                if i is j:
                    continue
                ij = B.mul(i, j)
                if _eq(ij, -B.mul(j, i)) and _rank([one, i, j, ij]) == 4:
                    return i, j, ij
    return None


def identify(B: QuotientAlgebra, hints: Sequence[Sequence] | None = None) -> tuple[AlgebraTag, IsoWitness]:
    """Fingerprint ``B`` by its ``(even|odd)`` dimension and search for a witness.

    ``hints`` are coordinate vectors of preferred generator images (for the
    quaternions, the intended ``i, j, k`` in that order).
    """
    hints = [fraction_array(list(h)) for h in (hints or [])]
    dims = B.dims
    notes: list[str] = []
    img: dict[str, np.ndarray] | None = None
    tag = AlgebraTag.UNKNOWN

    if dims == (0, 0):
        tag, img = AlgebraTag.ZERO, {}
    elif dims == (1, 0):
        tag, img = AlgebraTag.REALS, {"1": B.unit_vector()}
    elif dims == (1, 1):
        for v in _candidates(B, hints):
            if B.parity_of(v) != ODD:
                continue
            for sign, t in ((1, AlgebraTag.CLIFF_MINUS1), (-1, AlgebraTag.CLIFF_PLUS1)):
                u = _normalized_square_root(B, v, sign)
                if u is not None:
                    tag, img = t, {"t": u}
                    break
            if img is not None:
                break
    elif dims == (2, 0) and B.is_commutative():
        for v in _candidates(B, hints):
            if B.parity_of(v) != EVEN or B.is_scalar(v) is not None:
                continue
            u = _normalized_square_root(B, v, -1)
            if u is not None:
                tag, img = AlgebraTag.COMPLEXES, {"i": u}
                break
    elif dims == (4, 0):
        found = _find_quaternions(B, hints)
        if found:
            i, j, k = found
            tag, img = AlgebraTag.QUATERNIONS, {"i": i, "j": j, "k": k}
            if len(hints) >= 3:
                hk = _normalized_square_root(B, hints[2], -1)
                if hk is not None and _eq(hk, -k):
                    notes.append("third hint equals -ij; witness re-oriented to k = ij")
    elif dims == (2, 2):
        one = B.unit_vector()
        for v in _candidates(B, hints):
            if B.parity_of(v) != EVEN or B.is_scalar(v) is not None:
                continue
            e = None
            if _eq(B.mul(v, v), v):
                e = v
            else:
                t = _normalized_square_root(B, v, 1)
                if t is not None:
                    e = (one + t) * Fraction(1, 2)
            if e is not None and _relations(B, AlgebraTag.MAT1_1, {"e": e})[-1][1]:
                tag, img = AlgebraTag.MAT1_1, {"e": e}
                break

    if img is None:
        return AlgebraTag.UNKNOWN, IsoWitness(AlgebraTag.UNKNOWN, notes=["no recognizer matched"])
    rel = _relations(B, tag, img)
    witness = IsoWitness(tag, {k: tuple(v) for k, v in img.items()}, rel, notes)
    if not witness.holds:
        return AlgebraTag.UNKNOWN, IsoWitness(AlgebraTag.UNKNOWN, notes=[f"{tag} candidate failed verification"])
    return tag, witness
