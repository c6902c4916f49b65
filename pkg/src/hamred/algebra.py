"""Finite-dimensional superalgebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .superblade import EVEN, ODD, Signature, _mask_product

__all__ = ["QuotientAlgebra", "clifford_algebra", "fraction_array", "parse_rational", "rational_str"]

_PARITY_NAMES = {EVEN: "even", ODD: "odd"}


def rational_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    return Fraction(text.strip())


def fraction_array(data, shape=None) -> np.ndarray:
    """Object array of Fractions (exact arithmetic survives ``@`` and ``+``)."""
    arr = np.empty(np.shape(data) if shape is None else shape, dtype=object)
    flat = np.asarray(data, dtype=object).reshape(-1) if shape is None else None
    if flat is not None:
        for i, v in enumerate(flat):
            arr.flat[i] = Fraction(v)
    else:
        arr.fill(Fraction(0))
    return arr


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """Basis ``b_0..b_{d-1}`` with ``b_i b_j = sum_k c[i, j, k] b_k``.

    ``parities[i]`` is the parity of ``b_i`` and ``unit`` the coordinates of
    the identity.
    """

    parities: tuple[int, ...]
    unit: tuple[Fraction, ...]
    structure_constants: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        d = len(self.parities)
        c = self.structure_constants
        if c.shape != (d, d, d):
            raise ValueError(f"structure constants shape {c.shape} != {(d, d, d)}")
        if len(self.unit) != d:
            raise ValueError("unit has the wrong length")
        if any(p not in (EVEN, ODD) for p in self.parities):
            raise ValueError("parities must be 0 (even) or 1 (odd)")

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def dims(self) -> tuple[int, int]:
        """``(even, odd)`` dimension."""
        odd = sum(self.parities)
        return self.dim - odd, odd

    def basis_vector(self, i: int) -> np.ndarray:
        v = fraction_array(None, (self.dim,))
        v[i] = Fraction(1)
        return v

    def vector(self, coords: Sequence) -> np.ndarray:
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has the wrong length")
        return fraction_array(list(coords))

    def unit_vector(self) -> np.ndarray:
        return fraction_array(list(self.unit))

    def mul(self, u: Sequence, v: Sequence) -> np.ndarray:
        u = self.vector(u)
        v = self.vector(v)
        out = fraction_array(None, (self.dim,))
        c = self.structure_constants
        for i in np.flatnonzero(u):
            for j in np.flatnonzero(v):
                out = out + u[i] * v[j] * c[i, j]
        return out

    def parity_of(self, v: Sequence) -> int | None:
        ps = {self.parities[i] for i, c in enumerate(v) if c}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else EVEN

    def is_scalar(self, v: Sequence) -> Fraction | None:
        """``t`` when ``v == t * unit``, else None."""
        if self.dim == 0:
            return Fraction(0)
        unit = self.unit
        k = next(i for i, c in enumerate(unit) if c)
        t = Fraction(v[k]) / unit[k]
        if all(Fraction(a) == t * b for a, b in zip(v, unit)):
            return t
        return None

    # consistency checks

    def check_unit(self) -> bool:
        e = self.unit_vector()
        return all(
            _eq(self.mul(e, self.basis_vector(i)), self.basis_vector(i))
            and _eq(self.mul(self.basis_vector(i), e), self.basis_vector(i))
            for i in range(self.dim)
        )

    def check_associative(self) -> bool:
        d = self.dim
        c = self.structure_constants
        for i in range(d):
            for j in range(d):
                ij = c[i, j]
                for k in range(d):
                    # (b_i b_j) b_k vs b_i (b_j b_k)
                    left = fraction_array(None, (d,))
                    for m in np.flatnonzero(ij):
                        left = left + ij[m] * c[m, k]
                    right = fraction_array(None, (d,))
                    jk = c[j, k]
                    for m in np.flatnonzero(jk):
                        right = right + jk[m] * c[i, m]
                    if not _eq(left, right):
                        return False
        return True

    def check_parity(self) -> bool:
        d = self.dim
        c = self.structure_constants
        for i in range(d):
            for j in range(d):
                for k in np.flatnonzero(c[i, j]):
                    if self.parities[k] != (self.parities[i] + self.parities[j]) % 2:
                        return False
        return True

    def is_commutative(self) -> bool:
        c = self.structure_constants
        return all(_eq(c[i, j], c[j, i]) for i in range(self.dim) for j in range(self.dim))

    # serialization

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "parities": [_PARITY_NAMES[p] for p in self.parities],
            "unit": [rational_str(c) for c in self.unit],
            "structure_constants": [
                [[rational_str(c) for c in self.structure_constants[i, j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "QuotientAlgebra":
        """Inverse of :meth:`to_json`; raises ``ValueError`` on malformed input."""
        if not isinstance(data, dict):
            raise ValueError("algebra JSON must be an object")
        try:
            dim = int(data["dim"])
            names = {v: k for k, v in _PARITY_NAMES.items()}
            parities = tuple(names[p] if isinstance(p, str) else int(p) for p in data["parities"])
            unit = tuple(parse_rational(c) for c in data["unit"])
            raw = data["structure_constants"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed algebra JSON: {exc}") from exc
        if len(parities) != dim or len(unit) != dim:
            raise ValueError("parities/unit length does not match dim")
        sc = fraction_array(None, (dim, dim, dim))
        try:
            if len(raw) != dim:
                raise ValueError
            for i in range(dim):
                if len(raw[i]) != dim:
                    raise ValueError
                for j in range(dim):
                    if len(raw[i][j]) != dim:
                        raise ValueError
                    for k in range(dim):
                        sc[i, j, k] = parse_rational(raw[i][j][k])
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ValueError("structure_constants must be a dim x dim x dim array of rationals") from exc
        labels = data.get("labels")
        return cls(parities, unit, sc, tuple(labels) if labels else None)


def _eq(u, v) -> bool:
    return all(a == b for a, b in zip(u, v))


def clifford_algebra(sig: Signature) -> QuotientAlgebra:
    """The whole Clifford/Grassmann algebra on its blade basis."""
    d = sig.dim
    sc = fraction_array(None, (d, d, d))
    for a in range(d):
        for b in range(d):
            s, m = _mask_product(a, b, sig.entries)
            if s:
                sc[a, b, m] = Fraction(s)
    parities = tuple(m.bit_count() & 1 for m in range(d))
    unit = tuple(Fraction(1 if m == 0 else 0) for m in range(d))
    labels = tuple(" ".join(f"x{i + 1}" for i in range(sig.n) if m >> i & 1) or "1" for m in range(d))
    return QuotientAlgebra(parities, unit, sc, labels)
