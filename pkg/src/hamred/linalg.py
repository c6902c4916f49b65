"""Exact rational linear algebra on coordinate vectors.

Everything is Gaussian elimination over the rationals. Internally rows are
sparse ``{column: int}`` dicts kept primitive (content 1, positive pivot),
which avoids Fraction overhead in the hot loops; the public results are
canonical reduced row-echelon bases with pivot entries equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "Echelon",
    "Subspace",
    "complement_reps",
    "contains",
    "coordinates",
    "intersect",
    "kernel",
    "SpanSolver",
    "rref_span",
    "span_sum",
]

Vector = Union[Sequence, Mapping[int, object]]


def _sparse_int(v: Vector) -> dict[int, int]:
    """Scale a rational vector to a primitive integer sparse row."""
    items = v.items() if isinstance(v, Mapping) else enumerate(v)
    fr = {i: Fraction(c) for i, c in items if c}
    if not fr:
        return {}
    den = lcm(*(c.denominator for c in fr.values()))
    row = {i: int(c * den) for i, c in fr.items()}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    if not row:
        return row
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {i: c // g for i, c in row.items()}
    return row


def _eliminate(v: dict[int, int], p: int, row: dict[int, int]) -> dict[int, int]:
    """Clear column ``p`` of ``v`` using ``row`` (whose pivot is ``p``)."""
    a = row[p]
    b = v[p]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {i: a * c for i, c in v.items()} if a != 1 else dict(v)
    for i, c in row.items():
        val = out.get(i, 0) - b * c
        if val:
            out[i] = val
        else:
            out.pop(i, None)
    return out


class Echelon:
    """Incrementally maintained reduced echelon form over the integers.

    Stored rows are primitive, have a positive pivot entry, and vanish in
    every other row's pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict[int, int]) -> dict[int, int]:
        """Normal form of ``v`` modulo the span (integer-scaled, primitive)."""
        rows = self.rows
        for p in [p for p in v if p in rows]:
            if p in v:
                v = _eliminate(v, p, rows[p])
        return _primitive(v)

    def add(self, v: dict[int, int]) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        for q, row in list(self.rows.items()):
            if p in row:
                self.rows[q] = _primitive(_eliminate(row, p, r))
        self.rows[p] = r
        return True

    def extend(self, vectors: Iterable[dict[int, int]], stop_at: int | None = None) -> None:
        for v in vectors:
            self.add(v)
            if stop_at is not None and len(self.rows) >= stop_at:
                break

    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        out = []
        for p in sorted(self.rows):
            row = self.rows[p]
            piv = row[p]
            vec = [Fraction(0)] * self.ncols
            for i, c in row.items():
                vec[i] = Fraction(c, piv)
            out.append(tuple(vec))
        return tuple(out)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``Q^ambient_dim`` held as its canonical RREF basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, c in enumerate(row) if c) for row in self.basis)

    @cached_property
    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for row in self.basis:
            r = _sparse_int(row)
            ech.rows[min(r)] = r
        return ech

    def contains(self, v: Vector) -> bool:
        return contains(self, v)

    def normal_form(self, v: Vector) -> dict[int, Fraction]:
        """Canonical representative of ``v`` modulo this subspace, as a sparse dict.

        The result vanishes on every pivot column.
        """
        vec = _fraction_items(v)
        rows = self.echelon.rows
        for p in [p for p in vec if p in rows]:
            c = vec.get(p)
            if not c:
                continue
            row = rows[p]
            f = c / row[p]
            for j, a in row.items():
                val = vec.get(j, 0) - f * a
                if val:
                    vec[j] = val
                else:
                    vec.pop(j, None)
        return vec

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def _dense(v: Mapping[int, object], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, c in v.items():
        out[i] = Fraction(c)
    return out


def _length(v: Vector) -> int | None:
    return None if isinstance(v, Mapping) else len(v)


def _from_echelon(ech: Echelon) -> Subspace:
    return Subspace(ech.ncols, ech.basis())


def rref_span(vectors: Iterable[Vector], ambient_dim: int | None = None) -> Subspace:
    """Canonical RREF basis of the span of ``vectors``.

    ``ambient_dim`` is required when ``vectors`` is empty or given sparsely.
    """
    vectors = list(vectors)
    lengths = {_length(v) for v in vectors} - {None}
    if len(lengths) > 1:
        raise ValueError(f"ragged input: vector lengths {sorted(lengths)}")
    if lengths:
        (n,) = lengths
        if ambient_dim is not None and ambient_dim != n:
            raise ValueError(f"vector length {n} != ambient_dim {ambient_dim}")
    elif ambient_dim is None:
        raise ValueError("ambient_dim is required for empty or sparse input")
    else:
        n = ambient_dim
    ech = Echelon(n)
    for v in vectors:
        r = _sparse_int(v)
        if r and max(r) >= n:
            raise ValueError(f"sparse vector index {max(r)} out of range for dimension {n}")
        ech.add(r)
        if len(ech) == n:
            break
    return _from_echelon(ech)


def contains(S: Subspace, v: Vector) -> bool:
    n = _length(v)
    if n is not None and n != S.ambient_dim:
        raise ValueError(f"dimension mismatch: {n} vs {S.ambient_dim}")
    return not S.echelon.reduce(_sparse_int(v))


def kernel(M: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """Canonical basis of ``{v : M v = 0}``."""
    rows = list(M)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    ech = Echelon(ncols)
    for r in rows:
        if _length(r) not in (None, ncols):
            raise ValueError("ragged matrix")
        ech.add(_sparse_int(r))
        if len(ech) == ncols:
            break
    return _kernel_of_echelon(ech)


def _kernel_of_echelon(ech: Echelon) -> Subspace:
    n = ech.ncols
    pivots = ech.rows
    free = [j for j in range(n) if j not in pivots]
    # column j of the RREF, restricted to pivot rows
    by_col: dict[int, list[tuple[int, Fraction]]] = {j: [] for j in free}
    for p, row in pivots.items():
        piv = row[p]
        for j, c in row.items():
            if j != p:
                by_col[j].append((p, Fraction(c, piv)))
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for p, c in by_col[j]:
            v[p] = -c
        basis.append(tuple(v))
    # free-column vectors are already in RREF up to ordering by leading entry
    return rref_span(basis, n)


def span_sum(S: Subspace, T: Subspace) -> Subspace:
    if S.ambient_dim != T.ambient_dim:
        raise ValueError("dimension mismatch")
    return rref_span(list(S.basis) + list(T.basis), S.ambient_dim)


def intersect(S: Subspace, T: Subspace) -> Subspace:
    """``S ∩ T`` by the Zassenhaus construction."""
    if S.ambient_dim != T.ambient_dim:
        raise ValueError(f"dimension mismatch: {S.ambient_dim} vs {T.ambient_dim}")
    n = S.ambient_dim
    if not S.dim or not T.dim:
        return Subspace(n, ())
    ech = Echelon(2 * n)
    for s in S.basis:
        r = _sparse_int(s)
        ech.add({**r, **{i + n: c for i, c in r.items()}})
    for t in T.basis:
        ech.add(_sparse_int(t))
    tail = [
        {i - n: c for i, c in row.items()}
        for p, row in ech.rows.items()
        if p >= n
    ]
    return rref_span(tail, n)


def complement_reps(S: Subspace, T: Subspace) -> list[tuple[Fraction, ...]]:
    """Rows of ``S``'s RREF basis whose classes form a basis of ``S / T``.

    Greedy in pivot order, so the choice is deterministic.
    """
    if S.ambient_dim != T.ambient_dim:
        raise ValueError("dimension mismatch")
    if not T <= S:
        raise ValueError("T is not contained in S")
    ech = Echelon(S.ambient_dim)
    ech.rows = dict(T.echelon.rows)
    reps = []
    for row in S.basis:
        if ech.add(_sparse_int(row)):
            reps.append(row)
    return reps


class SpanSolver:
    """Coordinates with respect to a fixed linearly independent list of vectors."""

    def __init__(self, basis: Sequence[Vector], ambient_dim: int):
        basis = list(basis)
        self.n = ambient_dim
        self.k = len(basis)
        # an identity block tracks which combination each echelon row is
        self._ech = Echelon(ambient_dim + self.k)
        for i, b in enumerate(basis):
            if _length(b) not in (None, ambient_dim):
                raise ValueError("dimension mismatch")
            row = _sparse_int(b)
            row = {j: c for j, c in row.items()}
            if row and max(row) >= ambient_dim:
                raise ValueError("sparse vector index out of range")
            row[ambient_dim + i] = 1
            # the tracking entry keeps every row independent, so test the first block
            if not any(j < ambient_dim for j in self._ech.reduce(row)):
                raise ValueError("basis vectors are linearly dependent")
            self._ech.add(row)
        self._scales = []
        for b in basis:
            fr = _fraction_items(b)
            den = lcm(*(c.denominator for c in fr.values())) if fr else 1
            ints = {j: int(c * den) for j, c in fr.items()}
            g = 0
            for c in ints.values():
                g = gcd(g, c)
            lead = ints[min(ints)] if ints else 1
            # b = scale * primitive(b)
            self._scales.append(Fraction(g if lead > 0 else -g, den) if ints else Fraction(1))

    def solve(self, v: Vector) -> list[Fraction]:
        """Return ``c`` with ``v == sum(c[i] * basis[i])``; ``ValueError`` if none."""
        n, k = self.n, self.k
        if _length(v) not in (None, n):
            raise ValueError("dimension mismatch")
        vec = _fraction_items(v)
        for p, row in self._ech.rows.items():
            if p >= n:
                continue
            c = vec.get(p)
            if not c:
                continue
            f = c / row[p]
            for j, a in row.items():
                val = vec.get(j, 0) - f * a
                if val:
                    vec[j] = val
                else:
                    vec.pop(j, None)
        if any(j < n for j in vec):
            raise ValueError("vector is not in the span of the basis")
        # vec now holds -(combination) in the tracking block, relative to
        # the primitive rescalings of the basis
        return [-vec.get(n + i, Fraction(0)) / self._scales[i] for i in range(k)]


def _fraction_items(v: Vector) -> dict[int, Fraction]:
    items = v.items() if isinstance(v, Mapping) else enumerate(v)
    return {i: Fraction(c) for i, c in items if c}


def coordinates(basis: Sequence[Vector], v: Vector) -> list[Fraction]:
    """Solve ``v = sum c_i basis[i]`` for linearly independent ``basis``.

    Raises ``ValueError`` when ``v`` is outside the span or the basis is
    dependent.
    """
    n = _length(v)
    if n is None:
        raise ValueError("coordinates needs a dense target vector")
    return SpanSolver(basis, n).solve(v)
