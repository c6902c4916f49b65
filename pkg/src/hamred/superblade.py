"""Exact arithmetic in Clifford and Grassmann superalgebras over the rationals.

Generators ``x1 .. xn`` are odd and pairwise anticommute; ``xi * xi`` equals
``sig[i]`` times the unit, where each signature entry is -1, 0 or +1.
All -1 gives ``Cliff(n)``, all +1 gives ``Cliff(-n)`` and all 0 gives the
exterior (function) algebra.

Blades are stored as integer bitmasks: bit ``i - 1`` set means ``xi`` is a
factor.  Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "EVEN",
    "ODD",
    "Blade",
    "Element",
    "ElementParseError",
    "Signature",
    "blade_product",
    "format_element",
    "mul",
    "odd_partial",
    "parity_decompose",
    "parse_element",
    "poisson_bracket",
    "supercommutator",
]

EVEN = 0
ODD = 1


class ElementParseError(ValueError):
    """Raised for malformed element text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Signature:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if any(e not in (-1, 0, 1) for e in entries):
            raise ValueError(f"signature entries must be -1, 0 or +1, got {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def clifford(cls, n: int) -> "Signature":
        """``Cliff(n)``: every generator squares to -1."""
        return cls((-1,) * n)

    @classmethod
    def clifford_neg(cls, n: int) -> "Signature":
        """``Cliff(-n)``: every generator squares to +1."""
        return cls((1,) * n)

    @classmethod
    def grassmann(cls, n: int) -> "Signature":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def dim(self) -> int:
        return 1 << len(self.entries)

    def __getitem__(self, i: int) -> int:
        # 1-based, matching generator names
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{e:+d}" if e else "0" for e in self.entries) + ")"


@dataclass(frozen=True, order=True)
class Blade:
    """A basis monomial ``x_{i1} ... x_{ik}`` with ascending indices."""

    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("blade mask must be non-negative")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Blade":
        mask = 0
        for i in indices:
            if i < 1:
                raise ValueError(f"generator index must be >= 1, got {i}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"repeated index {i}")
            mask |= bit
        return cls(mask)

    @property
    def indices(self) -> tuple[int, ...]:
        return _mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def parity(self) -> int:
        return self.mask.bit_count() & 1

    def __str__(self) -> str:
        return " ".join(f"x{i}" for i in self.indices) or "1"


def _mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _reorder_sign(a: int, b: int) -> int:
    # parity of the number of pairs (i in a, j in b) with i > j
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def _check_mask(mask: int, n: int) -> None:
    if mask >> n:
        raise IndexError(f"blade {_mask_indices(mask)} out of range for n={n}")


def _mask_product(a: int, b: int, sig: tuple[int, ...]) -> tuple[int, int]:
    scale = _reorder_sign(a, b)
    common = a & b
    i = 0
    while common:
        if common & 1:
            s = sig[i]
            if s == 0:
                return 0, a ^ b
            scale *= s
        common >>= 1
        i += 1
    return scale, a ^ b


def blade_product(b1: Blade, b2: Blade, sig: Signature) -> tuple[int, Blade]:
    """Clifford product of two blades as ``(scale, blade)``.

    >>> blade_product(Blade.from_indices([2]), Blade.from_indices([1]), Signature.clifford(2))
    (-1, Blade(mask=3))
    """
    _check_mask(b1.mask, sig.n)
    _check_mask(b2.mask, sig.n)
    scale, mask = _mask_product(b1.mask, b2.mask, sig.entries)
    return scale, Blade(mask)


class Element:
    """Immutable rational linear combination of blades in a fixed signature."""

    __slots__ = ("_sig", "_terms", "_hash")

    def __init__(self, sig: Signature, terms: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for mask, c in terms.items():
                if isinstance(mask, Blade):
                    mask = mask.mask
                _check_mask(mask, sig.n)
                c = Fraction(c)
                if c:
                    clean[mask] = c
        self._sig = sig
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, sig: Signature, terms: dict[int, Fraction]) -> "Element":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj._sig = sig
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, sig: Signature) -> "Element":
        return cls._raw(sig, {})

    @classmethod
    def scalar(cls, sig: Signature, c=1) -> "Element":
        return cls(sig, {0: c})

    @classmethod
    def generator(cls, sig: Signature, i: int) -> "Element":
        if not 1 <= i <= sig.n:
            raise IndexError(f"generator x{i} out of range for n={sig.n}")
        return cls._raw(sig, {1 << (i - 1): Fraction(1)})

    @classmethod
    def monomial(cls, sig: Signature, indices: Sequence[int], coeff=1) -> "Element":
        """Ordered product ``coeff * x_{i1} x_{i2} ...`` (indices need not be sorted)."""
        out = cls.scalar(sig, coeff)
        for i in indices:
            out = out * cls.generator(sig, i)
        return out

    @classmethod
    def from_vector(cls, sig: Signature, vec: Sequence) -> "Element":
        if len(vec) != sig.dim:
            raise ValueError(f"vector length {len(vec)} != 2^{sig.n}")
        return cls(sig, {m: c for m, c in enumerate(vec) if c})

    # accessors

    @property
    def signature(self) -> Signature:
        return self._sig

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Blade, Fraction]]:
        for mask in sorted(self._terms):
            yield Blade(mask), self._terms[mask]

    def coeff(self, blade: Blade | int | Sequence[int]) -> Fraction:
        if isinstance(blade, Blade):
            mask = blade.mask
        elif isinstance(blade, int):
            mask = blade
        else:
            mask = Blade.from_indices(blade).mask
        return self._terms.get(mask, Fraction(0))

    def to_vector(self) -> list[Fraction]:
        vec = [Fraction(0)] * self._sig.dim
        for m, c in self._terms.items():
            vec[m] = c
        return vec

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self._terms}

    def parity(self) -> int | None:
        """Common parity of all blades; ``None`` when mixed, ``EVEN`` for zero."""
        ps = {m.bit_count() & 1 for m in self._terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else EVEN

    def is_homogeneous(self) -> bool:
        return self.parity() is not None

    def grade_part(self, k: int) -> "Element":
        return Element._raw(self._sig, {m: c for m, c in self._terms.items() if m.bit_count() == k})

    # arithmetic

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other._sig != self._sig:
            raise ValueError(f"signature mismatch: {self._sig} vs {other._sig}")

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Element.scalar(self._sig, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element._raw(self._sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self._sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Element":
        c = Fraction(c)
        if not c:
            return Element.zero(self._sig)
        return Element._raw(self._sig, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Element.scalar(self._sig)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self._sig, other)
        if not isinstance(other, Element):
            return NotImplemented
        return self._sig == other._sig and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._sig, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Element({format_element(self)!r}, n={self._sig.n})"

    def __str__(self):
        return format_element(self)


def mul(f: Element, g: Element) -> Element:
    """Bilinear extension of :func:`blade_product`."""
    f._check(g)
    sig = f._sig.entries
    out: dict[int, Fraction] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            s, m = _mask_product(a, b, sig)
            if s:
                v = out.get(m, 0) + (ca * cb if s > 0 else -ca * cb)
                if v:
                    out[m] = v
                else:
                    del out[m]
    return Element._raw(f._sig, out)


def parity_decompose(f: Element) -> tuple[Element, Element]:
    even, odd = {}, {}
    for m, c in f._terms.items():
        (odd if m.bit_count() & 1 else even)[m] = c
    return Element._raw(f._sig, even), Element._raw(f._sig, odd)


def supercommutator(f: Element, g: Element) -> Element:
    """``[f, g] = fg - (-1)^{|f||g|} gf``, extended bilinearly over parity parts."""
    f._check(g)
    fe, fo = parity_decompose(f)
    ge, go = parity_decompose(g)
    out = Element.zero(f._sig)
    for fp, pf in ((fe, 0), (fo, 1)):
        if not fp:
            continue
        for gp, pg in ((ge, 0), (go, 1)):
            if not gp:
                continue
            if pf & pg:
                out = out + fp * gp + gp * fp
            else:
                out = out + fp * gp - gp * fp
    return out


def poisson_bracket(f: Element, g: Element) -> Element:
    """Poisson bracket on the exterior algebra with ``{xi, xj} = -2 delta_ij``.

    Both arguments live in the all-zero signature. Blades are lifted verbatim
    to ``Cliff(n)``, the supercommutator is taken there, and for each pair of
    blades of grades ``p`` and ``q`` only the grade ``p + q - 2`` part is kept
    (the single-contraction term).
    """
    f._check(g)
    if any(f._sig.entries):
        raise ValueError("poisson_bracket needs the all-zero (Grassmann) signature")
    cliff = Signature.clifford(f._sig.n).entries
    out: dict[int, Fraction] = {}
    for a, ca in f._terms.items():
        pa = a.bit_count()
        for b, cb in g._terms.items():
            common = a & b
            if common.bit_count() != 1:
                continue
            s1, m = _mask_product(a, b, cliff)
            s2, _ = _mask_product(b, a, cliff)
            sign = -1 if (pa & b.bit_count() & 1) else 1
            val = s1 - sign * s2
            if val:
                v = out.get(m, 0) + val * ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
    return Element._raw(f._sig, out)


def odd_partial(i: int, f: Element) -> Element:
    """Left derivative by the odd coordinate ``xi``.

    A blade containing ``xi`` loses it and picks up ``(-1)^k``, ``k`` the
    number of factors in front of ``xi``.
    """
    if not 1 <= i <= f._sig.n:
        raise IndexError(f"x{i} out of range for n={f._sig.n}")
    bit = 1 << (i - 1)
    below = bit - 1
    out = {}
    for m, c in f._terms.items():
        if m & bit:
            out[m ^ bit] = -c if (m & below).bit_count() & 1 else c
    return Element._raw(f._sig, out)


# text form

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<gen>x\s*(?P<idx>\d+))|(?P<op>[+-]))"
)


def parse_element(text: str, sig: Signature) -> Element:
    """Parse ``"1/2 x1 x2 - 3 x4 + 1"``-style text into an Element.

    Juxtaposed ``x i`` factors are multiplied left to right in ``sig``, so
    ``"x2 x1"`` becomes ``-x1 x2`` and ``"x1 x1"`` becomes ``sig[1]``.
    """
    pos = 0
    end = len(text.rstrip())
    if end == 0:
        raise ElementParseError("empty element", 0)
    total = Element.zero(sig)
    sign = 1
    expect_term = True
    have_op = False
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ElementParseError(f"unexpected character {text[bad]!r}", bad)
        if m.group("op"):
            if have_op:
                raise ElementParseError("repeated operator", m.start("op"))
            sign = -1 if m.group("op") == "-" else 1
            expect_term = True
            have_op = True
            pos = m.end()
            continue
        if not expect_term:
            raise ElementParseError("missing operator between terms", m.start())
        # a term: optional rational then factors
        coeff = Fraction(1)
        if m.group("num"):
            num = m.group("num").replace(" ", "")
            if "/" in num and int(num.split("/")[1]) == 0:
                raise ElementParseError("zero denominator", m.start("num"))
            coeff = Fraction(num)
            pos = m.end()
        term = Element.scalar(sig, sign * coeff)
        while pos < end:
            g = _TOKEN.match(text, pos)
            if not g or not g.group("gen"):
                break
            idx = int(g.group("idx"))
            if not 1 <= idx <= sig.n:
                raise ElementParseError(f"x{idx} out of range for n={sig.n}", g.start("gen"))
            term = term * Element.generator(sig, idx)
            pos = g.end()
        if pos < end:
            nxt = _TOKEN.match(text, pos)
            if nxt and nxt.group("num"):
                raise ElementParseError("coefficient must precede factors", nxt.start("num"))
        total = total + term
        sign = 1
        expect_term = False
        have_op = False
    if expect_term:
        raise ElementParseError("dangling operator", end)
    return total


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(f: Element) -> str:
    """Canonical text: ascending blades, terms in bitmask order, explicit coefficients."""
    if not f._terms:
        return "0"
    parts = []
    for k, mask in enumerate(sorted(f._terms)):
        c = f._terms[mask]
        blade = " ".join(f"x{i}" for i in _mask_indices(mask))
        if k == 0:
            body = _format_coeff(c)
        else:
            parts.append("-" if c < 0 else "+")
            body = _format_coeff(abs(c))
        parts.append(f"{body} {blade}" if blade else body)
    return " ".join(parts)
