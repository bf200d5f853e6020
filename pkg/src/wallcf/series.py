"""Exact truncated power series, finite discrete measures and sequence transforms.

Every scalar is a :class:`fractions.Fraction`.  A :class:`PowerSeries` of
order ``N`` stores ``a_0 .. a_N``; it doubles as a finite moment sequence.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from .errors import NonSquareAtom, ReciprocalOfZeroConstantTerm

__all__ = [
    "PowerSeries",
    "DiscreteMeasure",
    "to_rational",
    "format_rational",
    "rational_sqrt",
    "series_add",
    "series_sub",
    "series_mul",
    "series_reciprocal",
    "moments",
    "aerate",
    "even_subsequence",
    "binomial_transform",
    "translate_measure",
    "sqrt_aerate_measure",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction without ever going through a float.

    Accepts ints, Fractions (any ``numbers.Rational``) and strings of the
    form ``"p"`` or ``"p/q"``.  Floats and decimal strings are rejected.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x)
        if m is None:
            raise ValueError(f"not an exact rational literal: {x!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {x!r}")
        return Fraction(int(m.group(1)), den)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Return the nonnegative rational square root of ``x``, or None."""
    if x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class PowerSeries:
    """a_0 + a_1 t + ... + a_N t^N, known only up to t^N."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(to_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a power series needs at least the constant term")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"PowerSeries([{body}])"

    def truncate(self, order: int) -> "PowerSeries":
        if order < 0:
            raise ValueError("order must be >= 0")
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def scale(self, c) -> "PowerSeries":
        c = to_rational(c)
        return PowerSeries(c * a for a in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)


def _common(f: PowerSeries, g: PowerSeries) -> int:
    return min(f.order, g.order)


def series_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = _common(f, g)
    return PowerSeries(f[i] + g[i] for i in range(n + 1))


def series_sub(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = _common(f, g)
    return PowerSeries(f[i] - g[i] for i in range(n + 1))


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    n = _common(f, g)
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if f[i] and g[k - i]:
                s += f[i] * g[k - i]
        out.append(s)
    return PowerSeries(out)


def series_reciprocal(f: PowerSeries) -> PowerSeries:
    """1/f to the order of ``f``; requires ``f(0) != 0``."""
    if f[0] == 0:
        raise ReciprocalOfZeroConstantTerm("reciprocal of a series with zero constant term")
    inv0 = 1 / f[0]
    out = [inv0]
    for k in range(1, f.order + 1):
        s = sum((f[i] * out[k - i] for i in range(1, k + 1) if f[i]), Fraction(0))
        out.append(-s * inv0)
    return PowerSeries(out)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely many atoms ``(location, weight)`` with positive weights."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, atoms: Iterable[Sequence]):
        parsed = tuple((to_rational(x), to_rational(w)) for x, w in atoms)
        locs = [x for x, _ in parsed]
        if len(set(locs)) != len(locs):
            raise ValueError("atom locations must be distinct")
        for x, w in parsed:
            if w <= 0:
                raise ValueError(f"atom at {x} has non-positive weight {w}")
        object.__setattr__(self, "atoms", tuple(sorted(parsed)))

    @classmethod
    def point(cls, x, weight=1) -> "DiscreteMeasure":
        return cls([(x, weight)])

    @property
    def mass(self) -> Fraction:
        return sum((w for _, w in self.atoms), Fraction(0))

    @property
    def support_bound(self) -> Fraction:
        """Smallest B with every atom in [-B, B]."""
        return max((abs(x) for x, _ in self.atoms), default=Fraction(0))

    def __len__(self) -> int:
        return len(self.atoms)


def moments(mu: DiscreteMeasure, N: int) -> PowerSeries:
    """(a_0, ..., a_N) with a_n = sum_i w_i x_i^n."""
    if N < 0:
        raise ValueError("N must be >= 0")
    out = [Fraction(0)] * (N + 1)
    for x, w in mu.atoms:
        p = w
        for n in range(N + 1):
            out[n] += p
            p *= x
    return PowerSeries(out)


def aerate(a: PowerSeries) -> PowerSeries:
    """(a_0, 0, a_1, 0, ..., a_N, 0); order 2N+1."""
    out = []
    for c in a:
        out.extend((c, Fraction(0)))
    return PowerSeries(out)


def even_subsequence(a: PowerSeries) -> PowerSeries:
    return PowerSeries(a.coeffs[::2])


def _pascal_rows(n: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, len(prev))] + [1])
    return rows


def binomial_transform(a: PowerSeries, xi) -> PowerSeries:
    """b_n = sum_k C(n, k) a_k xi^(n-k), same order as ``a``."""
    xi = to_rational(xi)
    N = a.order
    rows = _pascal_rows(N)
    powers = [Fraction(1)]
    for _ in range(N):
        powers.append(powers[-1] * xi)
    out = []
    for n in range(N + 1):
        row = rows[n]
        out.append(sum((row[k] * a[k] * powers[n - k] for k in range(n + 1)), Fraction(0)))
    return PowerSeries(out)


def translate_measure(mu: DiscreteMeasure, xi) -> DiscreteMeasure:
    xi = to_rational(xi)
    return DiscreteMeasure((x + xi, w) for x, w in mu.atoms)


def sqrt_aerate_measure(mu: DiscreteMeasure) -> DiscreteMeasure:
    """Symmetrized image of ``mu`` under x -> +-sqrt(x).

    Each atom (q^2, w) becomes (-q, w/2) and (q, w/2); an atom at 0 stays put.
    """
    atoms = []
    for x, w in mu.atoms:
        q = rational_sqrt(x)
        if q is None:
            raise NonSquareAtom(x)
        if q == 0:
            atoms.append((q, w))
        else:
            atoms.extend(((-q, w / 2), (q, w / 2)))
    return DiscreteMeasure(atoms)
