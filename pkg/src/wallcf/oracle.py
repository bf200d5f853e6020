"""Brute-force checks that share no code with :mod:`wallcf.cfrac` or :mod:`wallcf.wall`.

Hankel determinants, the finite-difference (complete monotonicity) test,
lattice-path expansion of S-fractions, the Catalan bound audit, and random
ground-truth generators built from discrete measures.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AlphaOutOfRange
from .series import DiscreteMeasure, PowerSeries, to_rational

__all__ = [
    "HankelReport",
    "bareiss_det",
    "hankel_report",
    "completely_monotone_check",
    "catalan_numbers",
    "dyck_path_series",
    "motzkin_path_series",
    "catalan_audit",
    "random_rational",
    "random_measure",
    "random_square_measure",
]


def bareiss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free elimination.

    The rational matrix is scaled to an integer one by the lcm of its
    denominators, eliminated with Bareiss' integer-preserving update, and
    rescaled.
    """
    n = len(rows)
    if n == 0:
        return Fraction(1)
    L = 1
    for r in rows:
        for x in r:
            L = math.lcm(L, Fraction(x).denominator)
    m = [[int(Fraction(x) * L) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], L**n)


@dataclass(frozen=True)
class HankelReport:
    """Leading Hankel determinants of a finite prefix.

    dets_H0[k] = det(a_{i+j})_{0<=i,j<=k}, dets_H1[k] = det(a_{i+j+1})_{0<=i,j<=k}.
    first_negative is ("H0", k) or ("H1", k) for the first negative entry,
    H0 scanned before H1.
    """

    dets_H0: tuple[Fraction, ...]
    dets_H1: tuple[Fraction, ...]
    first_negative: tuple[str, int] | None

    @property
    def all_nonnegative(self) -> bool:
        return self.first_negative is None

    @property
    def h0_nonnegative(self) -> bool:
        """Every leading minor of (a_{i+j}) is >= 0 (the Hamburger-side test)."""
        return all(d >= 0 for d in self.dets_H0)

    @property
    def strictly_positive(self) -> bool:
        return all(d > 0 for d in self.dets_H0 + self.dets_H1)


def hankel_report(a: PowerSeries) -> HankelReport:
    N = a.order
    h0 = tuple(
        bareiss_det([[a[i + j] for j in range(k + 1)] for i in range(k + 1)])
        for k in range(N // 2 + 1)
    )
    h1 = tuple(
        bareiss_det([[a[i + j + 1] for j in range(k + 1)] for i in range(k + 1)])
        for k in range((N - 1) // 2 + 1)
    )
    first = None
    for name, dets in (("H0", h0), ("H1", h1)):
        k = next((k for k, d in enumerate(dets) if d < 0), None)
        if k is not None:
            first = (name, k)
            break
    return HankelReport(h0, h1, first)


def completely_monotone_check(a: PowerSeries) -> tuple[int, int] | None:
    """First (k, n) with (-1)^k Delta^k a_n < 0, scanning k then n; None if none."""
    row = list(a.coeffs)
    k = 0
    while row:
        sign = -1 if k % 2 else 1
        for n, d in enumerate(row):
            if sign * d < 0:
                return k, n
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        k += 1
    return None


def catalan_numbers(N: int) -> list[int]:
    """C_0..C_N via C_{n+1} = sum_k C_k C_{n-k}."""
    c = [1]
    for n in range(N):
        c.append(sum(c[k] * c[n - k] for k in range(n + 1)))
    return c


def dyck_path_series(alpha: Sequence, N: int) -> PowerSeries:
    """Expand an S-fraction by summing weighted Dyck paths.

    a_n = alpha_0 * sum over Dyck paths of length 2n of the product of
    alpha_h over the down-steps from height h to h - 1.  Coefficients
    beyond ``alpha`` count as zero; unlike the S-fraction type, no
    standardization is applied.
    """
    al = [to_rational(x) for x in alpha]

    def coef(h):
        return al[h] if h < len(al) else Fraction(0)

    # weight[h] = weighted count of paths of the current length ending at height h
    weight = {0: Fraction(1)}
    out = [coef(0)]
    for step in range(1, 2 * N + 1):
        nxt: dict[int, Fraction] = {}
        for h, w in weight.items():
            if not w:
                continue
            if h + 1 <= 2 * N - step:
                nxt[h + 1] = nxt.get(h + 1, Fraction(0)) + w
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, Fraction(0)) + w * coef(h)
        weight = nxt
        if step % 2 == 0:
            out.append(coef(0) * weight.get(0, Fraction(0)))
    return PowerSeries(out)


def motzkin_path_series(gamma: Sequence, beta: Sequence, N: int) -> PowerSeries:
    """Expand a J-fraction by summing weighted Motzkin paths.

    Level steps at height h weigh gamma_h, down-steps from h to h - 1 weigh
    beta_h (``beta[0]`` is beta_1), up-steps weigh 1.
    """
    ga = [to_rational(x) for x in gamma]
    be = [to_rational(x) for x in beta]

    def g(h):
        return ga[h] if h < len(ga) else Fraction(0)

    def b(h):
        return be[h - 1] if h - 1 < len(be) else Fraction(0)

    weight = {0: Fraction(1)}
    out = [Fraction(1)]
    for step in range(1, N + 1):
        nxt: dict[int, Fraction] = {}
        for h, w in weight.items():
            if not w:
                continue
            if h + 1 <= N - step:
                nxt[h + 1] = nxt.get(h + 1, Fraction(0)) + w
            if h <= N - step:
                nxt[h] = nxt.get(h, Fraction(0)) + w * g(h)
            if h > 0:
                nxt[h - 1] = nxt.get(h - 1, Fraction(0)) + w * b(h)
        weight = nxt
        out.append(weight.get(0, Fraction(0)))
    return PowerSeries(out)


def catalan_audit(alpha: Sequence, N: int) -> int | None:
    """First n <= N with a_n outside [0, C_n], or None.

    ``alpha`` is the list alpha_0, alpha_1, ...; alpha_0 is taken as 1 for the
    bound and every alpha_i (i >= 1) must lie in [0, 1].
    """
    al = [to_rational(x) for x in alpha]
    for i, x in enumerate(al[1:], 1):
        if not 0 <= x <= 1:
            raise AlphaOutOfRange(i, x)
    a = dyck_path_series([Fraction(1)] + al[1:], N)
    cat = catalan_numbers(N)
    for n in range(N + 1):
        if not 0 <= a[n] <= cat[n]:
            return n
    return None


def random_rational(rng: random.Random, lo=0, hi=1, max_den: int = 12) -> Fraction:
    """Uniform-ish rational in [lo, hi] with denominator at most ``max_den``."""
    lo, hi = to_rational(lo), to_rational(hi)
    q = rng.randint(1, max_den)
    p_lo = math.ceil(lo * q)
    p_hi = math.floor(hi * q)
    return Fraction(rng.randint(p_lo, p_hi), q)


def random_measure(
    rng: random.Random,
    lo=0,
    hi=1,
    max_atoms: int = 6,
    max_den: int = 12,
) -> DiscreteMeasure:
    """Random atoms in [lo, hi] with positive rational weights."""
    k = rng.randint(1, max_atoms)
    locs: set[Fraction] = set()
    while len(locs) < k:
        locs.add(random_rational(rng, lo, hi, max_den))
    return DiscreteMeasure(
        (x, Fraction(rng.randint(1, max_den), rng.randint(1, max_den))) for x in sorted(locs)
    )


def random_square_measure(
    rng: random.Random, hi: int = 2, max_atoms: int = 5, max_den: int = 8
) -> DiscreteMeasure:
    """Random measure whose atoms are squares of rationals in [0, hi]."""
    k = rng.randint(1, max_atoms)
    roots: set[Fraction] = set()
    while len(roots) < k:
        roots.add(random_rational(rng, 0, hi, max_den))
    return DiscreteMeasure(
        (q * q, Fraction(rng.randint(1, max_den), rng.randint(1, max_den))) for q in roots
    )
