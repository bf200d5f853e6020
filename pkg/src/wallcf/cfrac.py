"""S-fractions and J-fractions over exact rationals.

An S-fraction with coefficients ``alpha = (alpha_0, alpha_1, ...)`` is

    alpha_0 / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))

and a J-fraction with ``gamma = (gamma_0, ...)``, ``beta = (beta_1, ...)`` is

    1 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / ...)).

Both are handled as formal power series.  Coefficients beyond the stored
lists are treated as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    NotJFractionRepresentable,
    NotSFractionRepresentable,
    UncontractionBreakdown,
)
from .series import PowerSeries, format_rational, series_reciprocal, to_rational

__all__ = [
    "SFraction",
    "JFraction",
    "series_from_sfrac",
    "sfrac_from_series",
    "series_from_jfrac",
    "jfrac_from_series",
    "contract",
    "uncontract",
    "jfrac_shift",
]

_ZERO = Fraction(0)


def _standardize(alpha: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    # first zero at i >= 1 kills everything after it
    for i in range(1, len(alpha)):
        if alpha[i] == 0:
            return alpha[:i] + (_ZERO,) * (len(alpha) - i)
    return alpha


@dataclass(frozen=True, eq=False)
class SFraction:
    """Coefficients ``alpha_0 .. alpha_N`` in standard form.

    A zero ``alpha_i`` (``i >= 1``) truncates the fraction, so the
    constructor zeroes everything after it.  Equality ignores trailing zeros.
    """

    alpha: tuple[Fraction, ...]

    def __init__(self, alpha: Iterable):
        a = tuple(to_rational(x) for x in alpha)
        if not a:
            raise ValueError("an S-fraction needs at least alpha_0")
        object.__setattr__(self, "alpha", _standardize(a))

    @property
    def order(self) -> int:
        """Number of coefficients after alpha_0, i.e. the determined series order."""
        return len(self.alpha) - 1

    @property
    def terminates(self) -> bool:
        """True when the stored coefficients end the fraction (a zero was hit)."""
        return any(x == 0 for x in self.alpha[1:])

    def __getitem__(self, i):
        return self.alpha[i]

    def __len__(self) -> int:
        return len(self.alpha)

    def coefficient(self, i: int) -> Fraction:
        return self.alpha[i] if i < len(self.alpha) else _ZERO

    def _key(self):
        a = list(self.alpha)
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        return tuple(a)

    def __eq__(self, other):
        if not isinstance(other, SFraction):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "SFraction([" + ", ".join(format_rational(x) for x in self.alpha) + "])"


@dataclass(frozen=True)
class JFraction:
    """gamma_0..gamma_p and beta_1..beta_q with q in {p, p + 1}."""

    gamma: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __init__(self, gamma: Iterable, beta: Iterable):
        g = tuple(to_rational(x) for x in gamma)
        b = tuple(to_rational(x) for x in beta)
        if len(b) not in (len(g) - 1, len(g)):
            raise ValueError(
                f"need len(beta) in {{len(gamma) - 1, len(gamma)}}, got {len(g)} and {len(b)}"
            )
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "beta", b)

    @property
    def order(self) -> int:
        """Highest series order fixed by the stored coefficients.

        a_n involves gamma_k only for 2k + 1 <= n and beta_k only for 2k <= n.
        """
        return min(2 * len(self.gamma), 2 * len(self.beta) + 1)

    def gamma_at(self, i: int) -> Fraction:
        return self.gamma[i] if i < len(self.gamma) else _ZERO

    def beta_at(self, i: int) -> Fraction:
        """beta_i, 1-based."""
        return self.beta[i - 1] if 1 <= i <= len(self.beta) else _ZERO

    def __repr__(self):
        g = ", ".join(format_rational(x) for x in self.gamma)
        b = ", ".join(format_rational(x) for x in self.beta)
        return f"JFraction(gamma=[{g}], beta=[{b}])"


def series_from_sfrac(s: SFraction, N: int) -> PowerSeries:
    """Expand the S-fraction to a_0..a_N by bottom-up evaluation."""
    if N < 0:
        raise ValueError("N must be >= 0")
    h = PowerSeries.one(N)
    for i in range(N, 0, -1):
        a = s.coefficient(i)
        if a == 0:
            h = PowerSeries.one(N)
            continue
        # 1 - alpha_i t h(t)
        denom = [Fraction(1)] + [-a * h[k] for k in range(N)]
        h = series_reciprocal(PowerSeries(denom))
    return h.scale(s.alpha[0])


def sfrac_from_series(f: PowerSeries) -> SFraction:
    """Recover alpha_0..alpha_N from a_0..a_N.

    Peels one level at a time: with f normalized to f(0) = 1,
    h = (1 - 1/f)/t gives alpha_{k+1} = h(0) and the next level is h/alpha_{k+1}.

    The levels are kept as ratios f_k = u_k / u_{k-1} with u_{-1} = 1 and
    u_0 = f, so each step is u_{k+1} = (u_k - u_{k-1}) / (alpha_{k+1} t) and
    no reciprocal is needed.
    """
    if f[0] == 0:
        raise ValueError("sfrac_from_series needs f(0) != 0")
    alpha = [f[0]]
    N = f.order
    prev = [Fraction(1)] + [_ZERO] * N
    cur = [c / f[0] for c in f.coeffs]
    while len(alpha) <= N:
        d = [x - y for x, y in zip(cur, prev)]
        level = len(alpha)
        if d[1] == 0:
            if any(d):
                # residual h = (u_k - u_{k-1}) / (t u_k)
                h = PowerSeries(d[1:]) * series_reciprocal(PowerSeries(cur[:-1]))
                raise NotSFractionRepresentable(level, alpha, h.coeffs)
            alpha.extend([_ZERO] * (N + 1 - len(alpha)))
            break
        a = d[1]
        alpha.append(a)
        prev, cur = cur[:-1], [x / a for x in d[1:]]
    return SFraction(alpha)


def series_from_jfrac(j: JFraction, N: int) -> PowerSeries:
    """Expand the J-fraction to a_0..a_N."""
    if N < 0:
        raise ValueError("N must be >= 0")
    depth = N // 2 + 1
    h = PowerSeries.one(N)
    for i in range(depth, -1, -1):
        g = j.gamma_at(i)
        b = j.beta_at(i + 1)
        # 1 - gamma_i t - beta_{i+1} t^2 h(t)
        denom = [Fraction(0)] * (N + 1)
        denom[0] = Fraction(1)
        if N >= 1:
            denom[1] -= g
        if b:
            for k in range(N - 1):
                denom[k + 2] -= b * h[k]
        h = series_reciprocal(PowerSeries(denom))
    return h


def jfrac_from_series(f: PowerSeries) -> JFraction:
    """Recover gamma_0..gamma_p, beta_1..beta_q from a_0 = 1, a_1..a_N.

    p = (N - 1) // 2 and q = N // 2.  A level whose residual vanishes
    identically ends the fraction; the remaining coefficients are set to 0.
    """
    if f[0] != 1:
        raise ValueError("jfrac_from_series needs f(0) = 1; divide by a_0 first")
    N = f.order
    n_gamma, n_beta = (N - 1) // 2 + 1, N // 2
    gamma: list[Fraction] = []
    beta: list[Fraction] = []
    cur = f
    while True:
        if cur.order < 1:
            break
        inv = series_reciprocal(cur)
        # 1 - 1/f = gamma t + beta t^2 f_next
        r = [1 - inv[0]] + [-c for c in inv.coeffs[1:]]
        gamma.append(r[1])
        if cur.order < 2:
            break
        h = PowerSeries(r[2:])
        if h[0] == 0:
            if not h.is_zero():
                raise NotJFractionRepresentable(len(beta) + 1)
            break
        beta.append(h[0])
        cur = h.scale(1 / h[0])
    gamma.extend([_ZERO] * (n_gamma - len(gamma)))
    beta.extend([_ZERO] * (n_beta - len(beta)))
    return JFraction(gamma, beta)


def contract(s: SFraction) -> JFraction:
    """Even contraction: gamma_0 = alpha_1, gamma_n = alpha_2n + alpha_2n+1,
    beta_n = alpha_2n-1 alpha_2n.  Requires alpha_0 = 1."""
    if s.alpha[0] != 1:
        raise ValueError("contract expects alpha_0 = 1; factor the constant out first")
    M = s.order
    a = s.coefficient
    gamma = [a(1)] if M >= 1 else []
    gamma += [a(2 * n) + a(2 * n + 1) for n in range(1, (M - 1) // 2 + 1)]
    beta = [a(2 * n - 1) * a(2 * n) for n in range(1, M // 2 + 1)]
    return JFraction(gamma, beta)


def uncontract(j: JFraction) -> SFraction:
    """Solve the contraction relations for alpha' (with alpha'_0 = 1).

    alpha'_1 = gamma_0, alpha'_2n = beta_n / alpha'_2n-1,
    alpha'_2n+1 = gamma_n - alpha'_2n.  The first zero ends the fraction.
    """
    # interleaved data: gamma_0, beta_1, gamma_1, beta_2, ...
    M = len(j.gamma) + len(j.beta)
    out = [Fraction(1)]
    for m in range(1, M + 1):
        if m == 1:
            v = j.gamma[0]
        elif m % 2 == 0:
            n = m // 2
            prev = out[m - 1]
            b = j.beta[n - 1]
            if prev == 0:
                if b != 0:
                    raise UncontractionBreakdown(n)
                v = _ZERO
            else:
                v = b / prev
        else:
            n = m // 2
            v = j.gamma[n] - out[m - 1]
        out.append(v)
        if v == 0:
            if m % 2 == 1 and m < M and j.beta[(m + 1) // 2 - 1] != 0:
                raise UncontractionBreakdown((m + 1) // 2)
            out.extend([_ZERO] * (M - m))
            break
    return SFraction(out)


def jfrac_shift(j: JFraction, xi) -> JFraction:
    """gamma_i -> gamma_i + xi; the J-fraction of the xi-binomial transform.

    Only stored gammas move, so the result matches the transformed series up
    to ``j.order``.
    """
    xi = to_rational(xi)
    return JFraction([g + xi for g in j.gamma], j.beta)
