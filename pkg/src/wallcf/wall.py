"""Wall g-parameters and Hausdorff-consistency verdicts for finite prefixes.

A sequence is a Hausdorff moment sequence exactly when its S-fraction has
the form c / (1 - g_1 t / (1 - (1 - g_1) g_2 t / (1 - (1 - g_2) g_3 t / ...)))
with c >= 0 and every g_i in [0, 1].  For a finite prefix we can only test
the g's that the prefix determines, so acceptance here means "consistent up
to order N" while a rejection is definitive.

Two independent routes compute the g's:

* :func:`extract_wall` expands the S-fraction and runs
  g_1 = alpha_1, g_n = alpha_n / (1 - g_{n-1});
* :func:`extract_wall_via_proof_path` aerates the sequence, applies the
  1-binomial transform, expands *that* as an S-fraction alpha' and reads
  g_n = alpha'_{2n}, checking alpha'_1 = 1 and alpha'_{2k} + alpha'_{2k+1} = 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import oracle
from .cfrac import SFraction, sfrac_from_series
from .errors import GOutOfRange, NotSFractionRepresentable, PatternViolation
from .series import PowerSeries, aerate, binomial_transform, format_rational, to_rational

__all__ = [
    "WallParams",
    "Status",
    "Verdict",
    "Classification",
    "MomentClass",
    "g_from_alpha",
    "alpha_from_g",
    "extract_wall",
    "extract_wall_via_proof_path",
    "routes_agree",
    "classify",
]


@dataclass(frozen=True)
class WallParams:
    c: Fraction
    g: tuple[Fraction, ...]

    def __init__(self, c, g: Iterable):
        c = to_rational(c)
        gs = tuple(to_rational(x) for x in g)
        if c < 0:
            raise ValueError(f"c = {c} must be >= 0")
        for i, x in enumerate(gs, 1):
            if not 0 <= x <= 1:
                raise GOutOfRange(i, x)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "g", gs)

    def __repr__(self):
        gs = ", ".join(format_rational(x) for x in self.g)
        return f"WallParams(c={format_rational(self.c)}, g=[{gs}])"


class Status(str, enum.Enum):
    HAUSDORFF_CONSISTENT = "HausdorffConsistent"
    G_OUT_OF_RANGE = "RejectedGOutOfRange"
    DEGENERATE_DIVISION = "RejectedDegenerateDivision"
    NOT_S_FRACTION = "NotSFractionRepresentable"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a g-extraction.

    ``index`` is the g index (or S-fraction level) of the first violation and
    ``value`` the offending g for out-of-range rejections.  ``attempted_g``
    always holds every g that could be computed, in or out of range.
    ``alpha`` is the S-fraction the route worked from (alpha' on the proof
    route), possibly partial when the expansion broke down.
    """

    status: Status
    c: Fraction
    attempted_g: tuple[Fraction, ...] = ()
    params: WallParams | None = None
    index: int | None = None
    value: Fraction | None = None
    alpha: tuple[Fraction, ...] = field(default=(), compare=False)

    @property
    def consistent(self) -> bool:
        return self.status is Status.HAUSDORFF_CONSISTENT


def _g_recurrence(alphas: Sequence[Fraction]) -> tuple[list[Fraction], int | None]:
    """g_n from alpha_1..alpha_M; stops at the first impossible division."""
    g: list[Fraction] = []
    prev = Fraction(0)
    for n, a in enumerate(alphas, 1):
        d = 1 - prev
        if d == 0:
            if a != 0:
                return g, n
            # (1 - g_{n-1}) g_n = 0 for any g_n; 0 is the canonical pick
            gn = Fraction(0)
        else:
            gn = a / d
        g.append(gn)
        prev = gn
    return g, None


def _assemble(
    c: Fraction,
    g: Sequence[Fraction],
    stop: tuple[Status, int] | None,
    alpha: Sequence[Fraction],
) -> Verdict:
    # the earliest violation wins; an out-of-range g always precedes the stop
    g = tuple(g)
    for i, x in enumerate(g, 1):
        if not 0 <= x <= 1:
            return Verdict(Status.G_OUT_OF_RANGE, c, g, index=i, value=x, alpha=tuple(alpha))
    if stop is not None:
        return Verdict(stop[0], c, g, index=stop[1], alpha=tuple(alpha))
    return Verdict(
        Status.HAUSDORFF_CONSISTENT, c, g, params=WallParams(c, g), alpha=tuple(alpha)
    )


def g_from_alpha(alpha: SFraction) -> Verdict:
    """g-parameters from standard S-fraction coefficients; c = alpha_0.

    Never raises for bad input: violations are reported in the verdict.
    """
    c = alpha.alpha[0]
    g, degenerate = _g_recurrence(alpha.alpha[1:])
    stop = (Status.DEGENERATE_DIVISION, degenerate) if degenerate else None
    return _assemble(c, g, stop, alpha.alpha)


def alpha_from_g(w: WallParams) -> SFraction:
    """alpha_0 = c, alpha_1 = g_1, alpha_n = (1 - g_{n-1}) g_n."""
    alpha = [w.c]
    prev = Fraction(0)
    for x in w.g:
        alpha.append((1 - prev) * x)
        prev = x
    return SFraction(alpha)


def _check_positive_start(a: PowerSeries) -> None:
    if a[0] <= 0:
        raise ValueError(f"a_0 = {a[0]} must be positive")


def extract_wall(a: PowerSeries) -> Verdict:
    """Wall g-parameters of a_0..a_N via the S-fraction of ``a``."""
    _check_positive_start(a)
    try:
        alpha = sfrac_from_series(a)
    except NotSFractionRepresentable as exc:
        g, degenerate = _g_recurrence(exc.partial[1:])
        if degenerate:
            stop = (Status.DEGENERATE_DIVISION, degenerate)
        else:
            stop = (Status.NOT_S_FRACTION, exc.level)
        return _assemble(a[0], g, stop, exc.partial)
    return g_from_alpha(alpha)


def _check_pattern(ap: Sequence[Fraction]) -> None:
    """alpha'_1 = 1 and alpha'_{2k} + alpha'_{2k+1} = 1 wherever determined.

    Pair k is determined while alpha'_1..alpha'_{2k} are all nonzero; after
    the first zero the standard convention fills in zeros instead.
    """
    if len(ap) > 1 and ap[1] != 1:
        raise PatternViolation(0, ap[1])
    k = 1
    while 2 * k + 1 < len(ap):
        if any(x == 0 for x in ap[1 : 2 * k + 1]):
            break
        s = ap[2 * k] + ap[2 * k + 1]
        if s != 1:
            raise PatternViolation(k, s)
        k += 1


def extract_wall_via_proof_path(a: PowerSeries) -> Verdict:
    """Wall g-parameters via aeration, the 1-binomial transform and alpha'.

    With N = a.order, the transformed sequence has order 2N + 1 and yields
    alpha'_1..alpha'_{2N+1}, hence g_1..g_N.  A breakdown of the alpha'
    expansion at odd level 2n - 1 means 1 - g_{n-1} = 0; the residual tells
    whether alpha_n != 0 (degenerate division at n) or alpha_n = 0 with a
    nonzero tail.  At even level 2n it means the original sequence has no
    S-fraction past level n.

    Raises PatternViolation if the alpha' coefficients do not satisfy the
    contraction pattern.
    """
    _check_positive_start(a)
    c = a[0]
    transformed = binomial_transform(aerate(a.scale(1 / c)), 1)
    stop = None
    try:
        ap = sfrac_from_series(transformed).alpha
    except NotSFractionRepresentable as exc:
        ap = exc.partial
        n = (exc.level + 1) // 2
        # at odd level 2n - 1 the residual is beta_n t + O(t^2) with beta_n = alpha_n:
        # nonzero means a blocked division, zero means alpha_n = 0 over a nonzero tail
        if exc.level % 2 and exc.residual[1:2] != (0,):
            stop = (Status.DEGENERATE_DIVISION, n)
        else:
            stop = (Status.NOT_S_FRACTION, n)
    _check_pattern(ap)
    g = [ap[2 * n] for n in range(1, (len(ap) - 1) // 2 + 1)]
    return _assemble(c, g, stop, ap)


def routes_agree(a: PowerSeries) -> bool:
    """Both extraction routes give the same status, index and common-prefix g."""
    va, vb = extract_wall(a), extract_wall_via_proof_path(a)
    m = min(len(va.attempted_g), len(vb.attempted_g))
    return (
        va.status == vb.status
        and va.index == vb.index
        and va.value == vb.value
        and va.attempted_g[:m] == vb.attempted_g[:m]
    )


class MomentClass(str, enum.Enum):
    HAUSDORFF = "HausdorffConsistent"
    STIELTJES_ONLY = "StieltjesConsistentOnly"
    HAMBURGER_ONLY = "HamburgerConsistentOnly"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class Classification:
    """Strongest class the prefix is consistent with, plus why stronger ones fail.

    ``stieltjes_failure`` is either the NotSFractionRepresentable level (as
    ``("level", L)``) or the first negative alpha (``("negative_alpha", i)``).
    """

    moment_class: MomentClass
    verdict: Verdict
    alpha: SFraction | None
    stieltjes_failure: tuple[str, int] | None
    hankel: "oracle.HankelReport"


def classify(a: PowerSeries) -> Classification:
    """Hausdorff via Wall, Stieltjes via alpha >= 0, Hamburger via Hankel minors."""
    _check_positive_start(a)
    verdict = extract_wall(a)
    hankel = oracle.hankel_report(a)
    alpha = None
    failure = None
    try:
        alpha = sfrac_from_series(a)
    except NotSFractionRepresentable as exc:
        failure = ("level", exc.level)
    else:
        neg = next((i for i, x in enumerate(alpha.alpha) if x < 0), None)
        if neg is not None:
            failure = ("negative_alpha", neg)

    if verdict.consistent:
        cls = MomentClass.HAUSDORFF
    elif failure is None:
        cls = MomentClass.STIELTJES_ONLY
    elif hankel.h0_nonnegative:
        cls = MomentClass.HAMBURGER_ONLY
    else:
        cls = MomentClass.INCONSISTENT
    return Classification(cls, verdict, alpha, failure, hankel)
