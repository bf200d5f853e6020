"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (shown even without
``-s``).  Running this file directly prints the same lines without pytest.
All checks are exact rational equalities.
"""

import random
from fractions import Fraction as F

import pytest

from wallcf import (
    JFraction,
    MomentClass,
    NotSFractionRepresentable,
    PowerSeries,
    SFraction,
    Status,
    WallParams,
    aerate,
    alpha_from_g,
    binomial_transform,
    classify,
    contract,
    extract_wall,
    extract_wall_via_proof_path,
    jfrac_shift,
    moments,
    series_from_jfrac,
    series_from_sfrac,
    sfrac_from_series,
    sqrt_aerate_measure,
    translate_measure,
)
from wallcf.wall import routes_agree
from wallcf.oracle import (
    catalan_audit,
    completely_monotone_check,
    dyck_path_series,
    hankel_report,
    random_measure,
    random_rational,
    random_square_measure,
)

SEED = 20240611

# rejection examples reused by the route-agreement criterion
REJECTIONS = [
    PowerSeries([1, 1, 2, 6, 24, 120, 720, 5040, 40320]),
    PowerSeries([1, 0, 1, 0, 1]),
    PowerSeries([1, 2, 4, 8]),
    PowerSeries([1, 0, -1]),
    PowerSeries([1, 1, 2]),
    PowerSeries([1, F(1, 2), F(1, 3), F(1, 2)]),
]


def _hausdorff_measures():
    rng = random.Random(SEED + 4)
    return [random_measure(rng, 0, 1, max_atoms=8, max_den=12) for _ in range(200)]


def _random_g_vectors():
    rng = random.Random(SEED + 5)
    out = []
    for _ in range(200):
        g = []
        while len(g) < 12:
            q = rng.randint(2, 16)
            g.append(F(rng.randint(1, q - 1), q))
        out.append(g)
    return out


def criterion_1():
    a = series_from_sfrac(SFraction([1] * 10), 9)
    assert a.coeffs == (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862)


def criterion_2():
    rng = random.Random(SEED + 2)
    for _ in range(200):
        N = rng.randint(1, 16)
        s = SFraction([1] + [random_rational(rng, 0, 2) for _ in range(N)])
        assert series_from_sfrac(s, N) == series_from_jfrac(contract(s), N), s


def criterion_3():
    rng = random.Random(SEED + 3)
    for _ in range(200):
        N = rng.randint(1, 16)
        p = N // 2 + 1
        j = JFraction(
            [random_rational(rng, -2, 2) for _ in range(p)],
            [random_rational(rng, -2, 2) for _ in range(p)],
        )
        assert j.order >= N
        xi = random_rational(rng, -3, 3)
        lhs = binomial_transform(series_from_jfrac(j, N), xi)
        assert lhs == series_from_jfrac(jfrac_shift(j, xi), N), (j, xi)


def criterion_4():
    for mu in _hausdorff_measures():
        a = moments(mu, 16)
        v = extract_wall(a)
        assert v.status is Status.HAUSDORFF_CONSISTENT, (mu, v)
        assert series_from_sfrac(alpha_from_g(v.params), 16) == a, mu


def criterion_5():
    for g in _random_g_vectors():
        a = series_from_sfrac(alpha_from_g(WallParams(1, g)), 12)
        v = extract_wall(a)
        assert v.status is Status.HAUSDORFF_CONSISTENT
        assert v.params == WallParams(1, g)
        assert completely_monotone_check(a) is None, g


def criterion_6():
    instances = [moments(mu, 16) for mu in _hausdorff_measures()]
    instances += [series_from_sfrac(alpha_from_g(WallParams(1, g)), 12) for g in _random_g_vectors()]
    instances += REJECTIONS
    for a in instances:
        va, vb = extract_wall(a), extract_wall_via_proof_path(a)
        assert routes_agree(a), (a, va, vb)
    # the rejections really are rejections on both routes
    for a in REJECTIONS:
        assert not extract_wall_via_proof_path(a).consistent


def criterion_7():
    a = PowerSeries([F(1, n + 1) for n in range(12)])
    v = extract_wall(a)
    expected = (F(1, 2), F(1, 3), F(1, 2), F(2, 5), F(1, 2), F(3, 7), F(1, 2), F(4, 9), F(1, 2), F(5, 11))
    assert v.status is Status.HAUSDORFF_CONSISTENT
    assert v.params.g[:10] == expected
    # closed form g_{2k-1} = 1/2, g_{2k} = k/(2k+1) on every determined g
    for n, x in enumerate(v.params.g, 1):
        assert x == (F(1, 2) if n % 2 else F(n // 2, n + 1))


def criterion_8():
    a = PowerSeries([1, 1, 2, 6, 24, 120, 720, 5040, 40320])
    alpha = sfrac_from_series(a)
    assert alpha.alpha == (1, 1, 1, 2, 2, 3, 3, 4, 4)
    assert all(x >= 0 for x in alpha.alpha)
    c = classify(a)
    assert c.moment_class is MomentClass.STIELTJES_ONLY
    assert c.verdict.status is Status.DEGENERATE_DIVISION
    assert c.verdict.index == 2


def criterion_9():
    a = PowerSeries([1, 0, 1, 0, 1])
    c = classify(a)
    assert c.moment_class is MomentClass.HAMBURGER_ONLY
    rep = hankel_report(a)
    assert all(d >= 0 for d in rep.dets_H0)
    with pytest.raises(NotSFractionRepresentable) as exc:
        sfrac_from_series(a)
    assert exc.value.level == 1


def criterion_10():
    rng = random.Random(SEED + 10)
    for _ in range(200):
        alpha = [1] + [random_rational(rng, 0, 1) for _ in range(14)]
        assert catalan_audit(alpha, 14) is None, alpha
    for _ in range(100):
        lo = [random_rational(rng, 0, 1) for _ in range(14)]
        hi = [x + random_rational(rng, 0, 1 - x) for x in lo]
        a = series_from_sfrac(SFraction([1] + lo), 14)
        b = series_from_sfrac(SFraction([1] + hi), 14)
        assert all(a[n] <= b[n] for n in range(15)), (lo, hi)
        # same numbers from the lattice-path expansion
        assert dyck_path_series([1] + lo, 14) == a


def _moment_bound_holds(mu, N):
    A, B = mu.mass, mu.support_bound
    a = moments(mu, N)
    return all(abs(a[n]) <= A * B**n for n in range(N + 1))


def criterion_11():
    rng = random.Random(SEED + 11)
    for _ in range(100):
        mu = random_square_measure(rng)
        a = moments(mu, 10)
        assert moments(sqrt_aerate_measure(mu), 21) == aerate(a), mu
        xi = random_rational(rng, -2, 2)
        assert moments(translate_measure(mu, xi), 20) == binomial_transform(moments(mu, 20), xi)
        for nu in (mu, sqrt_aerate_measure(mu), translate_measure(mu, xi)):
            assert _moment_bound_holds(nu, 20), nu


CRITERIA = [
    (1, "Catalan reproduction", criterion_1),
    (2, "contraction identity", criterion_2),
    (3, "binomial-shift identity", criterion_3),
    (4, "Wall forward on random [0,1] measures", criterion_4),
    (5, "Wall converse from random g", criterion_5),
    (6, "extraction routes agree", criterion_6),
    (7, "uniform-measure g pattern", criterion_7),
    (8, "factorial is Stieltjes, not Hausdorff", criterion_8),
    (9, "two-point symmetric measure is Hamburger only", criterion_9),
    (10, "Catalan bound and monotonicity", criterion_10),
    (11, "measure correspondence and growth bound", criterion_11),
]


def _report(num, title, fn):
    try:
        fn()
    except BaseException:
        print(f"criterion {num}: FAIL  {title}")
        raise
    print(f"criterion {num}: PASS  {title}")


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    with capsys.disabled():
        print()
        _report(num, title, fn)


if __name__ == "__main__":
    failed = 0
    for num, title, fn in CRITERIA:
        try:
            _report(num, title, fn)
        except AssertionError:
            failed += 1
    raise SystemExit(1 if failed else 0)
