"""Cross-validation suites: every identity the library promises, run over
configurable parameter grids.  Each check compares two or more
independently computed exact values and records the outcome; the CLI
`verify` command and the acceptance tests both drive these functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import absdiff, bijections, fibwords, kary, oracle, partitions
from .algebra import (
    QPoly,
    SquareMatrix,
    alt_cheb_sum,
    alt_cheb_sum_closed,
    chebyshev_u,
    det_exact,
)


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {
            "suite": self.suite,
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class _Recorder:
    suite: str
    checks: list = field(default_factory=list)

    def record(self, name, params, passed, detail=""):
        self.checks.append(Check(self.suite, name, dict(params), bool(passed), detail))

    def expect_equal(self, name, params, got, want):
        ok = got == want
        self.record(name, params, ok, "" if ok else f"got {got!r}, want {want!r}")


def _rise_pairs(kmax, smax):
    return [(k, s) for s in range(1, smax + 1) for k in range(s + 1, kmax + 1)]


def suite_kary(kmax=6, smax=4, nmax=8, series_order=25) -> list[Check]:
    rec = _Recorder("kary")
    for k, s in _rise_pairs(kmax, smax):
        params = kary.KSParams(k, s)
        table = kary.a_table(params, nmax).totals
        alt = kary.a_rec_alt(params, nmax)
        long_series = kary.gf_A(params).series(nmax)
        reduced_series = kary.gf_A_reduced(params).series(nmax)
        for n in range(nmax + 1):
            want = oracle.distribution_mu(k, s, n)
            agree = table[n] == alt[n] == long_series[n] == reduced_series[n] == want
            rec.record(
                "five-way distribution agreement",
                {"k": k, "s": s, "n": n},
                agree,
                "" if agree else f"table={table[n]!r} oracle={want!r}",
            )
        rec.expect_equal(
            "long and reduced closed forms are series-identical",
            {"k": k, "s": s, "order": series_order},
            kary.gf_A(params).series(series_order),
            kary.gf_A_reduced(params).series(series_order),
        )
        for n in range(1, nmax + 1):
            rec.expect_equal(
                "total-count formula equals summed statistic",
                {"k": k, "s": s, "n": n},
                kary.total_occurrences(params, n),
                oracle.total_mu_oracle(k, s, n),
            )
    # alphabets not larger than the rise: distribution collapses to k^n
    for s in range(1, smax + 1):
        for k in range(1, s + 1):
            params = kary.KSParams(k, s)
            rec.expect_equal(
                "no-rise-possible alphabets give the geometric series",
                {"k": k, "s": s},
                kary.gf_A(params).series(8),
                [QPoly((k**n,)) for n in range(9)],
            )
    return rec.checks


def suite_gap(kmax=4, rmax=3, nmax=8, smax=3) -> list[Check]:
    rec = _Recorder("gap")
    for s in range(1, smax + 1):
        for k in range(2, kmax + 1):
            params = kary.KSParams(k, s)
            for r in range(1, rmax + 1):
                for n in range(nmax + 1):
                    rec.expect_equal(
                        "gap statistic factors through adjacent case",
                        {"k": k, "s": s, "r": r, "n": n},
                        kary.gap_distribution(params, r, n),
                        oracle.distribution_gap(k, s, r, n),
                    )
    return rec.checks


def suite_fibwords(nmax_oracle=9, nmax_series=12, nmax_totals=15, points=20, seed=20260810):
    rec = _Recorder("fibwords")
    dp = fibwords.j_dist_dp(max(nmax_oracle, nmax_series))
    for n in range(1, nmax_oracle + 1):
        rec.expect_equal(
            "level/ascent DP equals enumeration",
            {"n": n},
            dp[n],
            oracle.joint_lev_asc(n),
        )
    fib = fibwords.fib_list(2 * nmax_totals + 2)
    for n in range(1, nmax_series + 1):
        rec.expect_equal(
            "words are counted by even-index Fibonacci numbers",
            {"n": n},
            dp[n](1, 1),
            fib[2 * n + 2],
        )
    rng = random.Random(seed)
    for _ in range(points):
        p = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        series = fibwords.gf_f(p, q).series(nmax_series)
        rec.expect_equal(
            "closed form matches DP at a rational point",
            {"p": str(p), "q": str(q)},
            series,
            [dp[n](p, q) for n in range(nmax_series + 1)],
        )
        if q != 0:
            rec.expect_equal(
                "descent form equals its substitution construction",
                {"p": str(p), "q": str(q)},
                fibwords.gf_descent(p, q).series(nmax_series),
                fibwords.gf_descent_substituted(p, q).series(nmax_series),
            )
    for n in range(1, nmax_oracle + 1):
        jd = oracle.joint_lev_des(n)
        got = fibwords.totals(n)
        want = (
            oracle.joint_lev_asc(n).deriv_p()(1, 1),
            oracle.joint_lev_asc(n).deriv_q()(1, 1),
            jd.deriv_q()(1, 1),
        )
        rec.expect_equal("statistic totals match enumeration", {"n": n}, got, want)
        rec.expect_equal(
            "level/descent closed form matches enumeration",
            {"n": n},
            fibwords.gf_descent(Fraction(2, 5), Fraction(3, 7)).series(n)[n],
            jd(Fraction(2, 5), Fraction(3, 7)),
        )
    for n in range(1, nmax_totals + 1):
        lev, asc, des = fibwords.totals(n)
        rec.expect_equal(
            "totals sum to (n-1) times the word count",
            {"n": n},
            lev + asc + des,
            (n - 1) * fib[2 * n + 2],
        )
        if n >= 5:
            rec.record(
                "strict ordering levels > ascents > descents",
                {"n": n},
                lev > asc > des,
                f"({lev}, {asc}, {des})",
            )
    rec.record(
        "Fibonacci-Lucas convolution identity",
        {"order": nmax_totals},
        fibwords.lucas_identity_holds(nmax_totals),
    )
    return rec.checks


def suite_absdiff(kmax=6, smax=3, nmax=8, nmax_series=12, lu_points=20, seed=20260810):
    rec = _Recorder("absdiff")
    for s in range(1, smax + 1):
        for k in range(1, kmax + 1):
            table = absdiff.b_table(k, s, nmax)
            for n in range(nmax + 1):
                rec.expect_equal(
                    "jump DP equals enumeration",
                    {"k": k, "s": s, "n": n},
                    table.totals[n],
                    oracle.distribution_nu(k, s, n),
                )
    q_points = [Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(2), Fraction(7, 3)]
    for k, s in [(3, 2), (4, 2), (4, 3), (5, 3), (6, 3)]:
        table = absdiff.b_table(k, s, nmax_series)
        series = absdiff.gf_B_small(k, s).series(nmax_series)
        rec.expect_equal(
            "middle-band closed form equals DP",
            {"k": k, "s": s},
            series,
            list(table.totals),
        )
        for n in range(2, nmax_series + 1):
            q = QPoly.var()
            want = (k - 1 + q) * table.totals[n - 1] + (1 - q) * (2 * s - k) * table.totals[n - 2]
            rec.expect_equal(
                "two-term recursion holds on DP totals",
                {"k": k, "s": s, "n": n},
                table.totals[n],
                want,
            )
        for qv in q_points:
            rec.expect_equal(
                "Chebyshev-encoded recursion matches DP at a rational",
                {"k": k, "s": s, "q": str(qv)},
                [absdiff.b_closed_chebyshev(k, s, n, qv) for n in range(nmax_series + 1)],
                [t(qv) for t in table.totals],
            )
        # mid-band column collapse: letters below k-s+1 and above s agree
        for n in range(1, nmax + 1):
            row = absdiff.b_table(k, s, nmax).rows[n]
            outer = [row[i - 1] for i in range(1, k - s + 1)] + [
                row[i - 1] for i in range(s + 1, k + 1)
            ]
            rec.record(
                "outer letters share one distribution",
                {"k": k, "s": s, "n": n},
                all(c == outer[0] for c in outer),
            )
    for k, s in [(3, 1), (4, 1), (5, 1), (5, 2), (7, 3), (6, 2)]:
        table = absdiff.b_table(k, s, nmax_series)
        for qv in q_points:
            series = absdiff.gf_B_large(k, s, qv).series(nmax_series)
            rec.expect_equal(
                "wide-band Chebyshev closed form equals DP at a rational",
                {"k": k, "s": s, "q": str(qv)},
                series,
                [t(qv) for t in table.totals],
            )
    rng = random.Random(seed)
    done = 0
    while done < lu_points:
        d = rng.randint(0, 6)
        x = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        qv = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if qv == 1:
            continue
        try:
            ok = absdiff.lu_verify(d, x, qv)
        except absdiff.DegeneratePoint:
            continue  # resample, never perturb
        rec.record(
            "tridiagonal LU factorization multiplies back",
            {"d": d, "x": str(x), "q": str(qv)},
            ok,
        )
        done += 1
    return rec.checks


def suite_partitions(kmax=5, nmax=9, total_nmax=10, s1_kmax=4) -> list[Check]:
    rec = _Recorder("partitions")
    bell = partitions.bell_list(max(nmax, total_nmax, 12))
    for n in range(11):
        rec.expect_equal(
            "growth-sequence count is the Bell number",
            {"n": n},
            sum(1 for _ in partitions.enumerate_rgf(n)),
            bell[n],
        )
    table = partitions.stirling_table(nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            rec.expect_equal(
                "filtered count is the Stirling number",
                {"n": n, "k": k},
                sum(1 for _ in partitions.enumerate_rgf(n, k)),
                table[n][k],
            )
    for s in (2, 3):
        for k in range(s + 1, kmax + 1):
            series = partitions.gf_P(k, s).series(nmax)
            for n in range(nmax + 1):
                rec.expect_equal(
                    "block-count closed form equals enumeration",
                    {"k": k, "s": s, "n": n},
                    series[n],
                    partitions.p_dist_oracle(n, k, s),
                )
            for n in range(k + 1, nmax + 1):
                rec.expect_equal(
                    "Stirling total formula equals marked enumeration",
                    {"k": k, "s": s, "n": n},
                    partitions.total_pnk(n, k, s),
                    partitions.p_dist_oracle(n, k, s).derivative()(1),
                )
    for s in (2, 3, 4):
        for n in range(2, total_nmax + 1):
            rec.expect_equal(
                "Bell-number grand total equals enumeration",
                {"s": s, "n": n},
                partitions.q_total(n, s),
                partitions.p_total_all_oracle(n, s),
            )
    for n in range(2, nmax + 1):
        rec.expect_equal(
            "grand total is the sum of per-block-count totals",
            {"s": 2, "n": n},
            sum(partitions.total_pnk(n, k, 2) for k in range(3, n)),
            partitions.q_total(n, 2),
        )
    for n in range(1, 13):
        rec.expect_equal(
            "weighted Stirling row sums telescope to Bell differences",
            {"n": n},
            sum(k * partitions.stirling_table(n - 1)[n - 1][k] for k in range(n)),
            bell[n] - bell[n - 1],
        )
    for k in range(2, s1_kmax + 1):
        a = partitions.gf_P_s1(k).series(nmax)
        b = partitions.gf_P_s1_reference(k).series(nmax)
        rec.expect_equal(
            "the two adjacent-successor forms agree",
            {"k": k},
            a,
            b,
        )
        for n in range(nmax + 1):
            rec.expect_equal(
                "adjacent-successor closed form equals enumeration",
                {"k": k, "n": n},
                a[n],
                partitions.p_dist_oracle(n, k, 1),
            )
    return rec.checks


def suite_bijections(nmax=10, tiling_nmax=12) -> list[Check]:
    rec = _Recorder("bijections")
    fib = fibwords.fib_list(tiling_nmax + 2)
    for n in range(nmax + 1):
        comps = list(bijections.colored_compositions(n + 1))
        mans = [bijections.composition_to_maneuvers(c) for c in comps]
        vws = sorted(bijections.v_words(n))
        wws = sorted(bijections.w_words(n))
        target = oracle.count_avoiders(4, n, frozenset({(1, 3), (2, 4)}))
        rec.expect_equal(
            "compositions biject onto move words",
            {"n": n},
            sorted(mans),
            vws,
        )
        rec.record(
            "composition round trip is the identity",
            {"n": n},
            all(bijections.maneuvers_to_composition(m) == c for c, m in zip(comps, mans)),
        )
        images = sorted(bijections.v_to_w(v) for v in vws)
        rec.expect_equal("rewriting maps onto the 1-3/2-4 avoiders", {"n": n}, images, wws)
        rec.record(
            "rewriting round trips are the identity",
            {"n": n},
            all(bijections.w_to_v(bijections.v_to_w(v)) == v for v in vws)
            and all(bijections.v_to_w(bijections.w_to_v(w)) == w for w in wws),
        )
        chain = {len(comps), len(vws), len(wws), target,
                 kary.a_rec_alt(kary.KSParams(4, 2), n)[n](0)}
        rec.record("all five family sizes coincide", {"n": n}, len(chain) == 1, str(chain))
    for n in range(tiling_nmax + 1):
        jw = list(bijections.jpp_words(n))
        tl = sorted(bijections.tilings(n))
        rec.expect_equal(
            "level-free words are counted by Fibonacci numbers",
            {"n": n},
            len(jw),
            fib[n + 1],
        )
        rec.expect_equal(
            "pairing map is a bijection onto tilings",
            {"n": n},
            sorted(bijections.jpp_to_tiling(w) for w in jw),
            tl,
        )
        rec.record(
            "tiling round trips are the identity",
            {"n": n},
            all(bijections.tiling_to_jpp(bijections.jpp_to_tiling(w)) == w for w in jw)
            and all(bijections.jpp_to_tiling(bijections.tiling_to_jpp(t)) == t for t in tl),
        )
    return rec.checks


def suite_algebra(det_mmax=12, det_smax=4, cramer_max=10, cheb_nmax=12) -> list[Check]:
    rec = _Recorder("algebra")
    for s in range(1, det_smax + 1):
        for m in range(1, det_mmax + 1):
            got = det_exact(SquareMatrix(kary.shift_band_matrix(m, s)))
            d, r = divmod(m, s)
            want = QPoly((0,) * d + ((-1) ** (m - d),)) if r == 0 else QPoly()
            rec.expect_equal(
                "banded determinant closed form",
                {"m": m, "s": s},
                got,
                want,
            )
    for s in range(1, det_smax + 1):
        for m in range(1, cramer_max + 1):
            got = det_exact(SquareMatrix(kary.unit_column_matrix(m, s)))
            rec.expect_equal(
                "unit-column determinant telescopes to a geometric sum",
                {"m": m, "s": s},
                got,
                kary.unit_column_det(m, s),
            )
    t = QPoly.var()
    for n in range(cheb_nmax + 1):
        num, den = alt_cheb_sum_closed(n, t)
        rec.expect_equal(
            "alternating Chebyshev sum identity",
            {"n": n},
            alt_cheb_sum(n, t) * den,
            num,
        )
    rec.expect_equal("U_5(1) via the recurrence", {}, chebyshev_u(5, 1), 6)
    return rec.checks


SUITES = {
    "kary": suite_kary,
    "gap": suite_gap,
    "fibwords": suite_fibwords,
    "absdiff": suite_absdiff,
    "partitions": suite_partitions,
    "bijections": suite_bijections,
    "algebra": suite_algebra,
}


def run_suites(names, **bounds) -> list[Check]:
    """Run the named suites with optional bound overrides; each bound is
    forwarded only to suites that have a parameter of that name."""
    import inspect

    checks = []
    for name in names:
        fn = SUITES[name]
        accepted = inspect.signature(fn).parameters
        kwargs = {
            key: value
            for key, value in bounds.items()
            if value is not None and key in accepted
        }
        checks.extend(fn(**kwargs))
    return checks
