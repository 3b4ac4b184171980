"""Set partitions in canonical sequential form (restricted growth
functions) and the statistic counting adjacent pairs (a, a+s):
brute-force enumeration, the closed-form generating function for a fixed
block count, total-occurrence formulas in Stirling numbers, and the
Bell-number formulas for the grand totals at s = 2, 3, 4.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import InternalInvariantViolation, QPoly, RatFunc, XPoly
from .kary import KSParams, gf_A, gf_denominator, unit_column_det


class WrongRegime(ValueError):
    """The closed form does not apply to this (k, s) pair."""


DEFAULT_RGF_CAP = 10**8


class EnumerationTooLarge(RuntimeError):
    """The number of growth sequences to scan exceeds the cap."""


def bell_list(n: int) -> list[int]:
    """Bell numbers B_0..B_n via the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


def stirling_table(n: int) -> list[list[int]]:
    """Table S[m][k] of Stirling numbers of the second kind, 0 <= m, k <= n."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for k in range(1, m + 1):
            table[m][k] = table[m - 1][k - 1] + k * table[m - 1][k]
    return table


def enumerate_rgf(n: int, k: int | None = None, cap: int = DEFAULT_RGF_CAP):
    """All restricted growth functions of length n (first letter 1, each
    letter at most one above the running maximum), streamed in
    lexicographic order; filtered to maximum letter k when given."""
    if n < 0:
        raise ValueError("need n >= 0")
    if bell_list(n)[n] > cap:
        raise EnumerationTooLarge(f"B_{n} growth sequences exceed cap {cap}")
    if n == 0:
        if k in (None, 0):
            yield ()
        return

    def rec(prefix, cur_max):
        if len(prefix) == n:
            if k is None or cur_max == k:
                yield tuple(prefix)
            return
        for letter in range(1, cur_max + 2):
            prefix.append(letter)
            yield from rec(prefix, max(cur_max, letter))
            prefix.pop()

    yield from rec([1], 1)


@lru_cache(maxsize=None)
def p_dist_oracle(n: int, k: int, s: int, cap: int = DEFAULT_RGF_CAP) -> QPoly:
    """Distribution of adjacent (a, a+s) pairs over the growth sequences of
    length n with maximum letter k, by direct scan."""
    counts = [0] * max(n, 1)
    for w in enumerate_rgf(n, k, cap):
        m = sum(b - a == s for a, b in itertools.pairwise(w))
        counts[m] += 1
    return QPoly(counts)


@lru_cache(maxsize=None)
def p_total_all_oracle(n: int, s: int, cap: int = DEFAULT_RGF_CAP) -> int:
    """Summed count of adjacent (a, a+s) pairs over all growth sequences of
    length n (every block count), by direct scan."""
    total = 0
    for w in enumerate_rgf(n, None, cap):
        total += sum(b - a == s for a, b in itertools.pairwise(w))
    return total


def gf_P(k: int, s: int) -> RatFunc:
    """Closed-form generating function, coefficients in q, for the
    (a, a+s) distribution on partitions with exactly k blocks, s >= 2.

    Assembled factor by factor: with k = rem + steps*s (1 <= rem <= s,
    steps >= 1),

        x^k (1+(q-1)x) (1+(1-q)x)^(k-s+1) (1-((q-1)x)^(steps+1))^(rem-1)
        / prod_{j=1}^{s} (1-jx)
        * prod_{l=1}^{steps-1} (1-((q-1)x)^(l+1))^(s-1) (1-((q-1)x)^(l+2))
        * prod_{j=s+1}^{k} D_j(x;q),

    where 1/D_j is the long-form word-distribution denominator for
    alphabet size j.  At q = 1 this collapses to the classical
    x^k / prod_{j=1}^{k} (1-jx)."""
    if s < 2 or k < s + 1:
        raise WrongRegime("need s >= 2 and k >= s+1")
    params = KSParams(k, s)
    rem, steps = params.rem, params.steps
    q = QPoly.var()

    def one_minus_qx_pow(m: int) -> XPoly:
        # 1 - ((q-1)x)^m
        return XPoly((1,)) - XPoly.monomial((q - 1) ** m, m)

    num = XPoly.monomial(QPoly((1,)), k)
    num = num * XPoly((QPoly((1,)), q - 1))
    num = num * XPoly((QPoly((1,)), 1 - q)) ** (k - s + 1)
    num = num * one_minus_qx_pow(steps + 1) ** (rem - 1)
    for ell in range(1, steps):
        num = num * one_minus_qx_pow(ell + 1) ** (s - 1)
        num = num * one_minus_qx_pow(ell + 2)
    den = XPoly((1,))
    for j in range(1, s + 1):
        den = den * XPoly((1, -j))
    for j in range(s + 1, k + 1):
        den = den * gf_denominator(KSParams(j, s))
    return RatFunc(num, den)


def total_pnk(n: int, k: int, s: int) -> int:
    """Total number of adjacent (a, a+s) pairs over all partitions of an
    n-set with exactly k blocks (s >= 2, k >= s+1):
    (k-s) S(n-1,k) + sum_{j=s+1}^{k} sum_{t=0}^{n-k-2} S(n-t-2,k) j^t (j-s)."""
    if s < 2 or k < s + 1:
        raise WrongRegime("need s >= 2 and k >= s+1")
    if n <= k:
        return 0
    table = stirling_table(n)
    total = (k - s) * table[n - 1][k]
    for j in range(s + 1, k + 1):
        for t in range(n - k - 1):
            total += table[n - t - 2][k] * j**t * (j - s)
    return total


def q_total(n: int, s: int) -> int:
    """Total number of adjacent (a, a+s) pairs over all partitions of an
    n-set, from the Bell-number formulas for s = 2, 3, 4.

    The s = 3 and s = 4 formulas have powers like 2^(n-2-j) that go
    negative at the edge of the sum, so they are evaluated in exact
    rationals; the result must come out integral."""
    if n < 2:
        raise ValueError("need n >= 2")
    if s == 2:
        bell = bell_list(n)
        return (n - 3) * bell[n - 1] - (2 * n - 5) * bell[n - 2] + sum(bell[: n - 2])
    if s == 3:
        bell = bell_list(n)
        total = (
            Fraction(-1, 2) * bell[n]
            + Fraction(2 * n - 13, 2) * bell[n - 1]
            - 3 * (n - 2) * bell[n - 2]
            + Fraction(2) ** (n - 2)
            + 2
        )
        for j in range(1, n):
            total += comb(n - 1, j) * (Fraction(2) ** (n - 2 - j) + 2) * bell[j - 1]
    elif s == 4:
        # the closed form is naturally indexed one step ahead; m below is
        # chosen so that the result counts occurrences in partitions of [n]
        m = n - 1
        bell = bell_list(m + 2)
        total = (
            Fraction(-1, 6) * bell[m + 2]
            - bell[m + 1]
            + Fraction(3 * m - 25, 3) * bell[m]
            - 4 * (m - 1) * bell[m - 1]
            + Fraction(3**m + 6 * 2**m + 21, 6)
        )
        for j in range(1, m + 1):
            total += (
                comb(m, j)
                * Fraction(3 ** (m - j) + 6 * 2 ** (m - j) + 18, 6)
                * bell[j - 1]
            )
    else:
        raise ValueError("grand-total formulas exist only for s in {2, 3, 4}")
    if total.denominator != 1:
        raise InternalInvariantViolation(f"grand total for n={n}, s={s} not integral")
    return int(total)


def _e_factor(j: int) -> RatFunc:
    """The word-distribution generating function for alphabet size j at
    s = 1 (numerator (1+(1-q)x)^2 over the long-form denominator)."""
    return gf_A(KSParams(j, 1))


def _e_prime_factor(j: int) -> RatFunc:
    """_e_factor(j) times (1 + (q-1)x * unit_column_det(j, 1)), the
    correction for a section that may be followed by its successor letter."""
    correction = XPoly((QPoly((1,)),)) + XPoly.monomial(QPoly((-1, 1)), 1) * unit_column_det(j, 1)
    return _e_factor(j) * correction


def gf_P_s1(k: int) -> RatFunc:
    """Generating function of the (a, a+1) distribution on partitions with
    exactly k blocks, built as the corrected product
        q x^k E_k(x) / (1-x) * prod_{j=2}^{k-1} (q - 1 + E'_j(x)).
    The s = 1 statistic needs this separate treatment because both letters
    of an occurrence can be the first of their kind."""
    if k < 2:
        raise WrongRegime("need k >= 2")
    q = QPoly.var()
    out = RatFunc(XPoly.monomial(q, k)) * _e_factor(k) / XPoly((1, -1))
    for j in range(2, k):
        out = out * (q - 1 + _e_prime_factor(j))
    return out


def gf_P_s1_reference(k: int) -> RatFunc:
    """Independent published form of gf_P_s1:

        x^k / (1 - x sum_{i=1}^{k} (1-x^i(q-1)^i)/(1-x(q-1)))
        * prod_{j=1}^{k-1} (q - 1 + (1-x^(j+1)(q-1)^(j+1))
              / (1 - x(j+q) + x (1-x^(j+1)(q-1)^(j+1))/(1-x(q-1))))."""
    if k < 2:
        raise WrongRegime("need k >= 2")
    q = QPoly.var()
    one_minus_y = XPoly((QPoly((1,)), 1 - q))  # 1 - (q-1)x

    def y_pow_complement(m: int) -> XPoly:
        # 1 - ((q-1)x)^m
        return XPoly((1,)) - XPoly.monomial((q - 1) ** m, m)

    geom = RatFunc(XPoly())
    for i in range(1, k + 1):
        geom = geom + RatFunc(y_pow_complement(i), one_minus_y)
    first = RatFunc(XPoly.monomial(QPoly((1,)), k)) / (1 - XPoly.x() * geom)
    out = first
    for j in range(1, k):
        numer = y_pow_complement(j + 1)
        inner_den = XPoly((QPoly((1,)), -QPoly((j, 1)))) + XPoly.x() * RatFunc(
            numer, one_minus_y
        )
        out = out * (q - 1 + RatFunc(numer) / inner_den)
    return out
