"""Distribution of jumps of absolute size s (adjacent pairs a, a +/- s) on
k-ary words.  Three alphabet regimes behave differently:

  * k <= s        -- no jump of size s is possible; the distribution is k^n;
  * s+1 <= k <= 2s -- a two-term recurrence and a closed form built from
                      Chebyshev polynomials of the second kind;
  * k >= 2s+1     -- a closed form assembled from Chebyshev polynomials
                      evaluated at 1/(2x(1-q)), proved via an LU
                      factorization of a tridiagonal system, which this
                      module also verifies explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    InternalInvariantViolation,
    QPoly,
    RatFunc,
    SquareMatrix,
    XPoly,
    chebyshev_u,
    chebyshev_u_list,
    mat_mul,
)


class WrongRegime(ValueError):
    """The requested formula does not apply to this (k, s) pair."""


class SingularSpecialization(ValueError):
    """q = 1 collapses the closed form; use the DP table instead."""


class DegeneratePoint(ValueError):
    """A Chebyshev denominator vanishes at the chosen sample point."""


def regime(k: int, s: int) -> str:
    if k < 1 or s < 1:
        raise ValueError("need k >= 1 and s >= 1")
    if k <= s:
        return "trivial"
    if k <= 2 * s:
        return "small"
    return "large"


@dataclass(frozen=True)
class BTable:
    """Last-letter DP for the absolute-jump statistic; rows[n][i-1] is the
    distribution over words ending in i, totals[n] the full distribution."""

    k: int
    s: int
    regime: str
    rows: tuple[tuple[QPoly, ...], ...]
    totals: tuple[QPoly, ...]


@lru_cache(maxsize=None)
def b_table(k: int, s: int, order: int) -> BTable:
    """Fill the DP up to length `order`.

    Appending i completes a jump exactly when the previous word ends in
    i - s or i + s; the same update covers all three regimes because the
    out-of-range neighbors simply do not exist.
    """
    q_minus_1 = QPoly((-1, 1))
    rows = [()]
    totals = [QPoly((1,))]
    if order >= 1:
        rows.append(tuple(QPoly((1,)) for _ in range(k)))
        totals.append(QPoly((k,)))
    for _ in range(2, order + 1):
        prev_row, prev_total = rows[-1], totals[-1]
        row = []
        for i in range(1, k + 1):
            entry = prev_total
            if i - s >= 1:
                entry = entry + q_minus_1 * prev_row[i - s - 1]
            if i + s <= k:
                entry = entry + q_minus_1 * prev_row[i + s - 1]
            row.append(entry)
        total = QPoly()
        for entry in row:
            total = total + entry
        rows.append(tuple(row))
        totals.append(total)
    return BTable(k, s, regime(k, s), tuple(rows), tuple(totals))


def gf_B_small(k: int, s: int) -> RatFunc:
    """Closed-form generating function for s+1 <= k <= 2s:
    (1 + (1-q)x) / (1 + (1-q-k)x - (2s-k)(1-q)x^2)."""
    if regime(k, s) != "small":
        raise WrongRegime(f"(k, s) = {(k, s)} is not in the band s+1 <= k <= 2s")
    q = QPoly.var()
    one_m_q = 1 - q
    num = XPoly((QPoly((1,)), one_m_q))
    den = XPoly((QPoly((1,)), QPoly((1 - k, -1)), -((2 * s - k) * one_m_q)))
    return RatFunc(num, den)


def b_closed_chebyshev(k: int, s: int, n: int, q_val) -> Fraction:
    """Total distribution value at an exact rational q for the middle band,
    evaluated through the two-term recursion
        b_n = (k-1+q) b_{n-1} + (1-q)(2s-k) b_{n-2},  b_0 = 1, b_1 = k,
    which is exactly what the Chebyshev closed form encodes (the Chebyshev
    expression itself is validated separately at perfect-square arguments,
    see chebyshev_closed_at_square)."""
    if regime(k, s) != "small":
        raise WrongRegime(f"(k, s) = {(k, s)} is not in the band s+1 <= k <= 2s")
    q = Fraction(q_val)
    prev, cur = Fraction(1), Fraction(k)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, (k - 1 + q) * cur + (1 - q) * (2 * s - k) * prev
    return cur


def chebyshev_closed_at_square(k: int, s: int, n: int, q_val, root) -> Fraction:
    """Literal Chebyshev form of the middle-band total,
        k c^(n-1) U_{n-1}(t) - c^n U_{n-2}(t),  t = (k+q-1)/(2c),
    usable whenever (2s-k)(q-1) is the square of the rational `root` = c.
    Validation companion to b_closed_chebyshev; requires n >= 1, c != 0."""
    if regime(k, s) != "small":
        raise WrongRegime(f"(k, s) = {(k, s)} is not in the band s+1 <= k <= 2s")
    if n < 1:
        raise ValueError("need n >= 1")
    q = Fraction(q_val)
    c = Fraction(root)
    if c == 0 or c * c != (2 * s - k) * (q - 1):
        raise ValueError("root must be a nonzero square root of (2s-k)(q-1)")
    t = (k + q - 1) / (2 * c)
    return k * c ** (n - 1) * chebyshev_u(n - 1, t) - c**n * chebyshev_u(n - 2, t)


def _cheb_arg(q: Fraction) -> RatFunc:
    """The rational function 1 / (2x(1-q))."""
    return RatFunc(XPoly((1,)), XPoly((0, 2 * (1 - q))))


def h_sum_squared(d: int, q_val) -> RatFunc:
    """Band sum in the squared form:
    sum_{l=0}^{d} x^2 (1-q) (U_{l+1} + U_l + (-1)^l)^2
                  / ((1 + 2x(1-q))^2 U_{l+1} U_l),
    every U evaluated at 1/(2x(1-q))."""
    q = Fraction(q_val)
    if q == 1:
        raise SingularSpecialization("q = 1 collapses the Chebyshev argument")
    us = chebyshev_u_list(d + 1, _cheb_arg(q))
    corner = RatFunc(XPoly((1, 2 * (1 - q)))) ** 2
    front = RatFunc(XPoly.monomial(1 - q, 2))
    total = RatFunc(XPoly())
    for ell in range(d + 1):
        u_lo, u_hi = us[ell + 1], us[ell + 2]
        numer = front * (u_hi + u_lo + (-1) ** ell) ** 2
        total = total + numer / (corner * u_hi * u_lo)
    return total


def h_sum_triple(d: int, q_val) -> RatFunc:
    """The same band sum in unreduced triple-sum form:
    sum_{j=0}^{d} sum_{l=j}^{d} sum_{m=0}^{l}
        (-1)^(l+m-j) U_j U_{l-m} / ((1-q) U_{l+1} U_l)."""
    q = Fraction(q_val)
    if q == 1:
        raise SingularSpecialization("q = 1 collapses the Chebyshev argument")
    us = chebyshev_u_list(d + 1, _cheb_arg(q))
    total = RatFunc(XPoly())
    for ell in range(d + 1):
        numer = RatFunc(XPoly())
        for j in range(ell + 1):
            for m in range(ell + 1):
                term = us[j + 1] * us[ell - m + 1]
                if (ell + m - j) % 2:
                    term = -term
                numer = numer + term
        total = total + numer / ((1 - q) * us[ell + 2] * us[ell + 1])
    return total


def gf_B_large(k: int, s: int, q_val) -> RatFunc:
    """Closed-form generating function for k >= 2s+1 at an exact rational
    q != 1: with k = d*s + r (d >= 2, 1 <= r <= s),

        B(x) = 1 / (1 - r H_d(x) - (s-r) H_{d-1}(x)),

    where H is the Chebyshev band sum.  Both the squared and the
    triple-sum forms of H are computed and must agree."""
    if regime(k, s) != "large":
        raise WrongRegime(f"(k, s) = {(k, s)} needs k >= 2s+1")
    q = Fraction(q_val)
    if q == 1:
        raise SingularSpecialization("q = 1; the series is 1/(1-kx), use the DP")
    r = (k - 1) % s + 1
    d = (k - r) // s
    h_parts = []
    for dd in (d, d - 1):
        squared = h_sum_squared(dd, q)
        triple = h_sum_triple(dd, q)
        if squared != triple:
            raise InternalInvariantViolation(
                f"band-sum forms disagree for d={dd}, q={q}"
            )
        h_parts.append(triple)
    denom = 1 - r * h_parts[0] - (s - r) * h_parts[1]
    return 1 / denom


def band_matrix(d: int, x_val, q_val) -> SquareMatrix:
    """The (d+1) x (d+1) tridiagonal matrix with unit diagonal and
    x(1-q) on both off-diagonals, over exact rationals."""
    x, q = Fraction(x_val), Fraction(q_val)
    y = x * (1 - q)
    n = d + 1
    return SquareMatrix(
        [
            [
                Fraction(1) if i == j else (y if abs(i - j) == 1 else Fraction(0))
                for j in range(n)
            ]
            for i in range(n)
        ]
    )


def lu_factors(d: int, x_val, q_val) -> tuple[SquareMatrix, SquareMatrix]:
    """The explicit LU factorization of the tridiagonal band matrix at an
    exact rational point: L is unit lower bidiagonal with
    l[i][i-1] = U_{i-1}(t)/U_i(t), U is upper bidiagonal with
    u[i][i] = x(1-q) U_{i+1}(t)/U_i(t) and u[i][i+1] = x(1-q),
    where t = 1/(2x(1-q))."""
    x, q = Fraction(x_val), Fraction(q_val)
    if x == 0 or q == 1:
        raise DegeneratePoint("need x != 0 and q != 1")
    y = x * (1 - q)
    t = 1 / (2 * y)
    us = chebyshev_u_list(d + 1, t)
    if any(us[i + 1] == 0 for i in range(d + 2)):
        raise DegeneratePoint(f"a Chebyshev value vanishes at x={x}, q={q}")
    n = d + 1
    zero = Fraction(0)
    lower = [[zero] * n for _ in range(n)]
    upper = [[zero] * n for _ in range(n)]
    for i in range(n):
        lower[i][i] = Fraction(1)
        if i >= 1:
            lower[i][i - 1] = us[i] / us[i + 1]  # U_{i-1}/U_i
        upper[i][i] = y * us[i + 2] / us[i + 1]  # x(1-q) U_{i+1}/U_i
        if i + 1 < n:
            upper[i][i + 1] = y
    return SquareMatrix(lower), SquareMatrix(upper)


def lu_verify(d: int, x_val, q_val) -> bool:
    """Multiply the explicit LU factors back together and compare against
    the tridiagonal band matrix entrywise."""
    lower, upper = lu_factors(d, x_val, q_val)
    return mat_mul(lower, upper) == band_matrix(d, x_val, q_val)
