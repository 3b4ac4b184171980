"""Distribution of fixed rises (adjacent pairs a, a+s) on k-ary words:
last-letter dynamic programming, two equivalent closed-form generating
functions, the short linear recurrence, avoidance counts, the total-count
formula, and the reduction of wider gaps to the adjacent case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import InternalInvariantViolation, QPoly, RatFunc, XPoly


@dataclass(frozen=True)
class KSParams:
    """Alphabet size k and rise size s, with the decomposition
    k = rem + s*steps, 1 <= rem <= s, steps >= 0.

    steps + 1 is the longest chain a, a+s, a+2s, ... that fits in [1, k];
    it controls the order of every recurrence below.
    """

    k: int
    s: int

    def __post_init__(self):
        if self.k < 1 or self.s < 1:
            raise ValueError("need k >= 1 and s >= 1")

    @property
    def rem(self) -> int:
        return (self.k - 1) % self.s + 1

    @property
    def steps(self) -> int:
        return (self.k - self.rem) // self.s


@dataclass(frozen=True)
class ATable:
    """DP table: rows[n][i-1] restricts the distribution to words ending in
    the letter i; totals[n] is the full distribution for length n."""

    params: KSParams
    rows: tuple[tuple[QPoly, ...], ...]
    totals: tuple[QPoly, ...]


@lru_cache(maxsize=None)
def a_table(params: KSParams, order: int) -> ATable:
    """Fill the last-letter DP up to length `order`.

    Appending any i <= s never completes a rise; appending i > s completes
    one exactly when the previous word ends in i - s, which toggles that
    slice's weight from 1 to q.
    """
    k, s = params.k, params.s
    q_minus_1 = QPoly((-1, 1))
    rows = [()]
    totals = [QPoly((1,))]
    if order >= 1:
        row = tuple(QPoly((1,)) for _ in range(k))
        rows.append(row)
        totals.append(QPoly((k,)))
    for _ in range(2, order + 1):
        prev_row, prev_total = rows[-1], totals[-1]
        row = tuple(
            prev_total if i <= s else prev_total + q_minus_1 * prev_row[i - s - 1]
            for i in range(1, k + 1)
        )
        total = QPoly()
        for entry in row:
            total = total + entry
        rows.append(row)
        totals.append(total)
    return ATable(params, tuple(rows), tuple(totals))


def a_rec_alt(params: KSParams, order: int) -> list[QPoly]:
    """The (steps+1)-term recurrence
    a_n = sum_{i=0}^{steps} (q-1)^i (k - i s) a_{n-i-1},
    seeded with rows 0..steps taken from the DP table."""
    k, s = params.k, params.s
    m = params.steps
    seed = a_table(params, min(order, m)).totals
    out = list(seed[: order + 1])
    q_minus_1 = QPoly((-1, 1))
    weights = [q_minus_1**i * (k - i * s) for i in range(m + 1)]
    for n in range(m + 1, order + 1):
        acc = QPoly()
        for i, w in enumerate(weights):
            acc = acc + w * out[n - i - 1]
        out.append(acc)
    return out


def gf_denominator(params: KSParams) -> XPoly:
    """Denominator of the long-form generating function, coefficients in q."""
    k, s = params.k, params.s
    q = QPoly.var()
    one_m_q = 1 - q
    lead = XPoly(
        (
            QPoly((1,)),
            -(QPoly((k - 2,)) + 2 * q),
            -((k + s - 1 + q) * one_m_q),
        )
    )
    # (rem*(1 + (1-q)x) - s) * x * ((q-1)x)^(steps+1)
    factor = XPoly((params.rem - s, params.rem * one_m_q))
    tail = factor * XPoly.monomial((q - 1) ** (params.steps + 1), params.steps + 2)
    return lead + tail


def gf_A(params: KSParams) -> RatFunc:
    """Closed-form generating function sum_n a_n(q) x^n, long form:
    numerator (1 + (1-q)x)^2 over gf_denominator."""
    one_m_q = 1 - QPoly.var()
    num = XPoly((QPoly((1,)), one_m_q)) ** 2
    return RatFunc(num, gf_denominator(params))


def gf_A_reduced(params: KSParams) -> RatFunc:
    """The same generating function after cancelling (1 + (1-q)x)^2:
    1 / (1 - sum_{i=0}^{steps} (q-1)^i (k - i s) x^(i+1))."""
    k, s = params.k, params.s
    q_minus_1 = QPoly((-1, 1))
    coeffs = [QPoly((1,))]
    for i in range(params.steps + 1):
        coeffs.append(-(q_minus_1**i * (k - i * s)))
    return RatFunc(XPoly((1,)), XPoly(coeffs))


def avoid_count(params: KSParams, order: int) -> list[int]:
    """Counts of words with no rise by s, for lengths 0..order.

    Computed three ways -- the DP table at q=0, the alternative recurrence
    at q=0, and the four-term recurrence from the q=0 generating function --
    which must agree exactly.
    """
    k, s = params.k, params.s
    m = params.steps
    table_vals = [p(0) for p in a_table(params, order).totals]

    alt = list(table_vals[: m + 1])
    for n in range(m + 1, order + 1):
        alt.append(sum((-1) ** i * (k - i * s) * alt[n - i - 1] for i in range(m + 1)))

    four = list(table_vals[: min(m + 3, order + 1)])
    sign = (-1) ** m
    for n in range(m + 3, order + 1):
        four.append(
            (k - 2) * four[n - 1]
            + (k + s - 1) * four[n - 2]
            + sign * (params.rem - s) * four[n - m - 2]
            + sign * params.rem * four[n - m - 3]
        )

    if not (table_vals == alt == four):
        raise InternalInvariantViolation(f"avoidance recurrences disagree for {params}")
    return table_vals


def total_occurrences(params: KSParams, n: int) -> int:
    """Total number of (a, a+s) adjacencies over all k-ary words of
    length n: k^(n-2) (k-s) (n-1), and 0 whenever no rise can occur."""
    k, s = params.k, params.s
    if n < 2 or k <= s:
        return 0
    return k ** (n - 2) * (k - s) * (n - 1)


def gap_distribution(params: KSParams, r: int, n: int) -> QPoly:
    """Distribution of indices i with w[i+r] - w[i] = s.

    The r interleaved subsequences of a word are independent, so the
    answer is a product of adjacent-case distributions: with n = d*r + t,
    it equals a_{d+1}^t * a_d^(r-t)."""
    if r < 1:
        raise ValueError("gap must be >= 1")
    d, t = divmod(n, r)
    totals = a_table(params, d + 1).totals
    return totals[d + 1] ** t * totals[d] ** (r - t)


def unit_column_det(m: int, s: int) -> XPoly:
    """Determinant of unit_column_matrix(m, s) in closed form:
    sum_{i=0}^{d} (-(1-q)x)^i where m = d*s + r with 1 <= r <= s."""
    d = (m - 1) // s
    term = XPoly.monomial(QPoly((-1, 1)), 1)  # (q-1) x
    acc = XPoly((1,))
    out = XPoly((1,))
    for _ in range(d):
        acc = acc * term
        out = out + acc
    return out


def unit_column_matrix(m: int, s: int):
    """The m x m matrix with unit diagonal, (1-q)x at offset -s, and the
    last column replaced by ones; its determinant is unit_column_det."""
    one_m_q_x = XPoly.monomial(1 - QPoly.var(), 1)
    rows = []
    for i in range(m):
        row = [XPoly() for _ in range(m)]
        row[i] = XPoly((1,))
        if i - s >= 0:
            row[i - s] = one_m_q_x
        row[m - 1] = XPoly((1,))
        rows.append(row)
    return rows


def shift_band_matrix(m: int, s: int):
    """The m x m matrix with ones on the superdiagonal and the weight z on
    the diagonal shifted down by s - 1 (rows s..m), z symbolic.

    Its determinant is (-1)^(m-d) z^d when m = d*s, and 0 otherwise; the
    unit-column determinants above telescope out of exactly these."""
    z = QPoly.var()
    rows = []
    for i in range(1, m + 1):
        row = [QPoly() for _ in range(m)]
        if i + 1 <= m:
            row[i] = QPoly((1,))
        if i >= s:
            row[i - s] = z
        rows.append(row)
    return rows
