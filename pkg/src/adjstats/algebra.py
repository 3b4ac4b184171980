"""Exact algebraic core: dense polynomials, rational functions with
power-series expansion, Chebyshev polynomials of the second kind, and
division-free determinants.

Everything here is immutable and exact.  Coefficients live in whatever
ring supports +, -, * and comparison with integers: Python ints,
fractions.Fraction, QPoly, PQPoly, or nested XPoly values all work.
"""

from __future__ import annotations

from fractions import Fraction


class NotExpandable(ArithmeticError):
    """The rational function has no power-series expansion at x = 0."""


class InternalInvariantViolation(RuntimeError):
    """An exact identity that must hold by construction failed."""


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add_lists(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


def _mul_lists(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb == 0:
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


class QPoly:
    """Dense polynomial in the occurrence-marking variable q.

    coeffs[i] is the (arbitrary-precision integer) coefficient of q^i;
    trailing zeros are never stored, so the zero polynomial has empty
    coeffs.  Evaluating a distribution polynomial at q = 1 recovers the
    size of the underlying set of objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def var(cls):
        """The polynomial q itself."""
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, QPoly):
            return QPoly(_add_lists(self.coeffs, other.coeffs))
        if isinstance(other, int):
            return QPoly(_add_lists(self.coeffs, (other,)))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (QPoly, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QPoly):
            return QPoly(_mul_lists(self.coeffs, other.coeffs))
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, value):
        """Evaluate at a scalar (int or Fraction) by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return QPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


class PQPoly:
    """Dense bivariate polynomial in (p, q); grid[i][j] is the coefficient
    of p^i q^j.  Stored as a rectangular tuple-of-tuples with no trailing
    zero row or column.
    """

    __slots__ = ("grid",)

    def __init__(self, grid=()):
        rows = [list(r) for r in grid]
        width = 0
        for r in rows:
            while r and r[-1] == 0:
                r.pop()
            width = max(width, len(r))
        while rows and not rows[-1]:
            rows.pop()
            width = max((len(r) for r in rows), default=0)
        self.grid = tuple(tuple(r + [0] * (width - len(r))) for r in rows)

    @classmethod
    def const(cls, c):
        return cls(((c,),))

    @classmethod
    def p(cls):
        return cls(((0,), (1,)))

    @classmethod
    def q(cls):
        return cls(((0, 1),))

    def coeff(self, i, j):
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def _dims(self):
        h = len(self.grid)
        w = len(self.grid[0]) if h else 0
        return h, w

    def __bool__(self):
        return bool(self.grid)

    def __eq__(self, other):
        if isinstance(other, PQPoly):
            return self.grid == other.grid
        if isinstance(other, int):
            return self.grid == PQPoly.const(other).grid
        return NotImplemented

    def __hash__(self):
        return hash(("PQPoly", self.grid))

    def __add__(self, other):
        if isinstance(other, int):
            other = PQPoly.const(other)
        if not isinstance(other, PQPoly):
            return NotImplemented
        h = max(len(self.grid), len(other.grid))
        w = max(self._dims()[1], other._dims()[1])
        return PQPoly(
            [[self.coeff(i, j) + other.coeff(i, j) for j in range(w)] for i in range(h)]
        )

    __radd__ = __add__

    def __neg__(self):
        return PQPoly([[-c for c in row] for row in self.grid])

    def __sub__(self, other):
        if isinstance(other, int):
            other = PQPoly.const(other)
        if not isinstance(other, PQPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return PQPoly.const(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return PQPoly([[c * other for c in row] for row in self.grid])
        if not isinstance(other, PQPoly):
            return NotImplemented
        ha, wa = self._dims()
        hb, wb = other._dims()
        if not (ha and hb):
            return PQPoly()
        out = [[0] * (wa + wb - 1) for _ in range(ha + hb - 1)]
        for i in range(ha):
            for j in range(wa):
                c = self.grid[i][j]
                if c == 0:
                    continue
                for u in range(hb):
                    for v in range(wb):
                        out[i + u][j + v] += c * other.grid[u][v]
        return PQPoly(out)

    __rmul__ = __mul__

    def __call__(self, p_val, q_val):
        acc = 0
        for i in range(len(self.grid) - 1, -1, -1):
            row = 0
            for c in reversed(self.grid[i]):
                row = row * q_val + c
            acc = acc * p_val + row
        return acc

    def deriv_p(self):
        return PQPoly([[i * c for c in row] for i, row in enumerate(self.grid) if i])

    def deriv_q(self):
        return PQPoly([[j * c for j, c in enumerate(row) if j] for row in self.grid])

    def __repr__(self):
        return f"PQPoly({[list(r) for r in self.grid]})"


class XPoly:
    """Dense polynomial in the series variable x over an arbitrary
    coefficient ring (ints, Fractions, QPoly, PQPoly)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff, power):
        return cls((0,) * power + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def valuation(self):
        """Index of the lowest nonzero coefficient, or None for zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def shift_down(self, m):
        return XPoly(self.coeffs[m:])

    def map_coeffs(self, fn):
        return XPoly(tuple(fn(c) for c in self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            a, b = self.coeffs, other.coeffs
            if len(a) != len(b):
                return False
            return all(x == y for x, y in zip(a, b))
        if isinstance(other, RatFunc):
            return NotImplemented
        # scalar: compare against the constant polynomial
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(("XPoly", self.coeffs))

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if not isinstance(other, XPoly):
            other = XPoly((other,))
        return XPoly(_add_lists(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return XPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if not isinstance(other, XPoly):
            other = XPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, XPoly):
            return XPoly(_mul_lists(self.coeffs, other.coeffs))
        return XPoly(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = XPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"XPoly({list(self.coeffs)})"


def _unwrap_const(c):
    """Reduce a degree-0 polynomial coefficient to its underlying scalar."""
    while isinstance(c, (QPoly, PQPoly, XPoly)):
        if isinstance(c, QPoly):
            if c.degree > 0:
                return c
            c = c.coeff(0)
        elif isinstance(c, PQPoly):
            h, w = c._dims()
            if h > 1 or w > 1:
                return c
            c = c.coeff(0, 0)
        else:
            if c.degree > 0:
                return c
            c = c.coeff(0)
    return c


def _div_coeff(a, d0):
    """Exact division of a series coefficient by the denominator constant."""
    d0 = _unwrap_const(d0)
    if d0 == 0:
        raise NotExpandable("denominator has zero constant term")
    if d0 == 1:
        return a
    if d0 == -1:
        return -a
    if isinstance(d0, int):
        if isinstance(a, int):
            quot, rem = divmod(a, d0)
            return quot if rem == 0 else Fraction(a, d0)
        if isinstance(a, Fraction):
            return a / d0
        raise NotExpandable(f"cannot divide {type(a).__name__} coefficient by {d0}")
    if isinstance(d0, Fraction):
        if isinstance(a, (int, Fraction)):
            return a / d0
        raise NotExpandable(f"cannot divide {type(a).__name__} coefficient by {d0}")
    raise NotExpandable(f"denominator constant term {d0!r} is not invertible")


class RatFunc:
    """A ratio of two XPoly values.

    Equality is decided by cross-multiplication (no gcd normalization);
    the only reduction applied is cancelling a common power of x, which
    keeps series expansion available whenever it exists.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if not isinstance(num, XPoly):
            num = XPoly((num,))
        if not isinstance(den, XPoly):
            den = XPoly((den,))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = XPoly((1,))
        else:
            v = min(num.valuation(), den.valuation())
            if v:
                num = num.shift_down(v)
                den = den.shift_down(v)
        self.num = num
        self.den = den

    @classmethod
    def one(cls):
        return cls(XPoly((1,)))

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power; divide explicitly instead")
        out = RatFunc.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def series(self, order):
        """Coefficients c_0..c_order of the power-series expansion at x = 0.

        Computed through the linear recurrence the denominator induces, so
        each coefficient costs O(deg den) ring operations.
        """
        den = self.den.coeffs
        if not den or den[0] == 0:
            raise NotExpandable("denominator has zero constant term")
        d0 = den[0]
        out = []
        for n in range(order + 1):
            acc = self.num.coeff(n)
            for j in range(1, min(n, len(den) - 1) + 1):
                acc = acc - den[j] * out[n - j]
            out.append(_div_coeff(acc, d0))
        return out

    def scale_x(self, c):
        """Substitute x -> c*x."""
        scale_num = tuple(co * c**i for i, co in enumerate(self.num.coeffs))
        scale_den = tuple(co * c**i for i, co in enumerate(self.den.coeffs))
        return RatFunc(XPoly(scale_num), XPoly(scale_den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def _as_ratfunc(obj):
    if isinstance(obj, RatFunc):
        return obj
    if isinstance(obj, XPoly):
        return RatFunc(obj)
    if isinstance(obj, (int, Fraction, QPoly, PQPoly)):
        return RatFunc(XPoly((obj,)))
    return NotImplemented


def series_expand(f: RatFunc, order: int):
    """Power-series coefficients [x^0 .. x^order] of a rational function."""
    return f.series(order)


def specialize_q(obj, q_val):
    """Evaluate every QPoly coefficient of an XPoly or RatFunc at q = q_val."""

    def ev(c):
        return c(q_val) if isinstance(c, QPoly) else c

    if isinstance(obj, XPoly):
        return obj.map_coeffs(ev)
    if isinstance(obj, RatFunc):
        return RatFunc(obj.num.map_coeffs(ev), obj.den.map_coeffs(ev))
    raise TypeError(f"cannot specialize {type(obj).__name__}")


def chebyshev_u(n, t):
    """Chebyshev polynomial of the second kind U_n evaluated at a ring
    element t, via U_{-1} = 0, U_0 = 1, U_n = 2t U_{n-1} - U_{n-2}.

    Works over any ring with +, -, * (including RatFunc arguments).
    """
    if n < -1:
        raise ValueError("index must be >= -1")
    if n == -1:
        return 0
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, 2 * t * cur - prev
    return cur


def chebyshev_u_list(n, t):
    """[U_{-1}(t), U_0(t), ..., U_n(t)] computed in one sweep."""
    out = [0, 1]
    for _ in range(n):
        out.append(2 * t * out[-1] - out[-2])
    return out


def alt_cheb_sum(n, t):
    """The alternating sum U_0(t) - U_1(t) + ... + (-1)^n U_n(t)."""
    prev, cur = 0, 1
    total = 1
    sign = 1
    for _ in range(n):
        prev, cur = cur, 2 * t * cur - prev
        sign = -sign
        total = total + sign * cur
    return total


def alt_cheb_sum_closed(n, t):
    """Closed form of alt_cheb_sum as an unreduced (numerator, denominator)
    pair: ((-1)^n (U_{n+1}(t) + U_n(t)) + 1, 2(1 + t)).

    Returned unreduced because the denominator vanishes at t = -1; callers
    in a field may divide, everyone else cross-multiplies.
    """
    us = chebyshev_u_list(n + 1, t)
    sign = 1 if n % 2 == 0 else -1
    return sign * (us[n + 2] + us[n + 1]) + 1, 2 * (1 + t)


class SquareMatrix:
    """Immutable square matrix over an arbitrary ring, stored as row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix is not square")

    @classmethod
    def identity(cls, n, one=1, zero=0):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __repr__(self):
        return f"SquareMatrix({[list(r) for r in self.rows]})"


def det_exact(m: SquareMatrix):
    """Exact determinant over any commutative ring.

    Expansion by minors along successive rows, memoized on the surviving
    column set, so no division is ever performed; sparse matrices are
    cheap because zero entries short-circuit.
    """
    n = m.n
    rows = m.rows
    memo = {}

    def minor(cols):
        if not cols:
            return 1
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = n - len(cols)
        acc = 0
        for idx, c in enumerate(cols):
            a = rows[r][c]
            if a == 0:
                continue
            term = a * minor(cols[:idx] + cols[idx + 1 :])
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    n = a.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = acc + a.rows[i][k] * b.rows[k][j]
            row.append(acc)
        out.append(row)
    return SquareMatrix(out)
