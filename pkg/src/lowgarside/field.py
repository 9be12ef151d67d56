"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).

Every value -cos(pi/m) needed by the bilinear form of a Coxeter system
lives in Q(theta) with theta = 2cos(pi/N) as soon as m divides N.  Elements
are stored as polynomials in theta of degree < d with a common integer
denominator.  Because theta is an algebraic integer, its minimal polynomial
is monic with integer coefficients and products can be reduced without
leaving the integers.

Signs are exact: zero is read off the coefficient vector, and the sign of a
nonzero value is found by interval evaluation on an isolating interval of
theta, refined by bisection until the value interval misses 0.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class DivisionByZero(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (coefficient lists, low degree first)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    r = _trim(a[: len(b) - 1] or [Fraction(0)])
    return _trim(q), r


def _poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_deriv(p):
    return _trim([k * c for k, c in enumerate(p)][1:] or [0])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for k in range(1, n):
        if n % k == 0:
            q, r = _poly_divmod(num, cyclotomic(k))
            assert all(x == 0 for x in r)
            num = q
    return tuple(int(x) for x in num)


def chebyshev_sum(k: int) -> list[int]:
    """Polynomial C_k with x^k + x^-k = C_k(x + 1/x)."""
    if k == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def theta_minimal_polynomial(N: int) -> tuple[int, ...]:
    """Monic minimal polynomial of 2cos(pi/N), via x^-d Phi_2N(x) in x + 1/x."""
    if N == 1:
        return (2, 1)  # theta = -2
    phi = cyclotomic(2 * N)
    d = (len(phi) - 1) // 2
    out = [0] * (d + 1)
    for k in range(d + 1):
        a = phi[d + k]
        if not a:
            continue
        term = [1] if k == 0 else chebyshev_sum(k)
        for i, c in enumerate(term):
            out[i] += a * c
    assert out[-1] == 1
    return tuple(out)


def _sturm_count(p, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi]."""
    seq = [[Fraction(c) for c in p], [Fraction(c) for c in _poly_deriv(p)]]
    while len(seq[-1]) > 1 or seq[-1][0] != 0:
        _, r = _poly_divmod(seq[-2], seq[-1])
        if r == [0]:
            break
        seq.append([-c for c in r])

    def changes(x):
        vals = [v for v in (_poly_eval(q, x) for q in seq) if v != 0]
        return sum(1 for a, b in zip(vals, vals[1:]) if (a < 0) != (b < 0))

    return changes(lo) - changes(hi)


# ---------------------------------------------------------------------------


class ScalarField:
    """The field Q(theta), theta = 2cos(pi/N), with an isolating interval."""

    def __init__(self, N: int = 1):
        if N < 1:
            raise ValueError("N must be a positive integer")
        self.N = N
        self.minpoly = theta_minimal_polynomial(N)
        self.degree = len(self.minpoly) - 1
        self.theta_float = 2 * math.cos(math.pi / N)
        self.interval = self._isolate()
        self._signs: dict[tuple[int, ...], int] = {}
        self.zero = Scalar(self, (0,) * self.degree, 1)
        self.one = self.from_rational(1)

    def __repr__(self):
        return f"ScalarField(N={self.N}, degree={self.degree})"

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.N == self.N

    def __hash__(self):
        return hash(("ScalarField", self.N))

    def _isolate(self) -> tuple[Fraction, Fraction]:
        if self.degree == 1:
            root = Fraction(-self.minpoly[0])
            return root, root
        radius = Fraction(1, 2**40)
        centre = Fraction(self.theta_float)
        while True:
            lo, hi = centre - radius, centre + radius
            a, b = _poly_eval(self.minpoly, lo), _poly_eval(self.minpoly, hi)
            if a * b < 0 and _sturm_count(self.minpoly, lo, hi) == 1:
                return lo, hi
            radius /= 2

    @property
    def theta(self) -> "Scalar":
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        return self.from_poly([0, 1])

    def from_rational(self, q) -> "Scalar":
        q = Fraction(q)
        return Scalar(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_poly(self, coeffs) -> "Scalar":
        """The value sum coeffs[k] * theta**k, reduced mod the minimal polynomial."""
        coeffs = [Fraction(c) for c in coeffs] or [Fraction(0)]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        return Scalar(self, self._reduce(ints), den)

    def two_cos_pi_over(self, m: int) -> "Scalar":
        """2cos(pi/m) as an element of this field (m = 2 or m divides N)."""
        if m == 2:
            return self.zero
        if m == 1:
            return self.from_rational(-2)
        if self.N % m:
            raise ValueError(f"2cos(pi/{m}) does not lie in Q(2cos(pi/{self.N}))")
        k = self.N // m
        if self.degree == 1:
            return self.from_rational(round(2 * math.cos(math.pi / m)))
        return self.from_poly(chebyshev_sum(k))

    def _reduce(self, ints) -> tuple[int, ...]:
        d = self.degree
        mp = self.minpoly
        ints = list(ints)
        for k in range(len(ints) - 1, d - 1, -1):
            c = ints[k]
            if c:
                base = k - d
                for j in range(d):
                    ints[base + j] -= c * mp[j]
        ints = ints[:d]
        ints += [0] * (d - len(ints))
        return tuple(ints)

    def sign_of(self, num: tuple[int, ...]) -> int:
        if self.degree == 1:
            return (num[0] > 0) - (num[0] < 0)
        if not any(num):
            return 0
        cached = self._signs.get(num)
        if cached is not None:
            return cached
        lo, hi = self.interval
        while True:
            vlo, vhi = _interval_eval(num, lo, hi)
            if vlo > 0:
                s = 1
                break
            if vhi < 0:
                s = -1
                break
            mid = (lo + hi) / 2
            pm = _poly_eval(self.minpoly, mid)
            if pm == 0:
                lo = hi = mid
            elif (pm < 0) == (_poly_eval(self.minpoly, lo) < 0):
                lo = mid
            else:
                hi = mid
        self._signs[num] = s
        return s


def _interval_eval(num, lo, hi):
    # theta > 0 whenever the degree exceeds 1, so powers are monotone
    vlo = vhi = Fraction(0)
    plo = phi = Fraction(1)
    for c in num:
        if c > 0:
            vlo += c * plo
            vhi += c * phi
        elif c < 0:
            vlo += c * phi
            vhi += c * plo
        plo *= lo
        phi *= hi
    return vlo, vhi


class Scalar:
    """An element of a ScalarField: (num[0] + num[1] theta + ...) / den."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: ScalarField, num: tuple[int, ...], den: int = 1):
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = tuple(-x for x in num)
            den = -den
        g = den
        for x in num:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            num = tuple(x // g for x in num)
            den //= g
        self.field = field
        self.num = num
        self.den = den

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.from_rational(other)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Scalar(self.field, tuple(a + b for a, b in zip(self.num, other.num)), self.den)
        return Scalar(
            self.field,
            tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num)),
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Scalar(self.field, tuple(a * other for a in self.num), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.degree == 1:
            return Scalar(self.field, (self.num[0] * other.num[0],), self.den * other.den)
        prod = _poly_mul(self.num, other.num)
        return Scalar(self.field, self.field._reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        f = self.field
        if f.degree == 1:
            return Scalar(f, (self.den,), self.num[0])
        # extended Euclid: find u with u * a = 1 mod minpoly
        r0, r1 = [Fraction(c) for c in f.minpoly], _trim([Fraction(c) for c in self.num])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, r = _poly_divmod(r0, r1)
            qs = _poly_mul(q, s1)
            width = max(len(s0), len(qs))
            s2 = _trim([(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(width)])
            r0, r1, s0, s1 = r1, r, s1, s2
        # r0 is a nonzero constant since the minimal polynomial is irreducible
        assert len(r0) == 1
        u = [c / r0[0] for c in s0]
        return f.from_poly(u) * self.den

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparison --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def sign(self) -> int:
        return self.field.sign_of(self.num)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den and self.field == other.field
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return self.num[0] * q.denominator == q.numerator * self.den and not any(self.num[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.num[1:]):
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        t = self.field.theta_float
        return sum(c * t**k for k, c in enumerate(self.num)) / self.den

    def coefficients(self) -> tuple[Fraction, ...]:
        """Exact rational coefficients in the power basis of theta."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def __repr__(self):
        if self.field.degree == 1:
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.coefficients()):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}")
        return "(" + (" + ".join(terms) or "0") + ")"
