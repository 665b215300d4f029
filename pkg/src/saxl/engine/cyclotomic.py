"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1} with a
shared integer denominator, so every operation is integer arithmetic plus a
gcd normalization.  Algebraic integers have denominator 1 in this basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic); remainder must vanish."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(num) - 1, len(den) - 2, -1):
        c = num[k]
        if c == 0:
            continue
        shift = k - (len(den) - 1)
        out[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = poly_divmod_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CycField:
    """The field Q(zeta_N), with precomputed reduction data."""

    _cache: dict[int, "CycField"] = {}

    def __new__(cls, n: int):
        if n in cls._cache:
            return cls._cache[n]
        self = super().__new__(cls)
        self.n = n
        phi_poly = cyclotomic_polynomial(n)
        self.degree = len(phi_poly) - 1
        d = self.degree
        # red[k] expresses zeta^(d+k) in the power basis, k = 0..d-2
        red = []
        cur = [-c for c in phi_poly[:-1]]  # zeta^d
        red.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(d):
                    nxt[i] += top * red[0][i]
            cur = nxt
            red.append(tuple(cur))
        self._red = tuple(red)
        # power[k] = coefficients of zeta^k for k = 0..n-1
        powers = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(n):
            powers.append(tuple(vec))
            top = vec[d - 1]
            nxt = [0] * d
            for i in range(d - 1):
                nxt[i + 1] = vec[i]
            if top:
                for i in range(d):
                    nxt[i] += top * red[0][i]
            vec = nxt
        self._powers = tuple(powers)
        self.zero = Cyc(self, (0,) * d, 1)
        self.one = Cyc(self, (1,) + (0,) * (d - 1), 1)
        cls._cache[n] = self
        return self

    def zeta(self, k: int = 1) -> "Cyc":
        return Cyc(self, self._powers[k % self.n], 1)

    def from_rational(self, q) -> "Cyc":
        q = Fraction(q)
        vec = (q.numerator,) + (0,) * (self.degree - 1)
        return Cyc(self, vec, q.denominator)

    def from_int(self, a: int) -> "Cyc":
        return Cyc(self, (a,) + (0,) * (self.degree - 1), 1)

    def cos_pi(self, p: int, q: int) -> "Cyc":
        """cos(p*pi/q); needs 2q | N."""
        if self.n % (2 * q):
            raise ValueError(f"2*{q} does not divide {self.n}")
        step = self.n // (2 * q)
        z = self.zeta(p * step)
        zb = self.zeta(-p * step)
        return (z + zb) / 2

    def sin_pi(self, p: int, q: int) -> "Cyc":
        """sin(p*pi/q); needs 2q | N and 4 | N."""
        if self.n % 4:
            raise ValueError("field needs i for sines")
        if self.n % (2 * q):
            raise ValueError(f"2*{q} does not divide {self.n}")
        step = self.n // (2 * q)
        z = self.zeta(p * step)
        zb = self.zeta(-p * step)
        i = self.zeta(self.n // 4)
        return (z - zb) / (2 * i)

    @property
    def i(self) -> "Cyc":
        if self.n % 4:
            raise ValueError("field does not contain i")
        return self.zeta(self.n // 4)

    def __repr__(self):
        return f"CycField({self.n})"


class Cyc:
    """An element of Q(zeta_N): integer coefficient vector over a denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycField, num, den: int = 1, normalize: bool = True):
        self.field = field
        if normalize:
            if den < 0:
                num = tuple(-a for a in num)
                den = -den
            g = den
            for a in num:
                g = gcd(g, a)
                if g == 1:
                    break
            if g > 1:
                num = tuple(a // g for a in num)
                den //= g
        self.num = tuple(num)
        self.den = den

    # -- constructors --------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Cyc):
            if other.field is not self.field:
                raise ValueError("mixed cyclotomic fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_rational(other)
        return NotImplemented

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.den * o.den
        num = tuple(
            a * o.den + b * self.den for a, b in zip(self.num, o.num)
        )
        return Cyc(self.field, num, d)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.num), self.den, normalize=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.degree
        a, b = self.num, o.num
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        red = self.field._red
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return Cyc(self.field, tuple(out), self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return Cyc(self.field, self.num, self.den * other)
        if isinstance(other, Fraction):
            return Cyc(
                self.field,
                tuple(a * other.denominator for a in self.num),
                self.den * other.numerator,
            )
        if isinstance(other, Cyc):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "Cyc":
        """Field inverse via linear algebra over Q in the power basis."""
        d = self.field.degree
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        # columns: self * zeta^j in power basis
        cols = []
        cur = self
        for j in range(d):
            cols.append(cur)
            if j + 1 < d:
                cur = cur * self.field.zeta(1)
        mat = [
            [Fraction(c.num[i], c.den) for c in cols] for i in range(d)
        ]
        target = [Fraction(1 if i == 0 else 0) for i in range(d)]
        sol = _solve_fractions(mat, target)
        den = 1
        for s in sol:
            den = den * s.denominator // gcd(den, s.denominator)
        num = tuple(int(s * den) for s in sol)
        return Cyc(self.field, num, den)

    def conj(self) -> "Cyc":
        """Complex conjugation zeta -> zeta^{-1}."""
        f = self.field
        d = f.degree
        out = [0] * d
        for j, a in enumerate(self.num):
            if a:
                row = f._powers[(f.n - j) % f.n]
                for i in range(d):
                    out[i] += a * row[i]
        return Cyc(f, tuple(out), self.den)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates ------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def integer(self) -> int:
        q = self.rational()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return (
            self.field is other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.field.n, self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return str(self.rational())
        terms = []
        for j, a in enumerate(self.num):
            if a:
                t = f"{a}" if j == 0 else (f"{a}*z^{j}" if j > 1 else f"{a}*z")
                terms.append(t)
        s = " + ".join(terms).replace("+ -", "- ")
        return f"({s})/{self.den}" if self.den != 1 else s

    def key(self):
        """Canonical hashable key (for deterministic sorting)."""
        return (self.num, self.den)


def _solve_fractions(mat, vec):
    """Gaussian elimination over Q; mat is modified in place."""
    n = len(vec)
    rows = [list(r) + [v] for r, v in zip(mat, vec)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular system")
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]
