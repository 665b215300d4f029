"""Exact root system realizations for the reflection groups of the engine.

Unit realizations (all roots scaled to norm 1, coordinates in a cyclotomic
field) are used for G2, F4, H3, H4 and the dihedral I2(n): these feed both
the Weyl group build and the Clifford/Pin machinery, where only normalized
roots enter.  E6 uses the integer root-basis realization (its Pin cover is
out of scope, so no unit coordinates are needed).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .cyclotomic import Cyc, CycField


@dataclass
class RootSystemSpec:
    name: str
    rank: int
    field: CycField | None  # None marks the integer root-basis realization
    simple_roots: list[tuple]
    coxeter_matrix: list[list[int]]
    gram: list[list] | None = None  # only for integer realizations

    def bilinear(self, u: tuple, v: tuple):
        if self.field is not None:
            total = self.field.zero
            for a, b in zip(u, v):
                total = total + a * b
            return total
        total = 0
        for i in range(self.rank):
            for j in range(self.rank):
                total += u[i] * self.gram[i][j] * v[j]
        return total

    def reflect(self, alpha: tuple, v: tuple) -> tuple:
        """Reflection of v in the hyperplane orthogonal to the root alpha."""
        if self.field is not None:
            # unit realization: s_a(v) = v - 2 B(a,v) a
            c = self.bilinear(alpha, v) * 2
            return tuple(x - c * a for x, a in zip(v, alpha))
        num = 2 * self.bilinear(alpha, v)
        den = self.bilinear(alpha, alpha)
        if num % den:
            raise ArithmeticError("non-integral reflection coefficient")
        c = num // den
        return tuple(x - c * a for x, a in zip(v, alpha))

    def is_unit(self) -> bool:
        return self.field is not None


def _dihedral_spec(name: str, n: int) -> RootSystemSpec:
    m = 4 * n if n % 2 else 2 * n
    if m % 4:
        m *= 2
    f = CycField(m)
    u1 = (f.one, f.zero)
    # second simple root at the obtuse angle pi - pi/n
    u2 = (f.cos_pi(n - 1, n), f.sin_pi(n - 1, n))
    cox = [[1, n], [n, 1]]
    return RootSystemSpec(name, 2, f, [u1, u2], cox)


def i2_spec(n: int) -> RootSystemSpec:
    if n < 3:
        raise ValueError("I2(n) needs n >= 3")
    return _dihedral_spec(f"I2({n})", n)


def g2_spec() -> RootSystemSpec:
    spec = _dihedral_spec("G2", 6)
    return spec


def f4_spec() -> RootSystemSpec:
    f = CycField(8)
    half = Fraction(1, 2)
    inv_sqrt2 = (f.zeta(1) + f.zeta(-1)) / 2  # sqrt(2)/2
    zero, one = f.zero, f.one

    def vec(*qs):
        return tuple(f.from_rational(Fraction(q)) for q in qs)

    # Bourbaki simple roots, long ones scaled to unit norm
    a1 = tuple(x * inv_sqrt2 for x in vec(0, 1, -1, 0))
    a2 = tuple(x * inv_sqrt2 for x in vec(0, 0, 1, -1))
    a3 = vec(0, 0, 0, 1)
    a4 = vec(half, -half, -half, -half)
    cox = [
        [1, 3, 2, 2],
        [3, 1, 4, 2],
        [2, 4, 1, 3],
        [2, 2, 3, 1],
    ]
    return RootSystemSpec("F4", 4, f, [a1, a2, a3, a4], cox)


def h3_spec() -> RootSystemSpec:
    f = CycField(20)
    zero = f.zero
    c5 = f.cos_pi(1, 5)
    s5 = f.sin_pi(1, 5)
    tau = c5 * 2
    sqrt5 = tau * 2 - 1
    u1 = (f.one, zero, zero)
    u2 = (-c5, s5, zero)
    b3 = -(s5 * 2).inverse()
    c3 = (s5 * 2) / sqrt5
    u3 = (zero, b3, c3)
    cox = [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
    return RootSystemSpec("H3", 3, f, [u1, u2, u3], cox)


def h4_spec() -> RootSystemSpec:
    f = CycField(20)
    zero = f.zero
    h3 = h3_spec()
    u1, u2, u3 = (tuple(v) + (zero,) for v in h3.simple_roots)
    c3 = u3[2]
    x = -(c3 * 2).inverse()
    tau = f.cos_pi(1, 5) * 2
    sqrt5 = tau * 2 - 1
    y = (sqrt5 - 1) / 4
    u4 = (zero, zero, x, y)
    cox = [
        [1, 5, 2, 2],
        [5, 1, 3, 2],
        [2, 3, 1, 3],
        [2, 2, 3, 1],
    ]
    return RootSystemSpec("H4", 4, f, [u1, u2, u3, u4], cox)


def e6_spec() -> RootSystemSpec:
    # Bourbaki numbering: chain 1-3-4-5-6 with node 2 attached to 4
    edges = {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}
    cox = [[1 if i == j else 2 for j in range(6)] for i in range(6)]
    gram = [[2 if i == j else 0 for j in range(6)] for i in range(6)]
    for a, b in edges:
        cox[a - 1][b - 1] = cox[b - 1][a - 1] = 3
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = -1
    simples = [tuple(1 if j == i else 0 for j in range(6)) for i in range(6)]
    return RootSystemSpec("E6", 6, None, simples, cox, gram)


SPEC_BUILDERS = {
    "G2": g2_spec,
    "F4": f4_spec,
    "H3": h3_spec,
    "H4": h4_spec,
    "E6": e6_spec,
}

EXPECTED_ORDER = {"G2": 12, "F4": 1152, "E6": 51840, "H3": 120, "H4": 14400}
EXPECTED_NROOTS = {"G2": 12, "F4": 48, "E6": 72, "H3": 30, "H4": 120}


def get_spec(name: str) -> RootSystemSpec:
    name = name.upper()
    if name.startswith("I2(") and name.endswith(")"):
        return i2_spec(int(name[3:-1]))
    if name in SPEC_BUILDERS:
        return SPEC_BUILDERS[name]()
    raise ValueError(f"unsupported root system {name!r}")
