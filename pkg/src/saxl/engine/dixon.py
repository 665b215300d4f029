"""Dixon-Schneider character tables: solve mod p, lift to Q(zeta_N).

The class-sum eigenvector method runs over GF(p) for the smallest prime
p = 1 (mod exponent) exceeding the group order (deterministic, so tables
are byte-stable).  Character values are recovered as eigenvalue
multiplicity sums mu_l zeta^l, which are exact algebraic integers; both
orthogonality relations are then verified exactly in the cyclotomic field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import Cyc, CycField
from .modp import (
    charpoly_mod,
    dixon_prime,
    nullspace,
    poly_roots_mod,
    primitive_root,
    solve_in_span,
    sqrt_mod,
)


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@dataclass
class CharacterTableExact:
    name: str
    field: CycField
    order: int
    class_sizes: list[int]
    class_orders: list[int]
    identity_class: int
    inverse_class: list[int]
    degrees: list[int]
    chars: list[tuple[Cyc, ...]]
    labels: list[str] | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)

    def inner(self, f, g) -> int:
        """<f, g> with g conjugated via the inverse-class permutation."""
        total = self.field.zero
        for j, s in enumerate(self.class_sizes):
            total = total + f[j] * g[self.inverse_class[j]] * s
        q = total.rational() / self.order
        if q.denominator != 1:
            raise ArithmeticError("inner product is not an integer")
        return q.numerator

    def row_of_degree_one(self):
        return [i for i, d in enumerate(self.degrees) if d == 1]

    def verify(self) -> None:
        if sum(d * d for d in self.degrees) != self.order:
            raise ArithmeticError("degree sum check failed")
        K = self.num_classes
        rational = all(
            v.is_rational() for row in self.chars for v in row
        )
        if rational:
            rows = [[v.rational() for v in row] for row in self.chars]
            for a in range(K):
                for b in range(a, K):
                    tot = sum(
                        s * rows[a][j] * rows[b][self.inverse_class[j]]
                        for j, s in enumerate(self.class_sizes)
                    )
                    if tot != (self.order if a == b else 0):
                        raise ArithmeticError(f"row orthogonality failed {a},{b}")
            for j in range(K):
                for k in range(j, K):
                    tot = sum(
                        rows[a][j] * rows[a][self.inverse_class[k]] for a in range(K)
                    )
                    want = (
                        Fraction(self.order, self.class_sizes[j]) if j == k else 0
                    )
                    if tot != want:
                        raise ArithmeticError(f"column orthogonality failed {j},{k}")
            return
        for a in range(K):
            for b in range(a, K):
                tot = self.field.zero
                for j, s in enumerate(self.class_sizes):
                    tot = tot + self.chars[a][j] * self.chars[b][self.inverse_class[j]] * s
                if not tot.is_rational() or tot.rational() != (
                    self.order if a == b else 0
                ):
                    raise ArithmeticError(f"row orthogonality failed {a},{b}")
        for j in range(K):
            for k in range(j, K):
                tot = self.field.zero
                for a in range(K):
                    tot = tot + self.chars[a][j] * self.chars[a][self.inverse_class[k]]
                want = Fraction(self.order, self.class_sizes[j]) if j == k else Fraction(0)
                if not tot.is_rational() or tot.rational() != want:
                    raise ArithmeticError(f"column orthogonality failed {j},{k}")


def dixon_character_table(gd, name: str = "") -> CharacterTableExact:
    """Compute the full irreducible table of a finite group.

    `gd` provides: order, num_classes, class_sizes, class_orders,
    identity_class, inverse_class, power_class, class_matrix(i).
    """
    exponent = _lcm(gd.class_orders)
    p = dixon_prime(gd.order, exponent)
    w = primitive_root(p)
    K = gd.num_classes

    subspaces = [[[1 if i == j else 0 for j in range(K)] for i in range(K)]]
    finished: list[list[int]] = []
    order_of_use = sorted(
        (i for i in range(K) if i != gd.identity_class),
        key=lambda i: (gd.class_sizes[i], i),
    )
    for i in order_of_use:
        if not subspaces:
            break
        M = gd.class_matrix(i)
        next_spaces = []
        for basis in subspaces:
            d = len(basis)
            images = [
                [sum(M[k][j] * vec[j] for j in range(K)) % p for k in range(K)]
                for vec in basis
            ]
            coords = solve_in_span(
                [list(v) for v in basis], [list(im) for im in images], p
            )
            R = [[coords[l][t] for t in range(d)] for l in range(d)]
            roots = poly_roots_mod(charpoly_mod(R, p), p)
            for lam in sorted(roots):
                shifted = [
                    [(R[a][b] - (lam if a == b else 0)) % p for b in range(d)]
                    for a in range(d)
                ]
                kernel = nullspace(shifted, p)
                sub_basis = [
                    [
                        sum(combo[l] * basis[l][j] for l in range(d)) % p
                        for j in range(K)
                    ]
                    for combo in kernel
                ]
                if len(sub_basis) == 1:
                    finished.append(sub_basis[0])
                elif sub_basis:
                    next_spaces.append(sub_basis)
        subspaces = next_spaces
    if subspaces:
        raise ArithmeticError("class matrices failed to split the class algebra")
    if len(finished) != K:
        raise ArithmeticError(f"found {len(finished)} eigenvectors, expected {K}")

    # normalize so that the identity-class coordinate is 1
    idc = gd.identity_class
    omegas = []
    for v in finished:
        if v[idc] % p == 0:
            raise ArithmeticError("eigenvector vanishes on the identity class")
        inv = pow(v[idc], p - 2, p)
        omegas.append([x * inv % p for x in v])

    # degrees and mod-p character values
    size_inv = [pow(s % p, p - 2, p) for s in gd.class_sizes]
    characters_mod = []
    degrees = []
    bound = isqrt(gd.order)
    for v in omegas:
        s = sum(v[j] * v[gd.inverse_class[j]] * size_inv[j] for j in range(K)) % p
        d2 = gd.order % p * pow(s, p - 2, p) % p
        d = sqrt_mod(d2, p)
        d = min(d, p - d)
        if d > bound or d == 0:
            raise ArithmeticError(f"degree recovery failed: {d}")
        degrees.append(d)
        characters_mod.append([d * v[j] % p * size_inv[j] % p for j in range(K)])

    # lift to the cyclotomic field
    field = CycField(exponent)
    zeta_pows = field._powers
    deg = field.degree
    chars = []
    for chi_mod, d in zip(characters_mod, degrees):
        row = []
        for j in range(K):
            m = gd.class_orders[j]
            om = pow(w, (p - 1) // m, p)
            om_inv = pow(om, p - 2, p)
            m_inv = pow(m, p - 2, p)
            vec = [0] * deg
            for l in range(m):
                total = 0
                for t in range(m):
                    total += chi_mod[gd.power_class[j][t]] * pow(om_inv, l * t, p)
                mu = total % p * m_inv % p
                if mu > d:
                    raise ArithmeticError(f"multiplicity lift out of range: {mu}")
                if mu:
                    zrow = zeta_pows[(l * (exponent // m)) % exponent]
                    for idx in range(deg):
                        vec[idx] += mu * zrow[idx]
            row.append(Cyc(field, tuple(vec), 1))
        chars.append(tuple(row))

    order_key = sorted(
        range(K),
        key=lambda a: (degrees[a], [c.key() for c in chars[a]]),
    )
    degrees = [degrees[a] for a in order_key]
    chars = [chars[a] for a in order_key]

    table = CharacterTableExact(
        name=name,
        field=field,
        order=gd.order,
        class_sizes=list(gd.class_sizes),
        class_orders=list(gd.class_orders),
        identity_class=gd.identity_class,
        inverse_class=list(gd.inverse_class),
        degrees=degrees,
        chars=chars,
    )
    table.verify()
    for d, row in zip(table.degrees, table.chars):
        if not row[idc].is_integer() or row[idc].integer() != d:
            raise ArithmeticError("degree column mismatch after lift")
    return table
