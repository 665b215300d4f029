"""Character labels phi_{d,b}: dimension plus b-invariant.

The b-invariant of a character is the lowest degree in which it occurs in
the symmetric algebra of the reflection representation (equivalently in the
coinvariant algebra); it is computed exactly from the graded multiplicity
series, whose class data is 1/det(1 - q w) expanded over the group's field.
Characters sharing (d, b) are distinguished by primes; prime assignment
within a pair is initially canonical (table order) and may be swapped by
the golden-data pinning step in the appendix verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dixon import CharacterTableExact
from .group import ReflectionGroup


def _series_inverse(poly, length: int, zero, one):
    """First `length` coefficients of 1/poly, poly[0] = 1."""
    out = [one] + [zero] * (length - 1)
    for m in range(1, length):
        acc = zero
        for k in range(1, min(m, len(poly) - 1) + 1):
            acc = acc + poly[k] * out[m - k]
        out[m] = -acc
    return out


def sym_power_multiplicities(
    group: ReflectionGroup, table: CharacterTableExact, max_degree: int
) -> list[list[int]]:
    """mult[a][m] = multiplicity of character a in Sym^m(V), m <= max_degree."""
    unit = group.spec.is_unit()
    if unit:
        f = group.spec.field
        zero, one = f.zero, f.one
    else:
        zero, one = 0, 1
    series = []
    for cid in range(group.num_classes):
        cp = group.class_charpoly(cid)  # det(xI - M), low degree first
        det_poly = list(reversed(cp))  # det(I - qM) coefficients in q
        series.append(_series_inverse(det_poly, max_degree + 1, zero, one))

    K = group.num_classes
    out = []
    for a in range(K):
        row = []
        chi = table.chars[a]
        for m in range(max_degree + 1):
            total = table.field.zero
            for j in range(K):
                coeff = series[j][m]
                if unit:
                    if coeff.is_zero():
                        continue
                    # series coefficients live in the group field; character
                    # values in the table field -- both are rational here or
                    # the product is taken inside the common table field
                    term = chi[table.inverse_class[j]] * _to_table_field(
                        coeff, table.field, group
                    )
                else:
                    if coeff == 0:
                        continue
                    term = chi[table.inverse_class[j]] * coeff
                total = total + term * table.class_sizes[j]
            q = total.rational() / group.order
            if q.denominator != 1 or q < 0:
                raise ArithmeticError("graded multiplicity not a nonneg integer")
            row.append(q.numerator)
        out.append(row)
    return out


def _to_table_field(value, table_field, group):
    """Move a group-field element into the table field (N's are compatible)."""
    gf = group.spec.field
    if gf is table_field:
        return value
    if table_field.n % gf.n == 0:
        step = table_field.n // gf.n
        out = table_field.zero
        for j, a in enumerate(value.num):
            if a:
                out = out + table_field.zeta(j * step) * a
        return out / value.den
    if value.is_rational():
        return table_field.from_rational(value.rational())
    raise ValueError(f"cannot embed Q(zeta_{gf.n}) into Q(zeta_{table_field.n})")


def b_invariants(group: ReflectionGroup, table: CharacterTableExact) -> list[int]:
    npos = len(group.positive)
    mult = sym_power_multiplicities(group, table, npos)
    out = []
    for a in range(table.num_classes):
        b = next((m for m, v in enumerate(mult[a]) if v > 0), None)
        if b is None:
            raise ArithmeticError(f"character {a} missing from the coinvariant algebra")
        out.append(b)
    return out


@dataclass(frozen=True)
class CharLabel:
    dim: int
    b: int
    prime: int = 0  # 0 = unprimed, 1 = single prime, 2 = double prime

    def __str__(self) -> str:
        return f"phi{{{self.dim},{self.b}}}" + "'" * self.prime

    @staticmethod
    def parse(s: str) -> "CharLabel":
        base, primes = s.rstrip("'"), len(s) - len(s.rstrip("'"))
        inner = base[base.index("{") + 1 : base.index("}")]
        d, b = (int(x) for x in inner.split(","))
        return CharLabel(d, b, primes)


def label_characters(group: ReflectionGroup, table: CharacterTableExact) -> list[CharLabel]:
    """Assign phi_{d,b} labels; duplicate (d,b) pairs get primes in table order."""
    bs = b_invariants(group, table)
    pairs = list(zip(table.degrees, bs))
    counts: dict[tuple[int, int], int] = {}
    for p in pairs:
        counts[p] = counts.get(p, 0) + 1
    if any(c > 2 for c in counts.values()):
        raise ArithmeticError("more than two characters share (dim, b)")
    seen: dict[tuple[int, int], int] = {}
    labels = []
    for d, b in pairs:
        if counts[(d, b)] == 1:
            labels.append(CharLabel(d, b))
        else:
            seen[(d, b)] = seen.get((d, b), 0) + 1
            labels.append(CharLabel(d, b, seen[(d, b)]))
    table.labels = [str(l) for l in labels]
    return labels


def swap_primes(table: CharacterTableExact, labels: list[CharLabel], d: int, b: int):
    """Swap which character carries phi' vs phi'' for one (d, b) pair."""
    idx = [i for i, l in enumerate(labels) if l.dim == d and l.b == b]
    if len(idx) != 2:
        raise ValueError(f"no primed pair for ({d},{b})")
    i, j = idx
    labels[i], labels[j] = labels[j], labels[i]
    table.labels = [str(l) for l in labels]
