"""Nilpotent orbit combinatorics for the classical types.

Orbits are labelled by partitions subject to the type's parity condition:
type A uses all partitions of n, type B partitions of 2n+1 whose even parts
have even multiplicity, type C partitions of 2n whose odd parts have even
multiplicity, and type D partitions of 2n like type B except that "very
even" partitions (all parts even) label two orbits tagged I and II.

Closure order is dominance order on partitions, except that the two orbits
attached to a very even type D partition are incomparable.  The duality map
is transpose followed by the type's collapse; in type D it swaps the
numerals I and II exactly when the half-size n is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Partition,
    check_partition,
    dominance_compare,
    dominance_leq,
    format_partition,
    parse_partition,
    partitions,
    transpose,
)

VALID_TYPES = ("A", "B", "C", "D")


def in_parity_set(lam: Partition, typ: str) -> bool:
    """Membership in the parameterizing partition set of the given type."""
    if typ == "A":
        return True
    if typ in ("B", "D"):
        bad_parity = 0  # even parts must have even multiplicity
    elif typ == "C":
        bad_parity = 1  # odd parts must have even multiplicity
    else:
        raise ValueError(f"unknown type {typ!r}")
    for p in set(lam):
        if p % 2 == bad_parity and lam.count(p) % 2 != 0:
            return False
    return True


def is_very_even(lam: Partition) -> bool:
    return bool(lam) and all(p % 2 == 0 for p in lam)


def _expected_size(typ: str, lam: Partition) -> None:
    m = sum(lam)
    if typ == "B" and m % 2 == 0:
        raise ValueError(f"type B needs odd size, got {m}")
    if typ in ("C", "D") and m % 2 == 1:
        raise ValueError(f"type {typ} needs even size, got {m}")


@dataclass(frozen=True, order=True)
class OrbitLabel:
    typ: str
    partition: Partition
    numeral: str | None = None  # "I" / "II", type D very even only

    def __post_init__(self):
        if self.typ not in VALID_TYPES:
            raise ValueError(f"unknown type {self.typ!r}")
        lam = check_partition(self.partition)
        object.__setattr__(self, "partition", lam)
        _expected_size(self.typ, lam)
        if not in_parity_set(lam, self.typ):
            raise ValueError(f"{lam} not a type {self.typ} orbit partition")
        very_even = self.typ == "D" and is_very_even(lam)
        if very_even and self.numeral not in ("I", "II"):
            raise ValueError(f"very even type D partition {lam} needs a numeral")
        if not very_even and self.numeral is not None:
            raise ValueError("numeral only allowed for very even type D partitions")

    def __str__(self) -> str:
        s = f"{self.typ}:{format_partition(self.partition)}"
        return f"{s}:{self.numeral}" if self.numeral else s

    @staticmethod
    def parse(s: str) -> "OrbitLabel":
        parts = s.split(":")
        if len(parts) == 2:
            return OrbitLabel(parts[0], parse_partition(parts[1]))
        if len(parts) == 3:
            return OrbitLabel(parts[0], parse_partition(parts[1]), parts[2])
        raise ValueError(f"bad orbit label {s!r}")


def collapse(lam: Partition, typ: str) -> Partition:
    """Largest partition of the type's parity set dominated by lam.

    Implemented by the iterative replacement rule: take the largest part q
    of the wrong parity with odd multiplicity, lower its last occurrence to
    q - 1 and raise the first later part r < q - 1 (possibly a trailing
    zero) to r + 1, then repeat.
    """
    if typ == "A":
        return check_partition(lam)
    if typ not in VALID_TYPES:
        raise ValueError(f"unknown type {typ!r}")
    _expected_size(typ, lam)
    bad_parity = 1 if typ == "C" else 0
    parts = list(lam)
    while True:
        cur = check_partition(parts)
        if in_parity_set(cur, typ):
            return cur
        parts = list(cur)
        q = max(
            p for p in set(parts) if p % 2 == bad_parity and parts.count(p) % 2 != 0
        )
        last_q = len(parts) - 1 - parts[::-1].index(q)
        parts[last_q] = q - 1
        for j in range(last_q + 1, len(parts) + 1):
            r = parts[j] if j < len(parts) else 0
            if r < q - 1:
                if j < len(parts):
                    parts[j] = r + 1
                else:
                    parts.append(r + 1)
                break


def d_map(o: OrbitLabel) -> OrbitLabel:
    """Duality: transpose for type A, transpose-then-collapse for B/C/D."""
    t = transpose(o.partition)
    if o.typ == "A":
        return OrbitLabel("A", t)
    image = collapse(t, o.typ)
    if o.typ == "D" and is_very_even(image):
        n_half = sum(image) // 2
        if o.numeral is None:
            # cannot happen: a type D partition with an odd part never
            # collapses-transposes to a very even one; guarded for safety
            raise ArithmeticError(f"very even image {image} from plain orbit {o}")
        numeral = o.numeral
        if n_half % 2 == 1:
            numeral = "II" if numeral == "I" else "I"
        return OrbitLabel("D", image, numeral)
    return OrbitLabel(o.typ, image)


def closure_compare(o1: OrbitLabel, o2: OrbitLabel) -> str:
    """Tri-state closure comparison: 'equal', 'leq', 'geq', 'incomparable'."""
    if o1.typ != o2.typ:
        raise ValueError("orbits of different types are not comparable")
    if sum(o1.partition) != sum(o2.partition):
        raise ValueError("orbits of different sizes are not comparable")
    if o1.partition == o2.partition:
        if o1.numeral == o2.numeral:
            return "equal"
        return "incomparable"
    return dominance_compare(o1.partition, o2.partition)


def closure_leq(o1: OrbitLabel, o2: OrbitLabel) -> bool:
    return closure_compare(o1, o2) in ("equal", "leq")


def is_solvable(o: OrbitLabel) -> bool:
    """Solvability of the orbit's centralizer, by the per-type parity rule."""
    lam = o.partition
    if o.typ == "A":
        return len(set(lam)) == len(lam)  # strict partitions
    want_parity = 0 if o.typ == "C" else 1  # all even (C) / all odd (B, D)
    if any(p % 2 != want_parity for p in lam):
        return False
    return all(lam.count(p) <= 2 for p in set(lam))


def is_special(o: OrbitLabel) -> bool:
    """Membership in the range of the duality map d.

    Characterized by a parity condition on the transpose: type A is always
    special; for B the transpose must stay in P_1, for C in P_-1, and for D
    the transpose must lie in P_-1 (the type C set - using P_1 here would
    wrongly exclude orbits like (7,1) = d((1^8)) in D_4).  Verified against
    brute-force enumeration of the range of d in the tests.
    """
    if o.typ == "A":
        return True
    target = "B" if o.typ == "B" else "C"
    return in_parity_set(transpose(o.partition), target)


def is_self_dual(o: OrbitLabel) -> bool:
    return d_map(o) == o


def orbit_labels(typ: str, size: int):
    """All orbit labels of the given type and partition size."""
    for lam in partitions(size):
        if not in_parity_set(lam, typ):
            continue
        if typ == "D" and is_very_even(lam):
            yield OrbitLabel("D", lam, "I")
            yield OrbitLabel("D", lam, "II")
        else:
            yield OrbitLabel(typ, lam)


@lru_cache(maxsize=None)
def orbit_list(typ: str, size: int) -> tuple[OrbitLabel, ...]:
    return tuple(orbit_labels(typ, size))


def solvable_orbits(typ: str, size: int) -> list[OrbitLabel]:
    return [o for o in orbit_list(typ, size) if is_solvable(o)]


def minimal_solvable(typ: str, size: int) -> OrbitLabel:
    """The unique closure-minimal solvable orbit (uniqueness asserted)."""
    sols = solvable_orbits(typ, size)
    if not sols:
        raise ValueError(f"no solvable orbits for {typ}, size {size}")
    minima = [
        o
        for o in sols
        if all(closure_compare(p, o) in ("geq", "equal") for p in sols)
    ]
    if len(minima) != 1:
        raise ArithmeticError(f"minimal solvable orbit not unique: {minima}")
    return minima[0]


@dataclass(frozen=True)
class JMWeight:
    """Diagonal weight coordinates of the orbit's sl2 semisimple element."""

    entries: tuple[int, ...]
    norm_squared: int


def jm_weight(o: OrbitLabel) -> JMWeight:
    """Weights p-1, p-3, ..., 1-p for each part p, with the plain diagonal norm."""
    entries = []
    for p in o.partition:
        entries.extend(range(p - 1, -p, -2))
    entries.sort(reverse=True)
    return JMWeight(tuple(entries), sum(e * e for e in entries))
