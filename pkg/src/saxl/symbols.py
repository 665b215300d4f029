"""Lusztig families for classical types via two-row symbols.

A bipartition (alpha, beta) of n maps to a symbol: alpha is padded to m+1
ascending parts and beta to m (defect 1, types B/C), or both to m parts
(defect 0, type D); entry i of a padded row is part_i + i.  Symbols are
reduced by stripping simultaneous leading zeros.  Two characters lie in the
same family exactly when their reduced symbols have equal entry multisets.

The Springer section recipe used by special_character_of_orbit: pad the
orbit partition ascending to odd length (B/C) or even length (D), form
nu_i + i - 1, split into even and odd values; the evens halved give the
first row, the odds shifted-halved the second, and unpadding both rows
yields the bipartition of the Springer character with trivial local system.
This recipe is pinned by the staircase fixtures and the sgn-duality
property checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .orbits import OrbitLabel, d_map, is_solvable, is_special, minimal_solvable
from .partitions import (
    Partition,
    bipartition_list,
    check_partition,
    format_bipartition,
    transpose,
)

BiPartition = tuple[Partition, Partition]


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    @property
    def defect(self) -> int:
        return abs(len(self.top) - len(self.bottom))

    def content(self) -> tuple[int, ...]:
        return tuple(sorted(self.top + self.bottom))


@dataclass(frozen=True)
class FamilyId:
    typ: str
    content: tuple[int, ...]
    split: str | None = None  # distinguishes the two characters of a degenerate D symbol

    def digest(self) -> str:
        import hashlib

        data = f"{self.typ}:{','.join(map(str, self.content))}:{self.split or ''}"
        return hashlib.sha256(data.encode()).hexdigest()[:10]


def _ascending_padded(lam: Partition, length: int) -> list[int]:
    if len(lam) > length:
        raise ValueError(f"{lam} does not fit in {length} rows")
    return sorted(lam + (0,) * (length - len(lam)))


def _reduce(top: list[int], bottom: list[int]) -> Symbol:
    while top and bottom and top[0] == 0 and bottom[0] == 0:
        stripped_top = [x - 1 for x in top[1:]]
        stripped_bottom = [x - 1 for x in bottom[1:]]
        if any(x < 0 for x in stripped_top + stripped_bottom):
            break
        top, bottom = stripped_top, stripped_bottom
    return Symbol(tuple(top), tuple(bottom))


def symbol_of(label: BiPartition, typ: str = "C") -> Symbol:
    """Canonical reduced symbol of a bipartition (defect 1 for B/C, 0 for D)."""
    alpha, beta = label
    if typ in ("B", "C"):
        m = max(len(alpha) - 1, len(beta), 0)
        a = _ascending_padded(alpha, m + 1)
        b = _ascending_padded(beta, m)
    elif typ == "D":
        m = max(len(alpha), len(beta), 1)
        a = _ascending_padded(alpha, m)
        b = _ascending_padded(beta, m)
    else:
        raise ValueError(typ)
    top = [a[i] + i for i in range(len(a))]
    bottom = [b[j] + j for j in range(len(b))]
    return _reduce(top, bottom)


def family_id(label: BiPartition, typ: str = "C", split: str | None = None) -> FamilyId:
    sym = symbol_of(label, typ)
    if typ == "D":
        if label[0] == label[1]:
            # degenerate symbol: each split character is its own family
            return FamilyId(typ, sym.content(), split or "+")
        return FamilyId(typ, sym.content())
    return FamilyId(typ, sym.content())


def same_family(l1: BiPartition, l2: BiPartition, typ: str = "C") -> bool:
    if sum(l1[0]) + sum(l1[1]) != sum(l2[0]) + sum(l2[1]):
        raise ValueError("characters of different groups")
    return family_id(l1, typ) == family_id(l2, typ)


def all_families(typ: str, n: int) -> dict[FamilyId, list[BiPartition]]:
    """Partition of the character labels of W(C_n) or W(D_n) into families."""
    out: dict[FamilyId, list[BiPartition]] = {}
    if typ in ("B", "C"):
        for label in bipartition_list(n):
            out.setdefault(family_id(label, typ), []).append(label)
        return out
    if typ != "D":
        raise ValueError(typ)
    seen = set()
    for label in bipartition_list(n):
        alpha, beta = label
        if (beta, alpha) in seen:
            continue
        seen.add(label)
        if alpha == beta:
            for split in ("+", "-"):
                out.setdefault(family_id(label, typ, split), []).append(label)
        else:
            out.setdefault(family_id(label, typ), []).append(label)
    return out


# ---------------------------------------------------------------------------
# rectangle families (explicit enumeration)


@lru_cache(maxsize=None)
def family_members_C(k: int) -> tuple[BiPartition, ...]:
    """Members of the family of sigma_(k^{k+1}, 0) in W(C_{k(k+1)}).

    Choosing the k shifted beta-entries inside {0, ..., 2k} determines the
    member; the complement gives the k+1 shifted alpha-entries.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    members = []
    universe = set(range(2 * k + 1))
    for bset in combinations(sorted(universe), k):
        aset = sorted(universe - set(bset))
        alpha = check_partition(
            sorted((aset[i] - i for i in range(k + 1)), reverse=True)
        )
        beta = check_partition(sorted((bset[j] - j for j in range(k)), reverse=True))
        members.append((alpha, beta))
    return tuple(sorted(members, reverse=True))


@lru_cache(maxsize=None)
def family_members_D(k: int) -> tuple[frozenset, ...]:
    """Members of the family of sigma_(k^k, 0) in W(D_{k^2}), as unordered pairs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    members = set()
    universe = set(range(2 * k))
    for bset in combinations(sorted(universe), k):
        aset = sorted(universe - set(bset))
        alpha = check_partition(sorted((aset[i] - i for i in range(k)), reverse=True))
        beta = check_partition(
            sorted((sorted(bset)[j] - j for j in range(k)), reverse=True)
        )
        if alpha == beta:
            raise ArithmeticError(f"degenerate family member {alpha} for k={k}")
        members.add(frozenset((alpha, beta)))
    return tuple(sorted(members, key=lambda fs: sorted(fs, reverse=True), reverse=True))


# ---------------------------------------------------------------------------
# Springer section (special orbits -> special characters)


def special_character_of_orbit(o: OrbitLabel) -> BiPartition:
    """Bipartition of the Springer character with trivial local system."""
    if not is_special(o):
        raise ValueError(f"{o} is not special")
    if o.typ == "A":
        return (o.partition, ())
    nu = o.partition
    if o.typ in ("B", "C"):
        length = len(nu) if len(nu) % 2 == 1 else len(nu) + 1
    else:
        length = len(nu) if len(nu) % 2 == 0 else len(nu) + 1
    padded = sorted(nu + (0,) * (length - len(nu)))
    marks = [padded[i] + i for i in range(length)]
    evens = sorted(x // 2 for x in marks if x % 2 == 0)
    odds = sorted((x - 1) // 2 for x in marks if x % 2 == 1)
    alpha = check_partition(sorted((evens[i] - i for i in range(len(evens))), reverse=True))
    beta = check_partition(sorted((odds[j] - j for j in range(len(odds))), reverse=True))
    return (alpha, beta)


def orbit_of_family(typ: str, n: int) -> dict[FamilyId, OrbitLabel]:
    """Map each family that contains a special character to its special orbit."""
    from .orbits import orbit_list

    size = 2 * n if typ in ("C", "D") else (2 * n + 1 if typ == "B" else n)
    out = {}
    for o in orbit_list(typ, size):
        if not is_special(o):
            continue
        label = special_character_of_orbit(o)
        fid = family_id(label, "C" if typ == "B" else typ)
        if fid in out and out[fid].partition != o.partition:
            raise ArithmeticError(f"family {fid} claimed by two special orbits")
        out[fid] = o
    return out


@dataclass
class GoodFamilyReport:
    typ: str
    n: int
    k: int
    lam: Partition
    good: list[FamilyId]
    family_members: list

    @property
    def unique(self) -> bool:
        return len(self.good) == 1


def good_family_classical(typ: str, n: int) -> GoodFamilyReport:
    """Families reached from the minimal solvable orbit via LR positivity.

    Defined only when the minimal solvable orbit is self-dual, i.e.
    n = k(k+1) for type C and n = k^2 for type D; the attached rectangle is
    (k^{k+1}) resp. (k^k), and a family is good when it contains some
    (alpha, beta) with a positive LR coefficient against the rectangle.
    """
    from .partitions import contains, lr_coeff

    if typ == "C":
        k = _exact_root(n, "C")
        lam = (k,) * (k + 1)
    elif typ == "D":
        k = _exact_root(n, "D")
        lam = (k,) * k
    else:
        raise ValueError(typ)
    good = set()
    witnesses = []
    for label in bipartition_list(n):
        alpha, beta = label
        if not contains(lam, alpha) or not contains(lam, transpose(beta)):
            continue
        if lr_coeff(alpha, transpose(beta), lam) > 0:
            good.add(family_id(label, typ))
            witnesses.append(label)
    return GoodFamilyReport(typ, n, k, lam, sorted(good, key=lambda f: f.content), witnesses)


def _exact_root(n: int, typ: str) -> int:
    for k in range(1, n + 1):
        if typ == "C" and k * (k + 1) == n:
            return k
        if typ == "D" and k * k == n:
            return k
    raise ValueError(
        f"the inverse-Psi rectangle is not implemented for type {typ}, n={n}: "
        "the minimal solvable orbit is not self-dual at this rank"
    )
