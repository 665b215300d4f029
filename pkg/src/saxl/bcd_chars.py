"""Character theory of the hyperoctahedral groups W(B_n) = W(C_n) and of W(D_n).

Irreducible characters of W(C_n) are labelled by bipartitions (alpha, beta)
of n; conjugacy classes by pairs (positive cycle type, negative cycle type).
Values are computed per class by a two-alphabet specialization of the
border-strip expansion: positive r-cycles contribute p_r(x) + p_r(y),
negative ones p_r(x) - p_r(y), and the coefficient of s_alpha(x) s_beta(y)
is the character value.  An explicit induction from Young subgroups serves
as the oracle for small n (see tests).

W(D_n) is the index-2 kernel of the sign-product character delta.  Every
check in this package evaluates automorphism-invariant class functions on
D_n, so split characters (alpha = alpha) never need their own value
formulas: their multiplicity in such a class function is half that of the
restricted W(C_n) character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .partitions import (
    Partition,
    bipartition_list,
    check_partition,
    contains,
    format_bipartition,
    hook_dim,
    lr_coeff,
    partition_list,
    partitions,
    transpose,
)

BiPartition = tuple[Partition, Partition]


@dataclass(frozen=True)
class BCClass:
    """Conjugacy class of W(C_n): positive and negative cycle types."""

    pos: Partition
    neg: Partition

    @property
    def n(self) -> int:
        return sum(self.pos) + sum(self.neg)

    def centralizer_order(self) -> int:
        z = 1
        for part, mult in _mults(self.pos).items():
            z *= (2 * part) ** mult * factorial(mult)
        for part, mult in _mults(self.neg).items():
            z *= (2 * part) ** mult * factorial(mult)
        return z

    def size(self) -> int:
        return group_order(self.n) // self.centralizer_order()

    def in_d(self) -> bool:
        """Whether the class lies in W(D_n) (even number of negative cycles)."""
        return len(self.neg) % 2 == 0


@dataclass(frozen=True)
class DClassView:
    """W(D_n) view of a W(C_n) class; splitFlag marks classes that split in D_n."""

    underlying: BCClass
    split_flag: str | None = None  # "+" or "-", bookkeeping only

    def __post_init__(self):
        splits = not self.underlying.neg and all(
            p % 2 == 0 for p in self.underlying.pos
        )
        if self.split_flag is not None and not splits:
            raise ValueError("split flag only for all-even all-positive classes")


def _mults(lam: Partition) -> dict[int, int]:
    return {p: lam.count(p) for p in set(lam)}


def group_order(n: int) -> int:
    return 2**n * factorial(n)


@lru_cache(maxsize=None)
def bc_classes(n: int) -> tuple[BCClass, ...]:
    return tuple(BCClass(pos, neg) for pos, neg in bipartition_list(n))


def bc_labels(n: int) -> tuple[BiPartition, ...]:
    return bipartition_list(n)


def bc_dim(label: BiPartition) -> int:
    alpha, beta = label
    n = sum(alpha) + sum(beta)
    return comb(n, sum(alpha)) * hook_dim(alpha) * hook_dim(beta)


def _beta_set(lam: Partition, slots: int) -> frozenset[int]:
    padded = lam + (0,) * (slots - len(lam))
    return frozenset(padded[i] + (slots - 1 - i) for i in range(slots))


def _set_to_partition(beta: frozenset[int], slots: int) -> Partition:
    desc = sorted(beta, reverse=True)
    return check_partition(desc[i] - (slots - 1 - i) for i in range(slots))


def _add_strip(beta: frozenset[int], r: int):
    for b in beta:
        top = b + r
        if top in beta:
            continue
        crossings = sum(1 for x in range(b + 1, top) if x in beta)
        yield (beta - {b}) | {top}, -1 if crossings % 2 else 1


def _bc_column(n: int, cls: BCClass) -> dict[BiPartition, int]:
    """All character values on one class, by two-alphabet strip expansion."""
    slots = max(n, 1)
    empty = _beta_set((), slots)
    frontier: dict[tuple[frozenset, frozenset], int] = {(empty, empty): 1}
    parts = [(r, 1) for r in sorted(cls.pos, reverse=True)]
    parts += [(r, -1) for r in sorted(cls.neg, reverse=True)]
    for r, y_sign in parts:
        nxt: dict[tuple[frozenset, frozenset], int] = {}
        for (setx, sety), coeff in frontier.items():
            for grown, sg in _add_strip(setx, r):
                key = (grown, sety)
                nxt[key] = nxt.get(key, 0) + coeff * sg
            for grown, sg in _add_strip(sety, r):
                key = (setx, grown)
                nxt[key] = nxt.get(key, 0) + coeff * sg * y_sign
        frontier = {k: v for k, v in nxt.items() if v != 0}
    return {
        (_set_to_partition(sx, slots), _set_to_partition(sy, slots)): c
        for (sx, sy), c in frontier.items()
    }


@dataclass(frozen=True)
class BCCharTable:
    n: int
    classes: tuple[BCClass, ...]
    class_sizes: tuple[int, ...]
    rows: dict[BiPartition, tuple[int, ...]]

    def value(self, label: BiPartition, cls: BCClass) -> int:
        return self.rows[label][self.classes.index(cls)]

    def inner(self, f, g) -> int:
        order = group_order(self.n)
        total = sum(s * a * b for s, a, b in zip(self.class_sizes, f, g))
        q, r = divmod(total, order)
        if r:
            raise ArithmeticError("inner product is not an integer")
        return q

    def d_inner(self, f, g) -> int:
        """Inner product of two restricted class functions over W(D_n)."""
        order = group_order(self.n) // 2
        total = sum(
            s * a * b
            for cls, s, a, b in zip(self.classes, self.class_sizes, f, g)
            if cls.in_d()
        )
        q, r = divmod(total, order)
        if r:
            raise ArithmeticError("D-inner product is not an integer")
        return q


@lru_cache(maxsize=None)
def bc_char_table(n: int) -> BCCharTable:
    classes = bc_classes(n)
    sizes = tuple(c.size() for c in classes)
    labels = bc_labels(n)
    rows = {lab: [0] * len(classes) for lab in labels}
    for j, cls in enumerate(classes):
        for lab, v in _bc_column(n, cls).items():
            rows[lab][j] = v
    table = BCCharTable(n, classes, sizes, {k: tuple(v) for k, v in rows.items()})
    id_idx = classes.index(BCClass((1,) * n if n else (), ()))
    for lab in labels:
        if table.rows[lab][id_idx] != bc_dim(lab):
            raise ArithmeticError(f"dimension mismatch for {lab}")
    return table


def bc_char_value(label: BiPartition, cls: BCClass) -> int:
    n = sum(label[0]) + sum(label[1])
    if cls.n != n:
        raise ValueError("size mismatch")
    return bc_char_table(n).value(label, cls)


def bc_tensor_mult(l1: BiPartition, l2: BiPartition, l3: BiPartition) -> int:
    ns = {sum(a) + sum(b) for a, b in (l1, l2, l3)}
    if len(ns) != 1:
        raise ValueError("size mismatch")
    t = bc_char_table(ns.pop())
    prod = tuple(a * b for a, b in zip(t.rows[l1], t.rows[l2]))
    return t.inner(prod, t.rows[l3])


def sgn_twist(label: BiPartition) -> BiPartition:
    """Index of sigma_(alpha,beta) tensored with sgn (pinned convention)."""
    alpha, beta = label
    return (transpose(beta), transpose(alpha))


def delta_twist(label: BiPartition) -> BiPartition:
    """Index after tensoring with the sign-product linear character delta."""
    alpha, beta = label
    return (beta, alpha)


def exterior_power_values(n: int, i: int) -> tuple[int, ...]:
    """Character of the i-th exterior power of the reflection representation."""
    if not 0 <= i <= n:
        raise ValueError(f"i={i} out of range 0..{n}")
    return tuple(col[i] for col in _wedge_columns(n))


@lru_cache(maxsize=None)
def _wedge_columns(n: int) -> tuple[tuple[int, ...], ...]:
    """Per class, the coefficient list of prod (1 -+ (-x)^r) giving all wedge powers."""
    cols = []
    for cls in bc_classes(n):
        poly = [1]
        for r in cls.pos:
            poly = _mul_one_pm(poly, r, -1)  # 1 - (-x)^r
        for r in cls.neg:
            poly = _mul_one_pm(poly, r, +1)  # 1 + (-x)^r
        poly += [0] * (n + 1 - len(poly))
        cols.append(tuple(poly))
    return tuple(cols)


def _mul_one_pm(poly, r, sign):
    out = list(poly) + [0] * r
    coef = sign * (1 if r % 2 == 0 else -1)  # sign * (-1)^r
    for i, c in enumerate(poly):
        out[i + r] += coef * c
    return out


def wedge_sum_values(n: int) -> tuple[int, ...]:
    return tuple(sum(col) for col in _wedge_columns(n))


@dataclass
class Lemma48Report:
    n: int
    checked: int
    mismatches: list[tuple[BiPartition, Partition, int, int]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def lemma48_check(n: int, bound: int = 8) -> Lemma48Report:
    """Inner products against sigma_(gamma,0) x wedge-sum versus LR coefficients.

    Verifies <sigma_(alpha,beta), sigma_(gamma,0) (x) wedge V> = N^gamma
    over all (alpha, beta) in BP(n) and gamma in P(n), where N^gamma is the
    LR coefficient for (alpha, beta^t).
    """
    if n > bound:
        raise ValueError(f"n={n} above configured bound {bound}")
    t = bc_char_table(n)
    wsum = wedge_sum_values(n)
    mismatches = []
    checked = 0
    for gamma in partition_list(n):
        base = tuple(a * w for a, w in zip(t.rows[(gamma, ())], wsum))
        for label in bc_labels(n):
            alpha, beta = label
            lhs = t.inner(base, t.rows[label])
            rhs = lr_coeff(alpha, transpose(beta), gamma)
            checked += 1
            if lhs != rhs:
                mismatches.append((label, gamma, lhs, rhs))
    return Lemma48Report(n, checked, mismatches)


# ---------------------------------------------------------------------------
# W(D_n) multiplicity helpers


def d_multiplicities(n: int, values: tuple[int, ...]) -> dict:
    """Decompose an automorphism-invariant class function on W(D_n).

    `values` lives on the W(C_n) classes (the function must be the
    restriction of a W(C_n) class function).  Returns a dict keyed by
    D-labels: unordered pairs frozenset({alpha, beta}) for alpha != beta and
    ((alpha, alpha), sign) for the two split characters.
    """
    t = bc_char_table(n)
    out = {}
    seen = set()
    for label in bc_labels(n):
        alpha, beta = label
        if (beta, alpha) in seen:
            continue
        seen.add(label)
        m = t.d_inner(values, t.rows[label])
        if alpha == beta:
            if m % 2:
                raise ArithmeticError(
                    f"odd split multiplicity for {label}: function not invariant"
                )
            out[((alpha, alpha), "+")] = m // 2
            out[((alpha, alpha), "-")] = m // 2
        else:
            out[frozenset((alpha, beta))] = m
    return out


def d_label_str(key) -> str:
    if isinstance(key, frozenset):
        a, b = sorted(key, reverse=True)
        return format_bipartition((a, b))
    (alpha, _), sign = key
    return format_bipartition((alpha, alpha)) + sign


# ---------------------------------------------------------------------------
# generalized Saxl checks


@dataclass
class GSaxlReport:
    typ: str
    k: int
    n: int
    family: list
    missing: list
    multiplicities: dict
    wedge_guarantee_ok: bool

    @property
    def all_present(self) -> bool:
        return not self.missing


def _family_rows_sum(t: BCCharTable, members) -> tuple[int, ...]:
    acc = [0] * len(t.classes)
    for lab in members:
        row = t.rows[lab]
        acc = [a + b for a, b in zip(acc, row)]
    return tuple(acc)


def gsaxl_check_C(k: int, bound: int = 3) -> GSaxlReport:
    """Missing irreducibles in the tensor square of the k-family sum, type C."""
    from .symbols import family_members_C

    if k > bound:
        raise ValueError(f"k={k} above configured bound {bound}")
    n = k * (k + 1)
    t = bc_char_table(n)
    members = family_members_C(k)
    total = _family_rows_sum(t, members)
    square = tuple(v * v for v in total)
    mults = {lab: t.inner(square, t.rows[lab]) for lab in bc_labels(n)}
    missing = [lab for lab, m in mults.items() if m == 0]
    wedge_ok = _wedge_pairs_present(t, n, mults)
    return GSaxlReport("C", k, n, list(members), missing, mults, wedge_ok)


def _wedge_pairs_present(t: BCCharTable, n: int, mults: dict) -> bool:
    """All constituents of wedge^i V (x) wedge^j V have positive multiplicity."""
    cols = _wedge_columns(n)
    for i in range(n + 1):
        wi = tuple(col[i] for col in cols)
        for j in range(i + 1):
            wj = tuple(col[j] for col in cols)
            prod = tuple(a * b for a, b in zip(wi, wj))
            for lab in bc_labels(n):
                if t.inner(prod, t.rows[lab]) > 0 and mults[lab] == 0:
                    return False
    return True


def gsaxl_check_D(k: int, bound: int = 3) -> GSaxlReport:
    """Type D analog over W(D_{k^2}); split multiplicities via exact halving."""
    from .symbols import family_members_D

    if k > bound:
        raise ValueError(f"k={k} above configured bound {bound}")
    n = k * k
    if n < 2:
        raise ValueError("W(D_1) is degenerate; k must be at least 2")
    t = bc_char_table(n)
    members = family_members_D(k)
    lift = [tuple(sorted(pair, reverse=True)) for pair in members]
    total = _family_rows_sum(t, lift)
    square = tuple(v * v for v in total)
    mults = d_multiplicities(n, square)
    missing = [key for key, m in mults.items() if m == 0]
    wedge_ok = _wedge_pairs_present_d(t, n, mults)
    return GSaxlReport("D", k, n, members, missing, mults, wedge_ok)


def _wedge_pairs_present_d(t: BCCharTable, n: int, mults: dict) -> bool:
    cols = _wedge_columns(n)
    for i in range(n + 1):
        wi = tuple(col[i] for col in cols)
        for j in range(i + 1):
            wj = tuple(col[j] for col in cols)
            prod = tuple(a * b for a, b in zip(wi, wj))
            for key, m in d_multiplicities(n, prod).items():
                if m > 0 and mults[key] == 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# rectangle family exhaustion (two computation paths)


@dataclass
class GetAllFamilyReport:
    typ: str
    k: int
    n: int
    lam: Partition
    family_size: int
    lr_path_ok: bool
    direct_path_ok: bool | None  # None when the direct path was not run
    multiplicity_one: bool

    @property
    def ok(self) -> bool:
        return (
            self.lr_path_ok
            and self.multiplicity_one
            and self.direct_path_ok in (True, None)
        )


def getallfamily_check(typ: str, k: int, direct_bound: int = 2) -> GetAllFamilyReport:
    """Constituents of sigma_(lam,0) (x) wedge V must exhaust the rectangle family.

    The LR path evaluates N^lam_{alpha beta^t} for every ordered bipartition
    and requires the positive ones to be exactly the family (its ordered
    lifts, in type D), each with coefficient exactly 1.  The direct path
    (run for k <= direct_bound) decomposes the product character explicitly;
    over W(D_n) each unordered member then carries multiplicity 2, one from
    each ordered lift, as forced by the dimension count.
    """
    from .symbols import family_members_C, family_members_D

    if typ == "C":
        n = k * (k + 1)
        lam = (k,) * (k + 1)
        members = set(family_members_C(k))
        ordered = members
    elif typ == "D":
        n = k * k
        lam = (k,) * k
        members = {frozenset(p) for p in family_members_D(k)}
        ordered = set()
        for pair in members:
            a, b = sorted(pair, reverse=True)
            ordered.add((a, b))
            ordered.add((b, a))
    else:
        raise ValueError(typ)

    found = {}
    for label in bipartition_list(n):
        alpha, beta = label
        if not contains(lam, alpha) or not contains(lam, transpose(beta)):
            continue
        m = lr_coeff(alpha, transpose(beta), lam)
        if m:
            found[label] = m
    lr_ok = set(found) == ordered
    if typ == "D":
        lr_ok = lr_ok and all(a != b for a, b in found)
    mult_one = all(m == 1 for m in found.values())

    direct_ok = None
    if k <= direct_bound:
        t = bc_char_table(n)
        wsum = wedge_sum_values(n)
        prod = tuple(a * w for a, w in zip(t.rows[(lam, ())], wsum))
        if typ == "C":
            mults = {lab: t.inner(prod, t.rows[lab]) for lab in bc_labels(n)}
            direct_ok = all(
                m == (1 if lab in members else 0) for lab, m in mults.items()
            )
        else:
            mults = d_multiplicities(n, prod)
            direct_ok = all(
                m == (2 if key in members else 0) for key, m in mults.items()
            )
    return GetAllFamilyReport(
        typ, k, n, lam, len(members), lr_ok, direct_ok, mult_one
    )


# ---------------------------------------------------------------------------
# induction identity for sigma_(lam,lam)


def induction_identity_check(k: int, bound: int = 2) -> bool:
    """sigma_(lam,lam) equals the induced character from W(C_m) x W(C_m).

    Here n = k(k+1), m = n/2, lam is the staircase of m, and the inducing
    representation is sigma_(lam,0) boxtimes sigma_(0,lam); the identity is
    verified value by value on every class of W(C_n).
    """
    if k > bound:
        raise ValueError(f"k={k} above configured bound {bound}")
    n = k * (k + 1)
    m = n // 2
    lam = tuple(range(k, 0, -1))
    big = bc_char_table(n)
    small = bc_char_table(m)
    row1 = small.rows[(lam, ())]
    row2 = small.rows[((), lam)]

    # accumulate sum over H-classes of u(h) / |C_H(h)| into each fused class
    from fractions import Fraction

    acc = {cls: Fraction(0) for cls in big.classes}
    for i1, c1 in enumerate(small.classes):
        for i2, c2 in enumerate(small.classes):
            fused = BCClass(
                check_partition(sorted(c1.pos + c2.pos, reverse=True)),
                check_partition(sorted(c1.neg + c2.neg, reverse=True)),
            )
            u = row1[i1] * row2[i2]
            if u:
                acc[fused] += Fraction(
                    u, c1.centralizer_order() * c2.centralizer_order()
                )
    target = big.rows[(lam, lam)]
    for j, cls in enumerate(big.classes):
        ind_value = acc[cls] * cls.centralizer_order()
        if ind_value.denominator != 1 or ind_value.numerator != target[j]:
            return False
    # degree bookkeeping: dim Ind = index * (f^lam)^2
    if bc_dim((lam, lam)) != comb(n, m) * hook_dim(lam) ** 2:
        return False
    return True


# ---------------------------------------------------------------------------
# GL -> O branching


def gl_to_o_branching(lam: Partition, n: int) -> dict[Partition, int]:
    """Restriction multiplicities of the Schur module S_lam V to O(V).

    N_{lam, lambar} = sum over partitions delta with all parts even of the
    LR coefficient c^lam_{delta, lambar}.  Only lambar with at most n rows
    are reported.
    """
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"lam has more than n={n} rows")
    out: dict[Partition, int] = {}
    total = sum(lam)
    for drop in range(0, total + 1, 2):
        for delta in partitions(drop):
            if any(p % 2 for p in delta):
                continue
            if not contains(lam, delta):
                continue
            for lambar in partitions(total - drop):
                if len(lambar) > n or not contains(lam, lambar):
                    continue
                c = lr_coeff(delta, lambar, lam)
                if c:
                    out[lambar] = out.get(lambar, 0) + c
    return out
