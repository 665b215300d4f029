"""Partition and bipartition calculus.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros so that equal partitions are equal tuples.  The empty
partition () is a first-class value of size 0.  Bipartitions are pairs of
partitions.

String grammar used everywhere in the package (CLI flags, JSON fields):
a partition prints as comma-separated decreasing parts ("4,3,2,1"), the
empty partition as "-", and a bipartition as "first|second" ("2,1|-").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]


class SizeMismatchError(ValueError):
    """Raised when an operation requires partitions of equal total size."""


def check_partition(parts) -> Partition:
    """Canonicalize to a tuple, dropping trailing zeros; reject bad input."""
    lam = tuple(int(p) for p in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p <= 0 for p in lam):
        raise ValueError(f"parts must be positive: {parts}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return lam


def parse_partition(s: str) -> Partition:
    """Parse "4,3,2,1"; "-" or "" denotes the empty partition."""
    s = s.strip()
    if s in ("-", ""):
        return ()
    return check_partition(int(tok) for tok in s.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_bipartition(s: str) -> tuple[Partition, Partition]:
    """Parse "first|second", e.g. "2,1|-"."""
    if "|" not in s:
        raise ValueError(f"bipartition needs a '|' separator: {s!r}")
    a, b = s.split("|", 1)
    return parse_partition(a), parse_partition(b)


def format_bipartition(pair: tuple[Partition, Partition]) -> str:
    return f"{format_partition(pair[0])}|{format_partition(pair[1])}"


def partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n in decreasing lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def bipartitions(n: int):
    """Yield all (alpha, beta) with |alpha| + |beta| = n, deterministic order."""
    for a in range(n, -1, -1):
        for alpha in partitions(a):
            for beta in partitions(n - a):
                yield alpha, beta


@lru_cache(maxsize=None)
def bipartition_list(n: int) -> tuple[tuple[Partition, Partition], ...]:
    return tuple(bipartitions(n))


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (column lengths of the Young diagram)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of lam is <= that of mu (zero padded)."""
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    sa = sb = 0
    for i in range(max(len(lam), len(mu))):
        sa += lam[i] if i < len(lam) else 0
        sb += mu[i] if i < len(mu) else 0
        if sa > sb:
            return False
    return True


def dominance_compare(lam: Partition, mu: Partition) -> str:
    """Tri-state dominance comparison: 'equal', 'leq', 'geq', 'incomparable'."""
    if lam == mu:
        return "equal"
    le = dominance_leq(lam, mu)
    ge = dominance_leq(mu, lam)
    if le:
        return "leq"
    if ge:
        return "geq"
    return "incomparable"


def hook_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    if not lam:
        return 1
    t = transpose(lam)
    num = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j + t[j] - i - 1
    return num


def _horizontal_strips(sub: Partition, size: int, bound: Partition):
    """Yield partitions nu with nu/sub a horizontal strip of `size`, nu inside bound."""
    rows = len(bound)
    sub_p = sub + (0,) * (rows - len(sub))

    def rec(i, remaining, prev_new, acc):
        if i == rows:
            if remaining == 0:
                yield check_partition(acc)
            return
        lo = sub_p[i]
        # strip condition: new row i cannot exceed old row i-1
        hi = min(bound[i], prev_new, sub_p[i - 1] if i > 0 else bound[0])
        hi = min(hi, lo + remaining)
        for r in range(lo, hi + 1):
            yield from rec(i + 1, remaining - (r - lo), r, acc + [r])

    yield from rec(0, size, bound[0] if bound else 0, [])


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: Partition) -> int:
    """Number of semistandard Young tableaux of the given shape and content."""
    shape = check_partition(shape)
    content = check_partition(content)
    if sum(shape) != sum(content):
        raise SizeMismatchError(f"|{shape}| != |{content}|")
    frontier: dict[Partition, int] = {(): 1}
    for part in content:
        nxt: dict[Partition, int] = {}
        for sub, cnt in frontier.items():
            for grown in _horizontal_strips(sub, part, shape):
                nxt[grown] = nxt.get(grown, 0) + cnt
        frontier = nxt
        if not frontier:
            return 0
    return frontier.get(shape, 0)


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of inner fits inside outer."""
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def lr_coeff(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of s_gamma in s_alpha * s_beta.

    Counted as LR skew tableaux of shape gamma/alpha and content beta
    (rows weakly increase, columns strictly increase, and the reverse
    reading word is a lattice word).
    """
    alpha = check_partition(alpha)
    beta = check_partition(beta)
    gamma = check_partition(gamma)
    if sum(alpha) + sum(beta) != sum(gamma):
        raise SizeMismatchError(f"|{alpha}| + |{beta}| != |{gamma}|")
    if not contains(gamma, alpha):
        return 0
    if not beta:
        return 1 if gamma == alpha else 0
    return sum(1 for _ in lr_tableaux(alpha, beta, gamma))


def lr_tableaux(alpha: Partition, beta: Partition, gamma: Partition):
    """Yield LR fillings of gamma/alpha with content beta.

    A filling is reported as a dict (row, col) -> label with rows and
    columns 0-indexed and labels 1-indexed.
    """
    rows = len(gamma)
    alpha_p = alpha + (0,) * (rows - len(alpha))
    nlabels = len(beta)
    # cells in reverse reading order: top to bottom, right to left
    cells = [
        (r, c) for r in range(rows) for c in range(gamma[r] - 1, alpha_p[r] - 1, -1)
    ]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (nlabels + 1)  # counts[v] = occurrences of label v so far
    counts[0] = sum(beta)  # sentinel so label 1 is always lattice-eligible

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo, hi = 1, nlabels
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue  # content bound
            if counts[v] + 1 > counts[v - 1]:
                continue  # lattice condition on the reverse reading word
            filling[(r, c)] = v
            counts[v] += 1
            yield from rec(idx + 1)
            counts[v] -= 1
            del filling[(r, c)]

    yield from rec(0)


@dataclass(frozen=True)
class SkewExpansionWitness:
    """A certified labelled growth from `source` to `target`.

    `steps` lists added boxes as (row, col, label), 1-indexed, in the order
    they were produced; `weight` is the label content (label m appears
    weight[m-1] times), which equals transpose(beta) for the expansion
    produced by strict_expansion_witness.
    """

    source: Partition
    target: Partition
    weight: Partition
    steps: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)

    def validate(self) -> bool:
        """Check the steps form an LR filling of target/source with the weight."""
        rows = len(self.target)
        shape = list(self.source) + [0] * (rows - len(self.source))
        cells = {}
        for row, col, label in self.steps:
            r, c = row - 1, col - 1
            if r < 0 or r >= rows or c != shape[r]:
                return False  # must extend a row contiguously
            if self.target[r] <= c:
                return False
            cells[(r, c)] = label
            shape[r] += 1
        if tuple(check_partition(shape)) != self.target:
            return False
        # content
        content = [0] * len(self.weight)
        for v in cells.values():
            if not 1 <= v <= len(self.weight):
                return False
            content[v - 1] += 1
        if tuple(content) != self.weight:
            return False
        # semistandard on the skew part
        for (r, c), v in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] < v:
                return False
            if (r - 1, c) in cells and cells[(r - 1, c)] >= v:
                return False
            # column strictness against the fixed source part is automatic
            # (source boxes are unlabelled), but a labelled box may never sit
            # directly below a source box of the same column with label rule
            # violated; only labelled-vs-labelled applies.
        # lattice word: read rows top to bottom, right to left
        counts = [0] * (len(self.weight) + 1)
        counts[0] = sum(self.weight)
        rows_sorted = sorted(cells.keys(), key=lambda rc: (rc[0], -rc[1]))
        for rc in rows_sorted:
            v = cells[rc]
            if counts[v] + 1 > counts[v - 1]:
                return False
            counts[v] += 1
        return True


def _ascending(lam: Partition, length: int) -> list[int]:
    """Parts of lam padded with zeros to `length`, ascending. None if too long."""
    if len(lam) > length:
        return None
    return sorted(lam + (0,) * (length - len(lam)))


def rectangle_family_conditions(alpha: Partition, beta: Partition, k: int, kind: str) -> bool:
    """Membership test for the combinatorial family attached to a rectangle.

    kind "C": alpha padded to k+1 parts, beta to k parts, and the shifted
    entries {alpha_i + i} and {beta_j + j} together fill {0, ..., 2k}.
    kind "D": both padded to k parts, entries fill {0, ..., 2k-1}.
    """
    if kind == "C":
        la, lb, top = k + 1, k, 2 * k
    elif kind == "D":
        la, lb, top = k, k, 2 * k - 1
    else:
        raise ValueError(kind)
    a = _ascending(alpha, la)
    b = _ascending(beta, lb)
    if a is None or b is None:
        return False
    marks = sorted([a[i] + i for i in range(la)] + [b[j] + j for j in range(lb)])
    return marks == list(range(top + 1))


def strict_expansion_witness(
    alpha: Partition, beta: Partition, lam: Partition
) -> SkewExpansionWitness | None:
    """Construct the canonical labelled expansion from alpha to lam with weight beta^t.

    When (alpha, beta) satisfies the rectangle family conditions and lam is
    the matching rectangle, the witness follows the iterative rule: at step m
    drop the smallest padded part of alpha and append the rectangle width,
    while every nonzero part of beta loses one box (beta_j -> max(beta_j-1, 0)).
    Outside that regime, falls back to searching for any LR filling.
    Returns None when no expansion exists.
    """
    alpha = check_partition(alpha)
    beta = check_partition(beta)
    lam = check_partition(lam)
    if sum(alpha) + sum(beta) != sum(lam):
        return None
    weight = transpose(beta)
    if not beta:
        return (
            SkewExpansionWitness(alpha, lam, weight, ())
            if lam == alpha
            else None
        )

    kind = None
    if lam and all(p == lam[0] for p in lam):
        width, height = lam[0], len(lam)
        if height == width + 1 and rectangle_family_conditions(alpha, beta, width, "C"):
            kind = ("C", width)
        elif height == width and rectangle_family_conditions(alpha, beta, width, "D"):
            kind = ("D", width)

    if kind is None:
        for filling in lr_tableaux(alpha, weight, lam):
            steps = tuple(
                (r + 1, c + 1, v)
                for (r, c), v in sorted(filling.items(), key=lambda kv: (kv[1], kv[0]))
            )
            return SkewExpansionWitness(alpha, lam, weight, steps)
        return None

    _, k = kind
    la = k + 1 if kind[0] == "C" else k
    cur_a = _ascending(alpha, la)
    cur_b = _ascending(beta, k if kind[0] == "C" else k)
    steps = []
    label = 0
    while any(cur_b):
        label += 1
        new_a = cur_a[1:] + [k]
        # record boxes added: compare descending diagrams
        old_desc = sorted((p for p in cur_a if p > 0), reverse=True)
        new_desc = sorted((p for p in new_a if p > 0), reverse=True)
        old_desc += [0] * (len(new_desc) - len(old_desc))
        for r in range(len(new_desc)):
            for c in range(old_desc[r], new_desc[r]):
                steps.append((r + 1, c + 1, label))
        cur_a = new_a
        cur_b = sorted(max(b - 1, 0) for b in cur_b)
    target = check_partition(sorted((p for p in cur_a if p > 0), reverse=True))
    if target != lam:
        return None
    witness = SkewExpansionWitness(alpha, lam, weight, tuple(steps))
    return witness if witness.validate() else None
