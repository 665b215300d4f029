"""Symmetric group character theory over exact integers.

Character tables are computed column by column: for each cycle type the
power-sum symmetric function is expanded in the Schur basis by iterated
border-strip addition on beta-sets, which yields the whole column of the
table at once.  A separate top-down Murnaghan-Nakayama recursion
(`mn_value`) removes strips instead and serves as an independent path for
cross-checks and for single rows of large tables.

All arithmetic is arbitrary-precision integer; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .partitions import (
    Partition,
    SizeMismatchError,
    check_partition,
    partition_list,
    transpose,
)


def centralizer_order(mu: Partition) -> int:
    """Order of the S_n centralizer of an element with cycle type mu."""
    z = 1
    for m in set(mu):
        a = mu.count(m)
        z *= m**a * factorial(a)
    return z


def class_size(mu: Partition) -> int:
    n = sum(mu)
    return factorial(n) // centralizer_order(mu)


def _beta(lam: Partition, slots: int) -> frozenset[int]:
    padded = lam + (0,) * (slots - len(lam))
    return frozenset(padded[i] + (slots - 1 - i) for i in range(slots))


def _beta_to_partition(beta: frozenset[int], slots: int) -> Partition:
    desc = sorted(beta, reverse=True)
    return check_partition(desc[i] - (slots - 1 - i) for i in range(slots))


def _strip_sign(beta: frozenset[int], lo: int, hi: int) -> int:
    crossings = sum(1 for x in range(lo + 1, hi) if x in beta)
    return -1 if crossings % 2 else 1


def _table_column(n: int, mu: Partition) -> dict[Partition, int]:
    """All values chi^lam(mu) at once, by border-strip addition."""
    slots = max(n, 1)
    frontier: dict[frozenset[int], int] = {_beta((), slots): 1}
    for r in sorted(mu, reverse=True):
        nxt: dict[frozenset[int], int] = {}
        for beta, coeff in frontier.items():
            for b in beta:
                top = b + r
                if top in beta:
                    continue
                newbeta = (beta - {b}) | {top}
                term = coeff * _strip_sign(beta, b, top)
                nxt[newbeta] = nxt.get(newbeta, 0) + term
        frontier = {k: v for k, v in nxt.items() if v != 0}
    return {_beta_to_partition(beta, slots): c for beta, c in frontier.items()}


@dataclass(frozen=True)
class SnCharTable:
    """Full character table of S_n with classes ordered like partition_list(n)."""

    n: int
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    rows: dict[Partition, tuple[int, ...]]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.rows[lam][self.classes.index(mu)]

    def inner(self, f: tuple[int, ...], g: tuple[int, ...]) -> int:
        n_fact = factorial(self.n)
        total = sum(s * a * b for s, a, b in zip(self.class_sizes, f, g))
        q, r = divmod(total, n_fact)
        if r:
            raise ArithmeticError("inner product is not an integer")
        return q


@lru_cache(maxsize=None)
def sn_char_table(n: int) -> SnCharTable:
    classes = partition_list(n)
    sizes = tuple(class_size(mu) for mu in classes)
    lams = partition_list(n)
    rows = {lam: [0] * len(classes) for lam in lams}
    for j, mu in enumerate(classes):
        col = _table_column(n, mu)
        for lam, v in col.items():
            rows[lam][j] = v
    return SnCharTable(n, classes, sizes, {k: tuple(v) for k, v in rows.items()})


@lru_cache(maxsize=None)
def _mn_rec(lam: Partition, parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    r = parts[0]
    rest = parts[1:]
    slots = len(lam) if lam else 1
    beta = _beta(lam, slots)
    total = 0
    for b in beta:
        low = b - r
        if low < 0 or low in beta:
            continue
        newbeta = (beta - {b}) | {low}
        total += _strip_sign(beta, low, b) * _mn_rec(
            _beta_to_partition(newbeta, slots), rest
        )
    return total


def mn_value(lam: Partition, mu: Partition) -> int:
    """chi^lam on the class of cycle type mu, by strip removal (largest part first)."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    return _mn_rec(lam, tuple(sorted(mu, reverse=True)))


def kronecker_mult(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity <chi^lam . chi^mu, chi^nu> over S_n."""
    lam, mu, nu = check_partition(lam), check_partition(mu), check_partition(nu)
    if not (sum(lam) == sum(mu) == sum(nu)):
        raise SizeMismatchError("equal sizes required")
    t = sn_char_table(sum(lam))
    prod = tuple(a * b for a, b in zip(t.rows[lam], t.rows[mu]))
    return t.inner(prod, t.rows[nu])


def hook_char_row(n: int, mu: Partition) -> list[int]:
    """Values chi^{(n-m, 1^m)}(mu) for m = 0..n-1, via the hook generating function.

    The generating polynomial prod_i (1 - (-x)^i)^{a_i} factors exactly as
    (1 + x) * sum_m chi^{(n-m,1^m)}(mu) x^m.
    """
    poly = [1] + [0] * n
    for r in mu:
        term = [0] * (r + 1)
        term[0] = 1
        term[r] = 1 if r % 2 else -1  # 1 - (-x)^r
        out = [0] * (n + 1)
        for i, c in enumerate(poly):
            if c == 0:
                continue
            for j, d in enumerate(term):
                if i + j <= n and d:
                    out[i + j] += c * d
        poly = out
    quo = [0] * n
    carry = 0
    for m in range(n):
        quo[m] = poly[m] - carry
        carry = quo[m]
    if poly[n] != carry:
        raise ArithmeticError("hook generating polynomial not divisible by 1 + x")
    return quo


def staircase(k: int) -> Partition:
    return tuple(range(k, 0, -1))


@dataclass
class SaxlReport:
    k: int
    n: int
    mode: str  # "full" or "hooks"
    missing: list[Partition] | None
    multiplicities: dict[Partition, int] | None
    hook_multiplicities: dict[Partition, int]
    hook_complete: bool

    @property
    def all_present(self) -> bool:
        return self.missing is not None and not self.missing


def saxl_check(k: int, mode: str = "full", bound: int = 6) -> SaxlReport:
    """Decompose the tensor square of the staircase character of S_{k(k+1)/2}.

    mode "full" reports the multiplicity of every irreducible; mode "hooks"
    only evaluates hook multiplicities (cheap enough for k = 6).
    """
    if k > bound:
        raise ValueError(f"k={k} above configured bound {bound}")
    lam = staircase(k)
    n = sum(lam)
    classes = partition_list(n)
    sizes = [class_size(mu) for mu in classes]
    n_fact = factorial(n)

    if mode == "full":
        t = sn_char_table(n)
        lam_row = t.rows[lam]
        weights = [s * v * v for s, v in zip(sizes, lam_row)]
        mults = {}
        for nu in classes:
            total = sum(w * x for w, x in zip(weights, t.rows[nu]))
            mults[nu] = total // n_fact
        missing = [nu for nu, m in mults.items() if m == 0]
        hooks = {nu: mults[nu] for nu in mults if _is_hook(nu)}
        return SaxlReport(k, n, mode, missing, mults, hooks, all(hooks.values()))

    if mode != "hooks":
        raise ValueError(f"unknown mode {mode!r}")
    lam_row = [mn_value(lam, mu) for mu in classes]
    weights = [s * v * v for s, v in zip(sizes, lam_row)]
    hooks = {}
    for m in range(n):
        hooks[_hook(n, m)] = 0
    for j, mu in enumerate(classes):
        if weights[j] == 0:
            continue
        row = hook_char_row(n, mu)
        for m in range(n):
            hooks[_hook(n, m)] += weights[j] * row[m]
    hooks = {h: v // n_fact for h, v in hooks.items()}
    return SaxlReport(k, n, mode, None, None, hooks, all(hooks.values()))


def _hook(n: int, m: int) -> Partition:
    return check_partition((n - m,) + (1,) * m)


def _is_hook(nu: Partition) -> bool:
    return len(nu) <= 1 or all(p == 1 for p in nu[1:])


@dataclass
class TensorProductReport:
    lam: Partition
    n: int
    missing: list[Partition]
    multiplicities: dict[Partition, int]

    @property
    def all_present(self) -> bool:
        return not self.missing


def tensorprod_decompose_check(lam: Partition, bound: int = 16) -> TensorProductReport:
    """Constituents of chi^lam x chi^lam x (sum of all two-row characters)."""
    lam = check_partition(lam)
    n = sum(lam)
    if n > bound:
        raise ValueError(f"n={n} above configured bound {bound}")
    t = sn_char_table(n)
    two_rows = [check_partition((n - j, j)) for j in range(n // 2 + 1)]
    two_row_sum = [sum(vals) for vals in zip(*(t.rows[nu] for nu in two_rows))]
    lam_row = t.rows[lam]
    f = [a * a * b for a, b in zip(lam_row, two_row_sum)]
    mults = {nu: t.inner(tuple(f), t.rows[nu]) for nu in t.classes}
    missing = [nu for nu, m in mults.items() if m == 0]
    return TensorProductReport(lam, n, missing, mults)


def check_orthogonality(n: int) -> bool:
    """Both orthogonality relations, exactly."""
    t = sn_char_table(n)
    n_fact = factorial(n)
    lams = t.classes
    for i, lam in enumerate(lams):
        for mu in lams[i:]:
            total = sum(
                s * a * b for s, a, b in zip(t.class_sizes, t.rows[lam], t.rows[mu])
            )
            if total != (n_fact if lam == mu else 0):
                return False
    ncls = len(lams)
    for i in range(ncls):
        for j in range(i, ncls):
            total = sum(t.rows[lam][i] * t.rows[lam][j] for lam in lams)
            want = n_fact // t.class_sizes[i] if i == j else 0
            if total != want:
                return False
    return True
