"""Independent brute-force oracles used only by the test suite.

These deliberately avoid the code paths they check: Schur polynomials are
expanded monomial by monomial, maximal dominated elements are found by
exhaustive search, and small group characters come from explicit group
element enumeration.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from saxl.partitions import (
    check_partition,
    dominance_leq,
    partition_list,
    partitions,
    transpose,
)


@lru_cache(maxsize=None)
def ssyt_weights(shape, nvars):
    """Multiset of weights (as monomial tuples) of all SSYT of `shape` in nvars letters."""
    shape = check_partition(shape)
    if not shape:
        return ((0,) * nvars,)
    weights = []

    rows = len(shape)

    def rec(r, c, fill):
        if r == rows:
            w = [0] * nvars
            for row in fill:
                for v in row:
                    w[v - 1] += 1
            weights.append(tuple(w))
            return
        if c == shape[r]:
            rec(r + 1, 0, fill)
            return
        lo = 1
        if c > 0:
            lo = max(lo, fill[r][c - 1])
        if r > 0 and c < shape[r - 1]:
            lo = max(lo, fill[r - 1][c] + 1)
        for v in range(lo, nvars + 1):
            fill[r].append(v)
            rec(r, c + 1, fill)
            fill[r].pop()

    rec(0, 0, [[] for _ in range(rows)])
    return tuple(weights)


def schur_poly(shape, nvars):
    """Schur polynomial as a dict monomial-tuple -> coefficient."""
    poly = {}
    for w in ssyt_weights(shape, nvars):
        poly[w] = poly.get(w, 0) + 1
    return poly


def poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return out


def schur_expand(poly, n, nvars):
    """Expand a symmetric polynomial of degree n into Schur coefficients."""
    poly = dict(poly)
    coeffs = {}
    while any(poly.values()):
        lead = max((m for m, c in poly.items() if c != 0))
        lam = check_partition(sorted(lead, reverse=True))
        c = poly[lead]
        coeffs[lam] = c
        for m, cc in schur_poly(lam, nvars).items():
            poly[m] = poly.get(m, 0) - c * cc
    return coeffs


def lr_by_schur_products(alpha, beta, gamma):
    """LR coefficient via monomial expansion of a Schur polynomial product."""
    n = sum(gamma)
    nvars = max(n, 1)
    prod = poly_mul(schur_poly(alpha, nvars), schur_poly(beta, nvars))
    return schur_expand(prod, n, nvars).get(check_partition(gamma), 0)


def max_dominated_in(lam, members):
    """The unique dominance-maximal element of `members` dominated by lam.

    Raises if the maximum is not unique or does not exist.
    """
    dominated = [mu for mu in members if dominance_leq(mu, lam)]
    best = [
        mu
        for mu in dominated
        if all(dominance_leq(nu, mu) for nu in dominated)
    ]
    assert len(best) == 1, f"no unique maximum below {lam}"
    return best[0]
