"""Linear algebra and number theory over GF(p) for the character table solver."""

from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64 bits of our usage."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > order."""
    p = order + 1 + ((-order) % exponent)
    if p <= order:
        p += exponent
    while not is_prime(p):
        p += exponent
    return p


def primitive_root(p: int) -> int:
    """Smallest primitive root mod p."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod p (Tonelli-Shanks); raises if a is not a square."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ArithmeticError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = next(z for z in range(2, p) if pow(z, (p - 1) // 2, p) == p - 1)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def rref(rows: list[list[int]], p: int):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(rows: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right nullspace of the matrix."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-red[i][fc]) % p
        basis.append(vec)
    return basis


def solve_in_span(basis: list[list[int]], targets: list[list[int]], p: int):
    """Coordinates of each target vector in the span of `basis`.

    basis: d vectors of length K (independent).  Returns a d x len(targets)
    coordinate matrix; raises if some target is outside the span.
    """
    d = len(basis)
    K = len(basis[0])
    aug = [[basis[j][i] for j in range(d)] + [t[i] for t in targets] for i in range(K)]
    red, pivots = rref(aug, p)
    if any(c >= d for c in pivots):
        raise ArithmeticError("target outside span")
    coords = [[0] * len(targets) for _ in range(d)]
    for i, pc in enumerate(pivots):
        for t in range(len(targets)):
            coords[pc][t] = red[i][d + t]
    return coords


def charpoly_mod(mat: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial det(xI - M) mod p, low degree first.

    Faddeev-LeVerrier; requires p > dimension (divisions by 1..K).
    """
    K = len(mat)
    coeffs = [0] * (K + 1)
    coeffs[K] = 1
    M = [[mat[i][j] % p for j in range(K)] for i in range(K)]
    Mk = [row[:] for row in M]
    for k in range(1, K + 1):
        tr = sum(Mk[i][i] for i in range(K)) % p
        c = (-tr * pow(k, p - 2, p)) % p
        coeffs[K - k] = c
        if k < K:
            for i in range(K):
                Mk[i][i] = (Mk[i][i] + c) % p
            Mk = [
                [sum(M[i][l] * Mk[l][j] for l in range(K)) % p for j in range(K)]
                for i in range(K)
            ]
    return coeffs


def poly_roots_mod(coeffs: list[int], p: int) -> list[int]:
    """All roots in GF(p), by vectorized scan (deterministic, ascending)."""
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ArithmeticError("zero polynomial")
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(cs):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]
