"""Finite reflection groups as exact permutation groups on their root sets.

Elements are stored as permutations of the full root list (numpy uint8
index arrays), which is faithful; exact matrices on the reflection
representation are reconstructed on demand for class representatives by
walking the enumeration tree.  Conjugacy classes are canonically ordered by
(element order, class size, minimal member), making every downstream table
byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .roots import RootSystemSpec, EXPECTED_NROOTS, EXPECTED_ORDER, get_spec

SIZE_GUARD = 100_000


@dataclass
class ConjClass:
    rep: int  # element index of the canonical representative
    size: int
    order: int  # order of the elements
    members: np.ndarray


def _mat_mul(A, B):
    n = len(A)
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(1, n)), A[i][0] * B[0][j]) for j in range(n))
        for i in range(n)
    )


def _mat_vec(A, v):
    n = len(A)
    return tuple(sum((A[i][k] * v[k] for k in range(1, n)), A[i][0] * v[0]) for i in range(n))


class ReflectionGroup:
    def __init__(self, spec: RootSystemSpec, allow_large: bool = False):
        self.spec = spec
        self.name = spec.name
        self.rank = spec.rank
        self._build_roots()
        self._build_elements(allow_large)
        self._build_classes()

    # -- roots ----------------------------------------------------------
    def _build_roots(self):
        spec = self.spec
        roots = []
        index = {}
        queue = list(spec.simple_roots)
        for r in queue:
            if r not in index:
                index[r] = len(roots)
                roots.append(r)
        head = 0
        while head < len(roots):
            v = roots[head]
            head += 1
            for s in spec.simple_roots:
                w = spec.reflect(s, v)
                if w not in index:
                    index[w] = len(roots)
                    roots.append(w)
        self.roots = roots
        self.root_index = index
        self.nroots = len(roots)
        expected = EXPECTED_NROOTS.get(self.name)
        if expected is not None and self.nroots != expected:
            raise ArithmeticError(f"{self.name}: got {self.nroots} roots")
        # positive roots: closure of the simple roots under the simple
        # reflections, never crossing s_i(alpha_i) = -alpha_i
        simple_idx = [index[s] for s in spec.simple_roots]
        gen_perm = []
        for s in spec.simple_roots:
            gen_perm.append(
                np.array([index[spec.reflect(s, v)] for v in roots], dtype=np.uint8)
            )
        self.gen_perms = gen_perm
        pos = set(simple_idx)
        queue = list(simple_idx)
        while queue:
            b = queue.pop()
            for gi, g in enumerate(gen_perm):
                if b == simple_idx[gi]:
                    continue
                c = int(g[b])
                if c not in pos:
                    pos.add(c)
                    queue.append(c)
        if len(pos) * 2 != self.nroots:
            raise ArithmeticError(f"{self.name}: positive root count {len(pos)}")
        self.positive = sorted(pos)
        self.positive_set = frozenset(pos)
        self.negative_of = {}
        for idx in self.positive:
            minus = tuple(-x for x in roots[idx])
            self.negative_of[idx] = index[minus]

    # -- elements ---------------------------------------------------------
    def _build_elements(self, allow_large: bool):
        expected = EXPECTED_ORDER.get(self.name)
        if expected and expected > SIZE_GUARD and not allow_large:
            raise ValueError(
                f"{self.name} has {expected} elements; pass allow_large=True"
            )
        identity = np.arange(self.nroots, dtype=np.uint8)
        elems = [identity]
        index = {identity.tobytes(): 0}
        parent, via = [-1], [-1]
        head = 0
        while head < len(elems):
            w = elems[head]
            for gi, g in enumerate(self.gen_perms):
                new = g[w]  # (g o w)(r) = g[w[r]]
                key = new.tobytes()
                if key not in index:
                    index[key] = len(elems)
                    elems.append(new)
                    parent.append(head)
                    via.append(gi)
            head += 1
            if len(elems) > SIZE_GUARD and not allow_large:
                raise ValueError(f"{self.name}: size guard {SIZE_GUARD} exceeded")
        self.perms = np.stack(elems)
        self.order = len(elems)
        if expected is not None and self.order != expected:
            raise ArithmeticError(f"{self.name}: group order {self.order}")
        self.index_of = index
        self._parent = parent
        self._via = via
        inv = np.argsort(self.perms, axis=1).astype(np.uint8)
        self.perms_inv = inv
        self.inverse_idx = np.array(
            [index[inv[i].tobytes()] for i in range(self.order)], dtype=np.int64
        )

    def mul(self, i: int, j: int) -> int:
        """Index of element_i o element_j."""
        arr = self.perms[i][self.perms[j]]
        return self.index_of[arr.tobytes()]

    def element_order(self, i: int) -> int:
        e = np.arange(self.nroots, dtype=np.uint8)
        cur = self.perms[i]
        k = 1
        while not np.array_equal(cur, e):
            cur = self.perms[i][cur]
            k += 1
        return k

    # -- conjugacy classes -------------------------------------------------
    def _build_classes(self):
        gen_inv = [np.argsort(g).astype(np.uint8) for g in self.gen_perms]
        class_of = np.full(self.order, -1, dtype=np.int64)
        raw_classes = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            cid = len(raw_classes)
            members = [start]
            class_of[start] = cid
            queue = [start]
            while queue:
                w = queue.pop()
                wp = self.perms[w]
                for g, gi in zip(self.gen_perms, gen_inv):
                    conj = g[wp[gi]]
                    idx = self.index_of[conj.tobytes()]
                    if class_of[idx] < 0:
                        class_of[idx] = cid
                        members.append(idx)
                        queue.append(idx)
            raw_classes.append(members)
        # canonical ordering: (element order, class size, minimal member key)
        keyed = []
        for members in raw_classes:
            rep = min(members, key=lambda i: self.perms[i].tobytes())
            order = self.element_order(rep)
            keyed.append((order, len(members), self.perms[rep].tobytes(), rep, members))
        keyed.sort(key=lambda t: (t[0], t[1], t[2]))
        self.classes = []
        remap = {}
        for new_cid, (order, size, _key, rep, members) in enumerate(keyed):
            for m in members:
                remap[m] = new_cid
            self.classes.append(
                ConjClass(rep, size, order, np.array(sorted(members), dtype=np.int64))
            )
        self.class_of = np.array([remap[i] for i in range(self.order)], dtype=np.int64)
        self.num_classes = len(self.classes)
        self.identity_class = int(self.class_of[0])
        self.class_sizes = [c.size for c in self.classes]
        self.class_orders = [c.order for c in self.classes]
        self.inverse_class = [
            int(self.class_of[self.inverse_idx[c.rep]]) for c in self.classes
        ]
        # power maps rep^t for t = 0..order-1
        self.power_class = []
        for c in self.classes:
            pc = []
            cur = 0  # identity index
            for _ in range(c.order):
                pc.append(int(self.class_of[cur]))
                cur = self.mul(c.rep, cur)
            self.power_class.append(pc)

    # -- class algebra constants -------------------------------------------
    def class_matrix(self, i: int) -> list[list[int]]:
        """A_i with A_i[j][k] = a_{ijk} = #{x in C_i : x^{-1} z_k in C_j}.

        This is the matrix of multiplication by the class sum c_i on the
        center in the class-sum basis: (A_i v)_j = sum_k a_{ijk} v_k, so the
        character vectors omega are its eigenvectors.
        """
        members = self.classes[i].members
        Xinv = self.perms_inv[members]
        K = self.num_classes
        A = [[0] * K for _ in range(K)]
        idx_of = self.index_of
        cof = self.class_of
        for k, cls in enumerate(self.classes):
            z = self.perms[cls.rep]
            Y = Xinv[:, z]
            for row in Y:
                A[cof[idx_of[row.tobytes()]]][k] += 1
        return A

    # -- matrices on the reflection representation -------------------------
    @lru_cache(maxsize=None)
    def generator_matrix(self, gi: int):
        spec = self.spec
        alpha = spec.simple_roots[gi]
        if spec.is_unit():
            f = spec.field
            basis = []
            for j in range(self.rank):
                e = tuple(f.one if t == j else f.zero for t in range(self.rank))
                basis.append(spec.reflect(alpha, e))
            return tuple(tuple(basis[j][i] for j in range(self.rank)) for i in range(self.rank))
        cols = []
        for j in range(self.rank):
            e = tuple(1 if t == j else 0 for t in range(self.rank))
            cols.append(spec.reflect(alpha, e))
        return tuple(tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank))

    def _identity_matrix(self):
        spec = self.spec
        if spec.is_unit():
            f = spec.field
            return tuple(
                tuple(f.one if i == j else f.zero for j in range(self.rank))
                for i in range(self.rank)
            )
        return tuple(
            tuple(1 if i == j else 0 for j in range(self.rank))
            for i in range(self.rank)
        )

    def element_matrix(self, idx: int):
        """Exact matrix of an element, reconstructed along the BFS tree."""
        word = []
        while idx != 0:
            word.append(self._via[idx])
            idx = self._parent[idx]
        mat = self._identity_matrix()
        for gi in reversed(word):
            mat = _mat_mul(self.generator_matrix(gi), mat)
        return mat

    @lru_cache(maxsize=None)
    def class_rep_matrix(self, cid: int):
        return self.element_matrix(self.classes[cid].rep)

    def class_charpoly(self, cid: int):
        """det(x I - M) for the class representative, low degree first."""
        return _charpoly(self.class_rep_matrix(cid), self.spec)

    def reflection_char(self) -> list:
        """Trace on V per class (exact field elements or ints)."""
        out = []
        for cid in range(self.num_classes):
            m = self.class_rep_matrix(cid)
            tr = m[0][0]
            for i in range(1, self.rank):
                tr = tr + m[i][i]
            out.append(tr)
        return out


def _charpoly(mat, spec: RootSystemSpec):
    """Characteristic polynomial via permutation expansion (rank <= 6)."""
    import itertools

    n = len(mat)
    if spec.is_unit():
        f = spec.field
        zero, one = f.zero, f.one
    else:
        zero, one = 0, 1
    # entries of xI - M as linear polynomials (c0, c1)
    entry = [[((-mat[i][j]), one if i == j else zero) for j in range(n)] for i in range(n)]
    coeffs = [zero] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = [one]
        for i in range(n):
            c0, c1 = entry[i][perm[i]]
            new = [zero] * (len(prod) + 1)
            for d, c in enumerate(prod):
                new[d] = new[d] + c * c0
                new[d + 1] = new[d + 1] + c * c1
            prod = new
        for d, c in enumerate(prod):
            coeffs[d] = coeffs[d] + (c if sign > 0 else -c)
    return coeffs


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def build_group(name: str, allow_large: bool = False) -> ReflectionGroup:
    spec = get_spec(name)
    return ReflectionGroup(spec, allow_large=allow_large)
