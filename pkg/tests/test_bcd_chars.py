import itertools
from fractions import Fraction
from math import comb, factorial

import pytest

from saxl.bcd_chars import (
    BCClass,
    bc_char_table,
    bc_char_value,
    bc_classes,
    bc_dim,
    bc_labels,
    bc_tensor_mult,
    d_multiplicities,
    delta_twist,
    exterior_power_values,
    getallfamily_check,
    gl_to_o_branching,
    group_order,
    gsaxl_check_C,
    gsaxl_check_D,
    induction_identity_check,
    lemma48_check,
    sgn_twist,
    wedge_sum_values,
)
from saxl.partitions import bipartition_list, partition_list, partitions, transpose
from saxl.snchars import sn_char_table


# ---------------------------------------------------------------------------
# explicit signed-permutation oracle for n <= 4


def signed_perms(n):
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield (perm, signs)


def sp_mul(a, b):
    # (a * b)(i) = a(b(i)) with signs multiplying along the way
    pa, sa = a
    pb, sb = b
    perm = tuple(pa[pb[i]] for i in range(len(pa)))
    signs = tuple(sb[i] * sa[pb[i]] for i in range(len(pa)))
    return (perm, signs)


def sp_inv(a):
    pa, sa = a
    n = len(pa)
    inv = [0] * n
    for i in range(n):
        inv[pa[i]] = i
    perm = tuple(inv)
    signs = tuple(sa[inv[i]] for i in range(n))
    return (perm, signs)


def sp_cycle_type(a):
    pa, sa = a
    n = len(pa)
    seen = [False] * n
    pos, neg = [], []
    for i in range(n):
        if seen[i]:
            continue
        j, length, sign = i, 0, 1
        while not seen[j]:
            seen[j] = True
            sign *= sa[j]
            j = pa[j]
            length += 1
        (pos if sign == 1 else neg).append(length)
    return (
        tuple(sorted(pos, reverse=True)),
        tuple(sorted(neg, reverse=True)),
    )


def test_class_sizes_sum_to_group_order():
    for n in range(1, 7):
        assert sum(c.size() for c in bc_classes(n)) == group_order(n)


def test_class_sizes_match_enumeration():
    for n in (2, 3, 4):
        counts = {}
        for g in signed_perms(n):
            counts[sp_cycle_type(g)] = counts.get(sp_cycle_type(g), 0) + 1
        for cls in bc_classes(n):
            assert counts[(cls.pos, cls.neg)] == cls.size()


def induced_young_char(n, alpha, beta):
    """Oracle: explicit induction of the (alpha, beta) character from scratch.

    Builds sigma_(alpha,beta) = Ind from W(C_a) x W(C_b) of
    (chi^alpha o proj) boxtimes (chi^beta o proj) (x) delta, evaluated by
    summing over the full signed permutation group.  Only usable for tiny n.
    """
    a, b = sum(alpha), sum(beta)
    t_a = sn_char_table(a) if a else None
    t_b = sn_char_table(b) if b else None

    def sub_value(g):
        # g must preserve blocks {0..a-1}, {a..n-1} as sets
        pa, sa = g
        if any(pa[i] >= a for i in range(a)) or any(pa[i] < a for i in range(a, n)):
            return None
        ct1 = sp_cycle_type((tuple(pa[:a]), tuple(sa[:a])))
        ct2 = sp_cycle_type(
            (tuple(x - a for x in pa[a:]), tuple(sa[a:]))
        )
        v = 1
        if a:
            merged = tuple(sorted(ct1[0] + ct1[1], reverse=True))
            v *= t_a.rows[alpha][t_a.classes.index(merged)]
        if b:
            merged = tuple(sorted(ct2[0] + ct2[1], reverse=True))
            v *= t_b.rows[beta][t_b.classes.index(merged)]
            v *= (-1) ** len(ct2[1])  # delta on the second block
        return v

    n_sub = group_order(a) * group_order(b)
    values = {}
    elements = list(signed_perms(n))
    for cls in bc_classes(n):
        rep = None
        for g in elements:
            if sp_cycle_type(g) == (cls.pos, cls.neg):
                rep = g
                break
        total = 0
        for x in elements:
            h = sp_mul(sp_mul(sp_inv(x), rep), x)
            v = sub_value(h)
            if v is not None:
                total += v
        assert total % n_sub == 0
        values[cls] = total // n_sub
    return values


def test_table_against_induction_oracle():
    for n in (1, 2, 3):
        t = bc_char_table(n)
        for alpha, beta in bc_labels(n):
            oracle = induced_young_char(n, alpha, beta)
            for j, cls in enumerate(t.classes):
                assert t.rows[(alpha, beta)][j] == oracle[cls], (alpha, beta, cls)


def test_table_against_induction_oracle_n4_sample():
    n = 4
    t = bc_char_table(n)
    for label in [((2, 1), (1,)), ((2,), (2,)), ((), (2, 1, 1)), ((1, 1), (1, 1))]:
        oracle = induced_young_char(n, *label)
        for j, cls in enumerate(t.classes):
            assert t.rows[label][j] == oracle[cls], (label, cls)


def test_trivial_sign_linear_rows():
    for n in range(1, 6):
        t = bc_char_table(n)
        assert all(v == 1 for v in t.rows[((n,), ())])
        for j, cls in enumerate(t.classes):
            assert t.rows[((), (n,))][j] == (-1) ** len(cls.neg)


def test_dims():
    assert bc_char_value(((1,), (1,)), BCClass((1, 1), ())) == 2
    for n in range(1, 6):
        t = bc_char_table(n)
        id_idx = t.classes.index(BCClass((1,) * n, ()))
        for label in bc_labels(n):
            assert bc_dim(label) == t.rows[label][id_idx]


def test_orthogonality():
    for n in range(1, 6):
        t = bc_char_table(n)
        labels = bc_labels(n)
        order = group_order(n)
        for i, l1 in enumerate(labels):
            for l2 in labels[i:]:
                total = sum(
                    s * a * b
                    for s, a, b in zip(t.class_sizes, t.rows[l1], t.rows[l2])
                )
                assert total == (order if l1 == l2 else 0)


def test_tensor_mult_examples():
    for n in range(1, 5):
        for label in bc_labels(n):
            assert bc_tensor_mult(label, label, ((n,), ())) == 1
    # the square of the 2-dim reflection character of the order-8 group is
    # the sum of the four linear characters, so it does not contain itself
    sq = {
        lab: bc_tensor_mult(((1,), (1,)), ((1,), (1,)), lab) for lab in bc_labels(2)
    }
    assert sq == {
        ((2,), ()): 1,
        ((1, 1), ()): 1,
        ((), (2,)): 1,
        ((), (1, 1)): 1,
        ((1,), (1,)): 0,
    }


def test_sgn_twist_convention():
    # sigma_(alpha,beta) (x) sgn has label (beta^t, alpha^t); pinned n <= 5
    for n in range(1, 6):
        t = bc_char_table(n)
        sgn = t.rows[((), (1,) * n)]
        for label in bc_labels(n):
            twisted = tuple(a * s for a, s in zip(t.rows[label], sgn))
            assert twisted == t.rows[sgn_twist(label)], label


def test_delta_twist_convention():
    # tensoring with the sign-product character swaps the two coordinates
    for n in range(1, 6):
        t = bc_char_table(n)
        delta = t.rows[((), (n,))]
        for label in bc_labels(n):
            twisted = tuple(a * s for a, s in zip(t.rows[label], delta))
            assert twisted == t.rows[delta_twist(label)], label


def test_exterior_powers():
    for n in range(1, 7):
        t = bc_char_table(n)
        assert exterior_power_values(n, 0) == t.rows[((n,), ())]
        assert exterior_power_values(n, n) == t.rows[((), (1,) * n)]
        # each wedge power is irreducible with the known bipartition label
        for i in range(n + 1):
            vals = exterior_power_values(n, i)
            assert t.inner(vals, vals) == 1
            expected_label = (
                ((n - i,), (1,) * i) if 0 < i < n else (((n,), ()) if i == 0 else ((), (1,) * n))
            )
            assert vals == t.rows[expected_label], (n, i)
        assert wedge_sum_values(n) == tuple(
            sum(col) for col in zip(*(exterior_power_values(n, i) for i in range(n + 1)))
        )
    with pytest.raises(ValueError):
        exterior_power_values(3, 4)


def test_restriction_coherence():
    # the restriction of sigma_(alpha,beta) and sigma_(beta,alpha) to W(D_n)
    # agree on D-classes
    for n in (2, 3, 4, 5):
        t = bc_char_table(n)
        for alpha, beta in bc_labels(n):
            if alpha == beta:
                continue
            r1 = t.rows[(alpha, beta)]
            r2 = t.rows[(beta, alpha)]
            for cls, v1, v2 in zip(t.classes, r1, r2):
                if cls.in_d():
                    assert v1 == v2


def test_d_multiplicities_regular_character():
    # the regular character of W(D_n) decomposes with multiplicity = dimension
    n = 3
    t = bc_char_table(n)
    reg = tuple(
        (group_order(n) // 2 if cls.pos == (1,) * n and not cls.neg else 0)
        for cls in t.classes
    )
    mults = d_multiplicities(n, reg)
    # for n odd there are no split labels; dims come from the C-side labels
    for key, m in mults.items():
        assert isinstance(key, frozenset)
        a, b = sorted(key, reverse=True)
        assert m == bc_dim((a, b))


def test_lemma48():
    for n in range(1, 5):
        rep = lemma48_check(n)
        assert rep.ok, rep.mismatches[:4]


def test_lemma48_example_rows():
    # n=2, gamma=(1,1): exactly three labels hit 1
    t = bc_char_table(2)
    wsum = wedge_sum_values(2)
    base = tuple(a * w for a, w in zip(t.rows[((1, 1), ())], wsum))
    hits = {lab: t.inner(base, t.rows[lab]) for lab in bc_labels(2)}
    assert hits == {
        ((2,), ()): 0,
        ((1, 1), ()): 1,
        ((1,), (1,)): 1,
        ((), (2,)): 1,
        ((), (1, 1)): 0,
    }


def test_gsaxl_C_k1():
    rep = gsaxl_check_C(1)
    assert rep.n == 2
    assert sorted(rep.family) == sorted([((1, 1), ()), ((1,), (1,)), ((), (2,))])
    assert rep.missing == []
    assert rep.wedge_guarantee_ok


def test_gsaxl_D_k2():
    rep = gsaxl_check_D(2)
    assert rep.n == 4
    assert len(rep.family) == comb(4, 2) // 2
    assert rep.missing == []
    assert rep.wedge_guarantee_ok


def test_gsaxl_D_k1_degenerate():
    with pytest.raises(ValueError):
        gsaxl_check_D(1)


def test_getallfamily_small():
    for typ, ks in (("C", (1, 2)), ("D", (2,))):
        for k in ks:
            rep = getallfamily_check(typ, k)
            assert rep.lr_path_ok and rep.multiplicity_one, (typ, k)
            assert rep.direct_path_ok is True, (typ, k)


def test_getallfamily_family_sizes():
    assert getallfamily_check("C", 1).family_size == 3
    assert getallfamily_check("C", 2).family_size == comb(5, 2)
    assert getallfamily_check("D", 2).family_size == comb(4, 2) // 2


def test_induction_identity():
    assert induction_identity_check(1)


def test_gl_to_o_branching():
    assert gl_to_o_branching((1,), 4) == {(1,): 1}
    out = gl_to_o_branching((2,), 4)
    assert out[()] == 1 and out[(2,)] == 1
    # (2^r, 1^s) shapes only branch to shapes of the same form
    for lam in [(2, 1), (2, 2), (2, 1, 1), (2, 2, 1)]:
        for lambar, m in gl_to_o_branching(lam, 6).items():
            assert m > 0
            assert all(p <= 2 for p in lambar)
