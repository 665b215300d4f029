import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from saxl.partitions import (
    SizeMismatchError,
    bipartition_list,
    check_partition,
    dominance_compare,
    dominance_leq,
    format_bipartition,
    format_partition,
    hook_dim,
    kostka,
    lr_coeff,
    parse_bipartition,
    parse_partition,
    partition_list,
    partitions,
    rectangle_family_conditions,
    strict_expansion_witness,
    transpose,
)

from oracles import lr_by_schur_products


PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def partitions_strategy(max_n=16):
    return st.integers(0, max_n).flatmap(
        lambda n: st.sampled_from(partition_list(n)) if n >= 0 else st.nothing()
    )


def test_partition_counts():
    for n, expected in enumerate(PARTITION_COUNTS):
        assert len(partition_list(n)) == expected


def test_check_partition_canonicalizes():
    assert check_partition([3, 1, 0, 0]) == (3, 1)
    assert check_partition(()) == ()
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, -1))


def test_string_grammar_round_trip():
    assert parse_partition("4,3,2,1") == (4, 3, 2, 1)
    assert parse_partition("-") == ()
    assert format_partition(()) == "-"
    assert parse_bipartition("2,1|-") == ((2, 1), ())
    assert format_bipartition(((2, 1), ())) == "2,1|-"
    for n in range(6):
        for pair in bipartition_list(n):
            assert parse_bipartition(format_bipartition(pair)) == pair


def test_transpose_examples():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose((4, 3, 2, 1)) == (4, 3, 2, 1)
    assert transpose((2, 2, 2)) == (3, 3)


def test_transpose_involution_up_to_30():
    for n in list(range(13)) + [20, 30]:
        for lam in partitions(n):
            assert transpose(transpose(lam)) == lam


def test_dominance_examples():
    assert dominance_compare((1, 1, 1), (3,)) == "leq"
    assert dominance_compare((2, 2), (3, 1)) == "leq"
    assert dominance_compare((3, 1, 1, 1), (2, 2, 2)) == "incomparable"
    assert dominance_compare((2, 1), (2, 1)) == "equal"
    with pytest.raises(SizeMismatchError):
        dominance_leq((2,), (1, 1, 1))


def test_dominance_antiautomorphism():
    # lam <= mu iff mu^t <= lam^t, exhaustively for n <= 12
    for n in range(13):
        plist = partition_list(n)
        for lam in plist:
            for mu in plist:
                assert dominance_leq(lam, mu) == dominance_leq(
                    transpose(mu), transpose(lam)
                )


def test_kostka_examples():
    for lam in partitions(6):
        assert kostka(lam, lam) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    with pytest.raises(SizeMismatchError):
        kostka((2,), (1,))


def test_kostka_positive_iff_dominates():
    for n in range(11):
        plist = partition_list(n)
        for shape in plist:
            for content in plist:
                assert (kostka(shape, content) > 0) == dominance_leq(content, shape)


def test_lr_examples():
    assert lr_coeff((1,), (1,), (1, 1)) == 1
    assert lr_coeff((2, 2, 1), (1,), (2, 2, 2)) == 1
    for gamma in partitions(5):
        for alpha in partitions(5):
            assert lr_coeff(alpha, (), gamma) == (1 if gamma == alpha else 0)
    # alpha not contained in gamma gives 0, not an error
    assert lr_coeff((3,), (1,), (2, 2)) == 0


def test_lr_against_schur_product_oracle():
    from oracles import poly_mul, schur_expand, schur_poly

    for total in range(9):
        for a in range(total // 2 + 1):
            for alpha in partitions(a):
                for beta in partitions(total - a):
                    nvars = max(total, 1)
                    prod = poly_mul(
                        schur_poly(alpha, nvars), schur_poly(beta, nvars)
                    )
                    expansion = schur_expand(prod, total, nvars)
                    for gamma in partitions(total):
                        want = expansion.get(gamma, 0)
                        assert lr_coeff(alpha, beta, gamma) == want, (
                            alpha,
                            beta,
                            gamma,
                        )
                        # symmetry in the two factors comes for free
                        assert lr_coeff(beta, alpha, gamma) == want


def test_hook_dim():
    assert hook_dim(()) == 1
    assert hook_dim((2, 1)) == 2
    assert hook_dim((3, 2, 1)) == 16
    for n in range(1, 8):
        assert sum(hook_dim(lam) ** 2 for lam in partitions(n)) == _factorial(n)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@settings(max_examples=200)
@given(partitions_strategy())
def test_transpose_involution_property(lam):
    assert transpose(transpose(lam)) == lam


@settings(max_examples=100)
@given(partitions_strategy(12), partitions_strategy(12))
def test_dominance_transpose_property(lam, mu):
    if sum(lam) != sum(mu):
        return
    assert dominance_leq(lam, mu) == dominance_leq(transpose(mu), transpose(lam))


# ---------------------------------------------------------------------------
# strict expansion witnesses


def family_members_from_conditions(k, kind):
    from saxl.partitions import bipartitions

    n = k * (k + 1) if kind == "C" else k * k
    return [
        (a, b)
        for a, b in bipartitions(n)
        if rectangle_family_conditions(a, b, k, kind)
    ]


def test_witness_spec_examples():
    w = strict_expansion_witness((1,), (1,), (1, 1))
    assert w is not None
    assert w.steps == ((2, 1, 1),)
    assert w.validate()

    w = strict_expansion_witness((1, 1), (), (1, 1))
    assert w is not None and w.steps == ()

    w = strict_expansion_witness((2, 2, 1), (1,), (2, 2, 2))
    assert w is not None
    assert w.steps == ((3, 2, 1),)
    assert w.validate()


def test_witness_absent_when_no_expansion():
    assert strict_expansion_witness((2,), (1,), (1, 1, 1)) is None
    assert strict_expansion_witness((1,), (1,), (3,)) is None


def test_family_sizes_match_binomials():
    import math

    for k in range(1, 5):
        assert len(family_members_from_conditions(k, "C")) == math.comb(2 * k + 1, k)
    for k in range(1, 5):
        assert len(family_members_from_conditions(k, "D")) == math.comb(2 * k, k)


def test_witness_exists_and_is_unique_expansion_for_family_members():
    # every family member admits a valid witness and LR multiplicity exactly 1
    for kind in ("C", "D"):
        for k in range(1, 5):
            lam = (k,) * (k + 1) if kind == "C" else (k,) * k
            for alpha, beta in family_members_from_conditions(k, kind):
                w = strict_expansion_witness(alpha, beta, lam)
                assert w is not None, (kind, k, alpha, beta)
                assert w.validate(), (kind, k, alpha, beta)
                if k <= 3:
                    assert lr_coeff(alpha, transpose(beta), lam) == 1
    # k = 4 multiplicity-one check on a sample to keep runtime modest
    lam = (4, 4, 4, 4, 4)
    members = family_members_from_conditions(4, "C")
    for alpha, beta in members[::9]:
        assert lr_coeff(alpha, transpose(beta), lam) == 1
