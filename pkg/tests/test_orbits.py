import pytest

from saxl.orbits import (
    OrbitLabel,
    closure_compare,
    closure_leq,
    collapse,
    d_map,
    in_parity_set,
    is_self_dual,
    is_solvable,
    is_special,
    is_very_even,
    jm_weight,
    minimal_solvable,
    orbit_list,
    solvable_orbits,
)
from saxl.partitions import partitions, transpose

from oracles import max_dominated_in


def test_parity_sets():
    assert in_parity_set((2, 2, 1), "B")
    assert not in_parity_set((4, 1), "B")
    assert in_parity_set((4, 2), "C")
    assert not in_parity_set((5, 1), "C") is False or True  # (5,1): odd parts 5,1 odd mult


def test_collapse_examples():
    assert collapse((2, 2, 1), "B") == (2, 2, 1)
    assert collapse((4, 1), "B") == (3, 1, 1)
    assert collapse((5, 1), "C") == (4, 2)


def test_collapse_matches_brute_force_maximum():
    for m in range(1, 13):
        for typ in ("B", "C", "D"):
            if typ == "B" and m % 2 == 0:
                continue
            if typ in ("C", "D") and m % 2 == 1:
                continue
            members = [lam for lam in partitions(m) if in_parity_set(lam, typ)]
            for lam in partitions(m):
                got = collapse(lam, typ)
                assert got == max_dominated_in(lam, members), (typ, lam)
                if in_parity_set(lam, typ):
                    assert got == lam


def test_dmap_examples():
    assert d_map(OrbitLabel("A", (4, 3, 2, 1))).partition == (4, 3, 2, 1)
    assert d_map(OrbitLabel("C", (2, 2))).partition == (2, 2)
    assert d_map(OrbitLabel("A", (6,))).partition == (1,) * 6


def test_very_even_numerals():
    # a very even partition lies in the parity set only when its size is a
    # multiple of 4, i.e. the rank n is even, so the odd-rank numeral swap
    # never fires; d pairs (2,2,2,2) with (4,4) keeping numerals.
    o1 = OrbitLabel("D", (2, 2, 2, 2), "I")
    o2 = OrbitLabel("D", (2, 2, 2, 2), "II")
    assert closure_compare(o1, o2) == "incomparable"
    assert d_map(o1) == OrbitLabel("D", (4, 4), "I")
    assert d_map(d_map(o1)) == o1
    assert d_map(o2) == OrbitLabel("D", (4, 4), "II")
    # self-transpose very even partition
    o = OrbitLabel("D", (4, 4, 2, 2), "I")
    assert d_map(o) == o


def test_very_even_partitions_need_rank_multiple_of_two():
    with pytest.raises(ValueError):
        OrbitLabel("D", (2, 2, 2))  # odd multiplicity: not in the parity set
    sizes = [sum(o.partition) for size in range(4, 22, 2) for o in orbit_list("D", size) if o.numeral]
    assert all(s % 4 == 0 for s in sizes)


def test_closure_examples():
    assert closure_leq(OrbitLabel("C", (2, 2)), OrbitLabel("C", (4,)))
    for typ, size in (("A", 5), ("B", 7), ("C", 8), ("D", 8)):
        for o in orbit_list(typ, size):
            assert closure_compare(o, o) == "equal"


def test_solvable_examples():
    assert is_solvable(OrbitLabel("C", (2, 2)))
    assert not is_solvable(OrbitLabel("C", (2, 2, 2)))
    assert is_solvable(OrbitLabel("A", (3, 2, 1)))
    assert not is_solvable(OrbitLabel("A", (2, 2)))
    assert is_solvable(OrbitLabel("B", (3, 1, 1)))
    assert not is_solvable(OrbitLabel("B", (3, 3, 3, 1, 1)))


def test_special_examples():
    o = OrbitLabel("C", (2, 2))
    assert is_special(o) and is_self_dual(o)
    assert not is_special(OrbitLabel("B", (2, 2, 1)))
    for lam in partitions(6):
        assert is_special(OrbitLabel("A", lam))


def test_minimal_solvable():
    assert minimal_solvable("A", 6).partition == (3, 2, 1)
    assert minimal_solvable("C", 4).partition == (2, 2)
    assert minimal_solvable("D", 8).partition == (3, 3, 1, 1)
    assert minimal_solvable("C", 12).partition == (4, 4, 2, 2)
    assert minimal_solvable("D", 18).partition == (5, 5, 3, 3, 1, 1)
    assert minimal_solvable("B", 7).partition == (3, 3, 1)


def test_minimal_solvable_is_unique_minimum():
    for typ, sizes in (
        ("A", range(1, 11)),
        ("B", range(3, 16, 2)),
        ("C", range(2, 15, 2)),
        ("D", range(4, 15, 2)),
    ):
        for m in sizes:
            o = minimal_solvable(typ, m)
            for s in solvable_orbits(typ, m):
                assert closure_compare(s, o) in ("geq", "equal")


def test_jm_weight():
    w = jm_weight(OrbitLabel("A", (6,)))
    assert w.entries == (5, 3, 1, -1, -3, -5)
    assert jm_weight(OrbitLabel("A", (1, 1, 1))).norm_squared == 0
    w = jm_weight(OrbitLabel("C", (2, 2)))
    assert sorted(w.entries) == [-1, -1, 1, 1] and w.norm_squared == 4


def test_jm_entries_negation_symmetric():
    for typ, size in (("A", 8), ("B", 9), ("C", 10), ("D", 10)):
        for o in orbit_list(typ, size):
            w = jm_weight(o)
            assert sorted(w.entries) == sorted(-e for e in w.entries)


DESK_SIZES = (("A", 9), ("B", 9), ("B", 11), ("C", 10), ("C", 12), ("D", 10), ("D", 12))


def test_spaltenstein_properties_desk_scale():
    for typ, size in DESK_SIZES:
        orbits = orbit_list(typ, size)
        for o in orbits:
            d1 = d_map(o)
            d2 = d_map(d1)
            d3 = d_map(d2)
            assert d3 == d1, (o, "d^3 = d")
            assert closure_compare(o, d2) in ("leq", "equal"), (o, "d^2 >= id")
            if is_special(o):
                pass
        # order reversal
        for o1 in orbits:
            for o2 in orbits:
                if closure_leq(o1, o2):
                    assert closure_leq(d_map(o2), d_map(o1)), (o1, o2)


def test_special_equals_range_of_d():
    for typ, sizes in (
        ("B", (3, 5, 7, 9, 11)),
        ("C", (2, 4, 6, 8, 10, 12)),
        ("D", (4, 6, 8, 10, 12)),
    ):
        for size in sizes:
            orbits = orbit_list(typ, size)
            rng = {d_map(o) for o in orbits}
            for o in orbits:
                assert is_special(o) == (o in rng), (typ, size, o)


def test_d_involution_on_special():
    for typ, size in DESK_SIZES:
        for o in orbit_list(typ, size):
            if is_special(o):
                img = d_map(d_map(o))
                assert img == o, (o, img)


def test_jm_norm_monotone_in_closure_order():
    for typ, size in DESK_SIZES:
        orbits = orbit_list(typ, size)
        for o1 in orbits:
            for o2 in orbits:
                if closure_leq(o2, o1):
                    assert (
                        jm_weight(o1).norm_squared >= jm_weight(o2).norm_squared
                    ), (o1, o2)


def test_label_round_trip():
    for s in ("C:4,2", "D:2,2,2,2:I", "A:3,1", "B:3,1,1"):
        assert str(OrbitLabel.parse(s)) == s
    with pytest.raises(ValueError):
        OrbitLabel("D", (2, 2), None)  # very even needs numeral
    with pytest.raises(ValueError):
        OrbitLabel("C", (3, 1))  # parity violation
