from itertools import product

import pytest

from char2orbits import combinatorics as co

# frozen by hand/classical tables
P_VALUES = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
P2_VALUES = [1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481]


def test_partition_counts():
    for n, v in enumerate(P_VALUES):
        got = list(co.partitions(n))
        assert len(got) == v == co.partition_count(n)
        assert len(set(got)) == v
        for p in got:
            assert co.is_partition(p) and sum(p) == n


def test_p2():
    for n, v in enumerate(P2_VALUES):
        assert co.p2(n) == v
    assert co.p2(-1) == 0
    assert co.p2(-5) == 0


def all_pairs(n):
    out = []
    for a in range(n + 1):
        for mu in co.partitions(a):
            for nu in co.partitions(n - a):
                out.append((mu, nu))
    return out


def test_p2_matches_exhaustive_pairs():
    for n in range(7):
        assert len(all_pairs(n)) == co.p2(n)


def test_strip_zeros_convention():
    assert co.strip_zeros((3, 1, 0, 0)) == (3, 1)
    assert co.strip_zeros(()) == ()
    assert co.symp_pair_valid((1, 0), (1,)) == co.symp_pair_valid((1,), (1, 0, 0))


# ----------------------------------------------------------------------
# symplectic labels


def test_symp_enumeration_size():
    for n in range(1, 11):
        assert len(co.symp_pairs(n)) == co.p2(n) - co.p2(n - 2)


def test_symp_pairs_n2_explicit():
    got = set(co.symp_pairs(2))
    assert got == {((), (1, 1)), ((1,), (1,)), ((2,), ()), ((1, 1), ())}


def test_symbol_pair_round_trip():
    for n in range(1, 9):
        for pair in co.symp_pairs(n):
            blocks = co.symp_pair_to_symbol(pair)
            assert co.symp_symbol_to_pair(blocks) == pair
            assert sum(m for m, _ in blocks) == n


def test_symbol_validity_bounds():
    assert co.symp_symbol_valid(((1, 0),))
    assert co.symp_symbol_valid(((2, 1), (1, 1)))
    assert not co.symp_symbol_valid(((2, 0),))  # l < floor(m/2)
    assert not co.symp_symbol_valid(((1, 2),))  # l > m
    assert not co.symp_symbol_valid(((2, 2), (2, 1), (1, 1)))  # m-l increases then?
    assert co.symp_symbol_valid(((2, 2), (2, 2), (1, 1)))


def test_symp_symbol_to_pair_drops_zero_parts():
    assert co.symp_symbol_to_pair(((1, 0),)) == ((), (1,))
    assert co.symp_symbol_to_pair(((2, 2), (1, 1))) == ((2, 1), ())


def test_symp_split_k_examples():
    # (2)^2_2 has pair mu=(2), nu=(); nothing to split
    assert co.symp_split_k(co.symp_symbol_to_pair(((2, 2),))) == 0
    # (2)^2_1 has pair mu=(1), nu=(1); one split position
    assert co.symp_split_k(((1,), (1,))) == 1
    assert co.symp_fq_fanout(((1,), (1,))) == [((1,), (1,)), ((), (2,))]


def test_symp_fanout_identity_first_and_membership():
    for n in range(1, 9):
        for pair in co.symp_pairs(n):
            fan = co.symp_fq_fanout(pair)
            assert len(fan) == 2 ** co.symp_split_k(pair)
            assert len(set(fan)) == len(fan)
            assert fan[0] == pair
            in_delta = [p for p in fan if co.symp_pair_valid(*p)]
            assert in_delta == [pair]
            for mu, nu in fan:
                assert co.is_partition(mu) and co.is_partition(nu)
                assert sum(mu) + sum(nu) == n


def test_symp_fanout_union_is_all_pairs():
    for n in range(1, 9):
        seen = []
        for pair in co.symp_pairs(n):
            seen.extend(co.symp_fq_fanout(pair))
        assert len(seen) == len(set(seen)) == co.p2(n)
        assert set(seen) == {(co.strip_zeros(a), co.strip_zeros(b)) for a, b in all_pairs(n)}


def test_symp_sum_2k_is_p2():
    for n in range(1, 11):
        total = sum(2 ** co.symp_split_k(p) for p in co.symp_pairs(n))
        assert total == co.p2(n)


def test_symp_fanout_rejects_invalid():
    with pytest.raises(ValueError):
        co.symp_fq_fanout(((), (2,)))


# ----------------------------------------------------------------------
# odd orthogonal labels


def test_oodd_n1_and_n2():
    assert set(co.oodd_pairs(1)) == {((1,), ()), ((), (1,))}
    assert len(co.oodd_pairs(2)) == 4
    assert set(co.oodd_pairs(2)) == {((2,), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))}


def test_oodd_enumeration_size():
    for n in range(1, 11):
        assert len(co.oodd_pairs(n)) == co.p2(n) - co.p2(n - 2)


def test_oodd_split_k_examples():
    assert co.oodd_split_k(((1,), (1,))) == 1
    assert co.oodd_split_k(((), (2,))) == 0
    assert co.oodd_split_k(((2,), ())) == 0
    fan = co.oodd_fq_fanout(((1,), (1,)))
    assert fan == [((1,), (1,)), ((1, 1), ())]


def test_oodd_fanout_properties():
    for n in range(1, 9):
        seen = []
        for pair in co.oodd_pairs(n):
            fan = co.oodd_fq_fanout(pair)
            assert len(fan) == 2 ** co.oodd_split_k(pair)
            assert len(set(fan)) == len(fan)
            assert fan[0] == pair
            assert [p for p in fan if co.oodd_pair_valid(*p)] == [pair]
            for nu, mu in fan:
                assert co.is_partition(nu) and co.is_partition(mu)
                assert sum(nu) + sum(mu) == n
            seen.extend(fan)
        assert len(seen) == len(set(seen)) == co.p2(n)


def test_oodd_sum_2k_is_p2():
    for n in range(1, 11):
        assert sum(2 ** co.oodd_split_k(p) for p in co.oodd_pairs(n)) == co.p2(n)


# ----------------------------------------------------------------------
# Weyl counts


def test_weyl_counts():
    assert co.weyl_irrep_count("B", 2) == 5
    assert co.weyl_irrep_count("C", 3) == 10
    for n in range(1, 9):
        assert co.weyl_irrep_count("B", n) == co.weyl_irrep_count("C", n) == co.p2(n)
    # D_n: unordered pairs, equal halves doubled; D_2 = W(A1xA1) has 4
    # conjugacy classes, D_3 = W(A3) = S_4 has 5, D_4 has 13
    assert co.weyl_irrep_count("D", 2) == 4
    assert co.weyl_irrep_count("D", 3) == 5
    assert co.weyl_irrep_count("D", 4) == 13
    with pytest.raises(ValueError):
        co.weyl_irrep_count("E", 8)
    with pytest.raises(ValueError):
        co.weyl_irrep_count("B", 0)


def test_weyl_d_by_direct_count():
    for n in range(1, 9):
        uno = set()
        dbl = 0
        for mu, nu in all_pairs(n):
            key = tuple(sorted([mu, nu]))
            uno.add(key)
            if mu == nu:
                dbl += 1
        assert co.weyl_irrep_count("D", n) == len(uno) + dbl


# ----------------------------------------------------------------------
# text forms


def test_pair_text_round_trip():
    assert co.format_pair(((1,), (1,))) == "nu=[1];mu=[1]"
    assert co.format_pair(((), (2,))) == "nu=[2];mu=[]"
    assert co.format_pair(((), (2,)), odd=True) == "nu=[0];mu=[2]"
    assert co.parse_pair("nu=[2]; mu=[]") == ((), (2,))
    assert co.parse_pair("nu=[0];mu=[2]", odd=True) == ((), (2,))
    for n in range(5):
        for pair in co.symp_pairs(n):
            assert co.parse_pair(co.format_pair(pair)) == pair
        for pair in co.oodd_pairs(n):
            assert co.parse_pair(co.format_pair(pair, odd=True), odd=True) == pair
    with pytest.raises(ValueError):
        co.parse_pair("mu=[1]; nu=[1]")


def test_symbol_text():
    assert co.format_symp_symbol(((2, 1), (1, 0))) == "(2)^2_1(1)^2_0"
