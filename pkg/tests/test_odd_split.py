"""Chain splitting and labeling of odd orthogonal functionals."""

from itertools import product

import numpy as np
import pytest

from char2orbits import combinatorics as cb
from char2orbits import linalg as la
from char2orbits import odd_split as od
from char2orbits.classical import (alternating_gram, coadjoint,
                                   is_nilpotent_functional,
                                   random_group_element, space_for)
from char2orbits.finite_field import Field
from char2orbits.form_modules import BlockLabel, ClassificationError

F2 = Field(1)
F4 = Field(2)


def canonical_labels(n):
    "Every decorated label with decorations free exactly at split positions."
    out = []
    for pair in cb.oodd_pairs(n):
        nu, mu = pair
        m = nu[0] if nu else 0
        tail = list(nu[1:]) + [0] * (len(mu) - len(nu) + 1)
        base = [BlockLabel(mu[i] + tail[i], mu[i]) for i in range(len(mu))]
        free = [i - 1 for i in cb.oodd_split_indices(pair)]
        for choice in product("0d", repeat=len(free)):
            eps = ["0"] * len(base)
            for pos, c in zip(free, choice):
                eps[pos] = c
            out.append(od.OddLabel(m, tuple(
                BlockLabel(b.m, b.l, e) for b, e in zip(base, eps))))
    return out


def all_functionals(space):
    for vals in product(range(space.field.q), repeat=space.dim_algebra):
        yield space.dual_from_values(np.array(vals, dtype=np.uint8))


def census(space):
    labels = {}
    failed = 0
    for X in all_functionals(space):
        try:
            s = od.split_odd_functional(space, X)
        except od.SplitError:
            failed += 1
            continue
        lab = od.rational_odd_label(s)
        labels[lab] = labels.get(lab, 0) + 1
    return labels, failed


def test_zero_functional_has_empty_chain_and_trivial_blocks():
    sp = space_for("so-odd", 2)
    s = od.split_odd_functional(sp, la.zeros(sp.d, sp.d))
    assert s.m == 0 and s.dual == []
    assert s.module is not None and s.module.dim == 4
    closed = od.closed_odd_label(s)
    assert closed.blocks == (BlockLabel(1, 1), BlockLabel(1, 1))
    lab = od.rational_odd_label(s)
    assert lab.eps() == ("0", "0")
    assert lab.pair() == ((), (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pure_chain_witness_has_no_complement(n):
    lab = od.OddLabel(n, ())
    space, X = od.odd_witness(lab, F2)
    s = od.split_odd_functional(space, X)
    assert s.m == n
    assert s.module is None and len(s.complement) == 0
    assert len(s.chain) == n + 1 and len(s.dual) == n
    assert od.rational_odd_label(s) == lab
    assert od.closed_odd_label(s) == lab


def test_split_rejects_other_kinds():
    sp = space_for("sp", 1)
    with pytest.raises(ValueError):
        od.split_odd_functional(sp, la.zeros(sp.d, sp.d))


def test_non_nilpotent_functional_fails_to_split():
    sp = space_for("so-odd", 1)
    semisimple = sp.dual_from_values(np.array([1, 0, 0], dtype=np.uint8))
    with pytest.raises(od.SplitError, match="not nilpotent"):
        od.split_odd_functional(sp, semisimple)
    mixed = sp.dual_from_values(np.array([0, 1, 1], dtype=np.uint8))
    with pytest.raises(od.SplitError, match="quadratic value"):
        od.split_odd_functional(sp, mixed)


@pytest.mark.parametrize("e", [1, 2])
def test_split_success_is_the_nilpotency_criterion(e):
    sp = space_for("so-odd", 2, e=e)
    rng = np.random.default_rng(3 + e)
    for _ in range(40):
        vals = rng.integers(0, sp.field.q, size=sp.dim_algebra).astype(np.uint8)
        X = sp.dual_from_values(vals)
        try:
            od.split_odd_functional(sp, X)
            split_ok = True
        except od.SplitError:
            split_ok = False
        assert split_ok == is_nilpotent_functional(sp, X)


def test_exhaustive_o3_census_over_f2():
    labels, failed = census(space_for("so-odd", 1))
    assert failed == 4
    chain = od.OddLabel(1, ())
    trivial = od.OddLabel(0, (BlockLabel(1, 1, "0"),))
    assert labels == {chain: 3, trivial: 1}


def test_exhaustive_o5_census_over_f2():
    labels, failed = census(space_for("so-odd", 2))
    assert failed == 1024 - 256
    assert set(labels) == set(canonical_labels(2))
    sizes = {lab: cnt for lab, cnt in labels.items()}
    assert sizes[od.OddLabel(2, ())] == 180
    assert sizes[od.OddLabel(0, (BlockLabel(1, 1, "0"), BlockLabel(1, 1, "0")))] == 1
    assert sizes[od.OddLabel(1, (BlockLabel(1, 1, "d"),))] == 15
    assert sizes[od.OddLabel(1, (BlockLabel(1, 1, "0"),))] == 45
    assert sizes[od.OddLabel(0, (BlockLabel(2, 2, "0"),))] == 15


def test_exhaustive_o3_census_over_f4():
    labels, failed = census(space_for("so-odd", 1, e=2))
    assert failed == 64 - 16
    assert labels == {od.OddLabel(1, ()): 15,
                      od.OddLabel(0, (BlockLabel(1, 1, "0"),)): 1}


def test_every_borel_vanishing_functional_splits():
    from char2orbits.classical import algebra_coords

    for n in (1, 2):
        sp = space_for("so-odd", n)
        rows = np.stack([algebra_coords(sp, b) for b in sp.borel_basis()])
        for coeffs in product(range(2), repeat=la.kernel_basis(F2, rows).shape[0]):
            vals = np.zeros(sp.dim_algebra, dtype=np.uint8)
            for c, k in zip(coeffs, la.kernel_basis(F2, rows)):
                if c:
                    vals ^= k
            X = sp.dual_from_values(vals)
            od.split_odd_functional(sp, X)


@pytest.mark.parametrize("e", [1, 2])
def test_chain_is_exactly_translated_by_the_group(e):
    F = Field(e)
    lab = od.OddLabel(1, (BlockLabel(1, 1, "d"),))
    space, X = od.odd_witness(lab, F)
    base = od.split_odd_functional(space, X)
    rng = np.random.default_rng(11)
    for _ in range(3):
        g = random_group_element(space, rng)
        moved = od.split_odd_functional(space, coadjoint(space, g, X))
        assert moved.m == base.m
        for v, w in zip(moved.chain, base.chain):
            assert np.array_equal(v, la.mat_vec(F, g, w))


def test_empty_chain_is_the_radical_line():
    space = space_for("so-odd", 2)
    rng = np.random.default_rng(5)
    radical = np.zeros(space.d, dtype=np.uint8)
    radical[-1] = 1
    X = space.dual_from_values(np.zeros(space.dim_algebra, dtype=np.uint8))
    for _ in range(3):
        g = random_group_element(space, rng)
        s = od.split_odd_functional(space, coadjoint(space, g, X))
        assert s.m == 0 and np.array_equal(s.chain[0], radical)


def test_dual_chain_satisfies_the_pairing_relations():
    space, X = od.odd_witness(od.OddLabel(2, (BlockLabel(1, 1, "0"),)), F2)
    s = od.split_odd_functional(space, X)
    G = alternating_gram(space, X)
    for i, v in enumerate(s.chain):
        if i < s.m:
            assert space.alpha(v) == 0
        for j, u in enumerate(s.dual):
            assert space.beta(v, u) == (1 if i == j else 0)
    for u in s.dual:
        assert space.alpha(u) == 0
    for k in range(1, s.m):
        lhs = la.mat_vec(F2, space.S, s.dual[k])
        rhs = la.mat_vec(F2, G, s.dual[k - 1])
        assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("e,max_n", [(1, 3), (2, 2)])
def test_witness_round_trip_for_every_small_label(e, max_n):
    F = Field(e)
    for n in range(1, max_n + 1):
        for lab in canonical_labels(n):
            space, X = od.odd_witness(lab, F)
            assert space.n == n
            got = od.rational_odd_label(od.split_odd_functional(space, X))
            assert got == lab


def test_bigger_decorated_round_trips():
    for lab in [od.OddLabel(1, (BlockLabel(2, 1, "0"), BlockLabel(1, 1, "d"))),
                od.OddLabel(1, (BlockLabel(3, 2, "0"),))]:
        space, X = od.odd_witness(lab, F2)
        assert od.rational_odd_label(od.split_odd_functional(space, X)) == lab


def test_decorations_above_the_chain_length_drop():
    # a decorated block whose level exceeds the chain length flips alone
    space, X = od.odd_witness(od.OddLabel(1, (BlockLabel(3, 2, "d"),)), F2)
    got = od.rational_odd_label(od.split_odd_functional(space, X))
    assert got == od.OddLabel(1, (BlockLabel(3, 2, "0"),))


def test_decorations_within_the_chain_length_stay():
    lab = od.OddLabel(1, (BlockLabel(3, 2, "d"), BlockLabel(1, 1, "d")))
    space, X = od.odd_witness(lab, F2)
    got = od.rational_odd_label(od.split_odd_functional(space, X))
    assert got == od.OddLabel(1, (BlockLabel(3, 2, "0"), BlockLabel(1, 1, "d")))


def test_high_co_level_blocks_clip_to_the_chain_length():
    space, X = od.odd_witness(od.OddLabel(0, (BlockLabel(3, 2, "d"),)), F2)
    s = od.split_odd_functional(space, X)
    lab = od.rational_odd_label(s)
    assert lab == od.OddLabel(0, (BlockLabel(3, 3, "0"),))
    assert od.odd_label_by_search(s) == lab


def test_decoration_moves_collapse_non_canonical_starts():
    # o(5): both decorations on the two singleton blocks absorb to plain
    for eps in [("d", "d"), ("0", "d"), ("d", "0")]:
        lab = od.OddLabel(0, (BlockLabel(1, 1, eps[0]), BlockLabel(1, 1, eps[1])))
        space, X = od.odd_witness(lab, F2)
        got = od.rational_odd_label(od.split_odd_functional(space, X))
        assert got == od.OddLabel(0, (BlockLabel(1, 1, "0"), BlockLabel(1, 1, "0")))


def test_moves_agree_with_the_isometry_search():
    for lab in canonical_labels(2):
        space, X = od.odd_witness(lab, F2)
        s = od.split_odd_functional(space, X)
        assert od.odd_label_by_search(s) == od.rational_odd_label(s) == lab


@pytest.mark.parametrize("e", [1, 2])
def test_label_is_invariant_under_translation(e):
    F = Field(e)
    rng = np.random.default_rng(17 + e)
    labs = [od.OddLabel(1, (BlockLabel(1, 1, "d"),)),
            od.OddLabel(0, (BlockLabel(2, 2, "0"),))]
    for lab in labs:
        space, X = od.odd_witness(lab, F)
        for _ in range(2):
            g = random_group_element(space, rng)
            moved = od.split_odd_functional(space, coadjoint(space, g, X))
            assert od.rational_odd_label(moved) == lab


def test_census_labels_are_admissible_pairs():
    labels, _ = census(space_for("so-odd", 2))
    for lab in labels:
        nu, mu = lab.pair()
        assert cb.oodd_pair_valid(nu, mu)
        assert sum(nu) + sum(mu) == 2


def test_witness_requires_decorations():
    with pytest.raises(ValueError):
        od.odd_witness(od.OddLabel(1, (BlockLabel(1, 1),)), F2)


def test_label_json_round_trip():
    labs = [od.OddLabel(2, ()),
            od.OddLabel(0, (BlockLabel(1, 1, "0"), BlockLabel(1, 1, "0"))),
            od.OddLabel(0, (BlockLabel(2, 2, "d"), BlockLabel(1, 1, "0")))]
    for lab in labs:
        obj = od.label_to_json(lab)
        assert od.label_from_json(obj) == lab
    bad = od.label_to_json(labs[2])
    bad["eps"] = ["d"]
    with pytest.raises(ValueError):
        od.label_from_json(bad)


def test_json_checks_the_leading_entry():
    obj = {"m": 2, "pair": {"nu": [1], "mu": [1]}, "eps": ["0"]}
    with pytest.raises(ValueError):
        od.label_from_json(obj)


def test_pair_to_label_round_trips_the_pair():
    for n in range(1, 7):
        for pair in cb.oodd_pairs(n):
            lab = od.pair_to_label(pair)
            assert lab.pair() == tuple(map(tuple, pair))
            assert all(b.eps == "0" for b in lab.blocks)
    with pytest.raises(ValueError):
        od.pair_to_label(((1, 2), ()))


def test_rational_labels_count_is_partition_number():
    for n in range(1, 7):
        labs = od.rational_labels(n)
        assert len(labs) == cb.p2(n)
        assert len(set(labs)) == len(labs)


def test_label_text_round_trip():
    labs = [od.OddLabel(3, ()),
            od.OddLabel(0, (BlockLabel(2, 2, "0"),)),
            od.OddLabel(2, (BlockLabel(2, 1, "d"), BlockLabel(1, 1, "0")))]
    for lab in labs:
        assert od.parse_label(od.format_label(lab)) == lab
    assert od.format_label(labs[0]) == "m=3; -"
    with pytest.raises(ValueError):
        od.parse_label("chain=3; -")
