"""Tests for restricted weights, descent, and the candidate sieve."""

import pytest

from pimbounds import rootdata as rd, weights as wt
from pimbounds.weights import Weight


# ---------------------------------------------------------------------------
# Restricted weights and Steinberg data
# ---------------------------------------------------------------------------


def test_restricted_weight_counts():
    assert wt.restricted_weight_count(rd.special_linear(3, 5)) == 25
    assert wt.restricted_weight_count(rd.special_unitary(4, 3)) == 27
    # Suzuki-Ree: mixed ranges multiply to the torus order q^(2n).
    suz = rd.group("B", 2, suzuki_ree_e=1)  # q^2 = 8
    assert wt.coefficient_ranges(suz) == (2, 4)
    assert wt.restricted_weight_count(suz) == 8
    ree = rd.group("G2", 2, suzuki_ree_e=1)  # q^2 = 27
    assert wt.coefficient_ranges(ree) == (9, 3)
    assert wt.restricted_weight_count(ree) == 27
    big = rd.group("F4", 4, suzuki_ree_e=1)  # q^2 = 8
    assert wt.coefficient_ranges(big) == (2, 2, 4, 4)


def test_steinberg_weights():
    assert wt.steinberg_weight(rd.special_linear(4, 4)).coeffs == (3, 3, 3)
    # Suzuki group of type B2: (q1-1, 2q1-1).
    assert wt.steinberg_weight(rd.group("B", 2, suzuki_ree_e=1)).coeffs == (1, 3)
    # Ree group of type G2: (3q1-1, q1-1) with node 1 short.
    assert wt.steinberg_weight(rd.group("G2", 2, suzuki_ree_e=1)).coeffs == (8, 2)
    # Large Ree group of type F4: (q1-1, q1-1, 2q1-1, 2q1-1).
    assert wt.steinberg_weight(rd.group("F4", 4, suzuki_ree_e=1)).coeffs == (1, 1, 3, 3)


def test_steinberg_dimension():
    assert wt.steinberg_dimension(rd.special_linear(3, 4)) == 4 ** 3
    assert wt.steinberg_dimension(rd.group("E8", 8, q=3)) == 3 ** 120
    # Ree group of type G2 with q^2 = 3^(2e+1): dimension 3^(3(2e+1)).
    assert wt.steinberg_dimension(rd.group("G2", 2, suzuki_ree_e=1)) == 3 ** 9
    assert wt.steinberg_dimension(rd.group("B", 2, suzuki_ree_e=0)) == 4


def test_enumeration_order_and_count():
    spec = rd.special_linear(3, 3)
    listed = list(wt.enumerate_restricted_weights(spec))
    assert len(listed) == 9
    assert listed[0].coeffs == (0, 0)
    assert listed[-1].coeffs == (2, 2)
    assert listed == sorted(listed, key=lambda w: w.coeffs)


# ---------------------------------------------------------------------------
# Parabolic subsets and descent
# ---------------------------------------------------------------------------


def test_components_and_stability():
    d4 = rd.build_root_datum("D", 4, 3)
    sub = wt.ParabolicSubset(d4, frozenset({1, 3, 4}))
    assert sub.components() == ((1,), (3,), (4,))
    assert sub.is_twist_stable()
    assert not wt.ParabolicSubset(d4, frozenset({1})).is_twist_stable()


def test_twist_stable_subsets_d4_triality():
    d4 = rd.build_root_datum("D", 4, 3)
    subsets = sorted(tuple(sorted(s.nodes)) for s in wt.twist_stable_subsets(d4))
    assert subsets == [(1, 3, 4), (2,)]
    assert wt.twisted_bn_rank(d4) == 2


def test_descent_su4_merges_swapped_pair():
    spec = rd.special_unitary(4, 3)
    sub = wt.ParabolicSubset(spec.datum, frozenset({1, 3}))
    (desc,) = wt.descend_weight(spec, sub, Weight((2, 1, 0)))
    assert desc.spec.datum.family == "A"
    assert desc.spec.datum.rank == 1
    assert desc.spec.q == 9
    assert desc.weight.coeffs == (2 + 3 * 0,)


def test_descent_su5_adjacent_pair_is_twisted():
    spec = rd.special_unitary(5, 2)
    sub = wt.ParabolicSubset(spec.datum, frozenset({2, 3}))
    (desc,) = wt.descend_weight(spec, sub, Weight((0, 1, 0, 0)))
    assert desc.spec.datum.family == "A"
    assert desc.spec.datum.rank == 2
    assert desc.spec.datum.twist_order == 2
    assert desc.spec.q == 2
    assert desc.weight.coeffs == (1, 0)


def test_descent_triality_three_cycle():
    spec = rd.group("D", 4, q=5, twist_order=3)
    sub = wt.ParabolicSubset(spec.datum, frozenset({1, 3, 4}))
    (desc,) = wt.descend_weight(spec, sub, Weight((1, 0, 2, 3)))
    assert desc.spec.datum.rank == 1
    assert desc.spec.q == 125
    # Orbit 1 -> 3 -> 4: coefficient 1 + 5*2 + 25*3.
    assert desc.weight.coeffs == (1 + 5 * 2 + 25 * 3,)


def test_descent_split_multiple_components():
    spec = rd.special_linear(5, 3)
    sub = wt.ParabolicSubset(spec.datum, frozenset({1, 2, 4}))
    descs = wt.descend_weight(spec, sub, Weight((1, 2, 0, 1)))
    by_nodes = {d.original_nodes: d for d in descs}
    assert set(by_nodes) == {(1, 2), (4,)}
    assert by_nodes[(1, 2)].spec.datum.rank == 2
    assert by_nodes[(1, 2)].weight.coeffs == (1, 2)
    assert by_nodes[(4,)].weight.coeffs == (1,)


def test_descent_b3_tail_keeps_type():
    spec = rd.group("B", 3, q=3)
    sub = wt.ParabolicSubset(spec.datum, frozenset({2, 3}))
    (desc,) = wt.descend_weight(spec, sub, Weight((0, 1, 2)))
    # Nodes 2 (long) and 3 (short) of B3 form a rank-2 double-bond diagram,
    # canonicalised to family C with the short node first.
    assert desc.spec.datum.family == "C"
    assert desc.original_nodes == (3, 2)
    assert desc.weight.coeffs == (2, 1)


def test_descent_e6_subdiagram_classification():
    spec = rd.group("E6", 6, q=2)
    sub = wt.ParabolicSubset(spec.datum, frozenset({2, 3, 4, 5}))
    (desc,) = wt.descend_weight(spec, sub, Weight((0, 1, 0, 1, 0, 0)))
    assert desc.spec.datum.family == "D"
    assert desc.spec.datum.rank == 4
    # Bourbaki D4 order: long arm node, center, two leaves.
    assert desc.original_nodes[1] == 4  # the trivalent node sits second
    assert desc.weight[2] == 1


def test_descent_rejects_bad_subsets():
    spec = rd.special_unitary(4, 3)
    with pytest.raises(ValueError):
        wt.descend_weight(spec, wt.ParabolicSubset(spec.datum, frozenset({1})),
                          Weight((0, 0, 0)))
    with pytest.raises(ValueError):
        wt.descend_weight(spec, wt.ParabolicSubset(spec.datum, frozenset()),
                          Weight((0, 0, 0)))
    with pytest.raises(ValueError):
        wt.descend_weight(
            spec, wt.ParabolicSubset(spec.datum, frozenset({2})),
            Weight((5, 0, 0)))  # not restricted


def test_descent_transitivity_on_split_chain():
    # Descending SL(4, 3) to {1,2} and then to {1} agrees with direct {1}.
    spec = rd.special_linear(4, 3)
    w = Weight((1, 2, 0))
    sub12 = wt.ParabolicSubset(spec.datum, frozenset({1, 2}))
    (mid,) = wt.descend_weight(spec, sub12, w)
    inner = wt.ParabolicSubset(mid.spec.datum, frozenset({1}))
    (leaf,) = wt.descend_weight(mid.spec, inner, mid.weight)
    direct = wt.ParabolicSubset(spec.datum, frozenset({1}))
    (leaf2,) = wt.descend_weight(spec, direct, w)
    assert leaf.weight == leaf2.weight
    assert leaf.spec.q == leaf2.spec.q


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


def test_descent_flags():
    spec = rd.special_linear(4, 4)
    sub = wt.ParabolicSubset(spec.datum, frozenset({1, 2}))
    flags = wt.descent_flags(spec, sub, Weight((0, 0, 2)))
    assert flags.levi_restriction_is_linear
    assert not flags.levi_restriction_is_steinberg
    flags = wt.descent_flags(spec, sub, Weight((3, 3, 1)))
    assert flags.levi_restriction_is_steinberg


def test_socle_trivial_on_borel():
    spec = rd.special_linear(3, 4)
    assert wt.socle_trivial_on_borel(spec, Weight((0, 0)))
    assert wt.socle_trivial_on_borel(spec, Weight((3, 3)))
    assert wt.socle_trivial_on_borel(spec, Weight((0, 3)))
    assert not wt.socle_trivial_on_borel(spec, Weight((1, 3)))
    # Twisted: the pattern must be symmetry-stable.
    tw = rd.special_unitary(4, 4)
    assert wt.socle_trivial_on_borel(tw, Weight((0, 3, 0)))
    assert not wt.socle_trivial_on_borel(tw, Weight((0, 3, 3)))


# ---------------------------------------------------------------------------
# Candidate sieve
# ---------------------------------------------------------------------------


def test_candidates_rank2_prime_groups():
    for family in ("A", "C", "G2"):
        for p in (3, 5):
            spec = rd.group(family, 2, q=p)
            got = sorted(w.coeffs for w in wt.minimal_pim_candidates(spec))
            assert got == [(0, p - 1), (p - 1, 0)], (family, p)


def test_candidates_su4():
    for p in (3, 5):
        spec = rd.special_unitary(4, p)
        got = [w.coeffs for w in wt.minimal_pim_candidates(spec)]
        assert got == [(p - 1, 0, p - 1)]


def test_candidates_triality_d4():
    spec = rd.group("D", 4, q=3, twist_order=3)
    got = [w.coeffs for w in wt.minimal_pim_candidates(spec)]
    assert got == [(2, 0, 2, 2)]


def test_candidates_su5_2():
    spec = rd.special_unitary(5, 2)
    got = [w.coeffs for w in wt.minimal_pim_candidates(spec)]
    assert got == [(1, 0, 0, 1)]


def test_candidates_all_have_trivial_borel_socle():
    for spec in (rd.special_linear(3, 3), rd.group("C", 2, q=5),
                 rd.special_unitary(4, 3), rd.special_unitary(5, 2),
                 rd.group("D", 4, q=3, twist_order=3)):
        for w in wt.minimal_pim_candidates(spec):
            assert wt.socle_trivial_on_borel(spec, w)


def test_candidates_need_relative_rank_two():
    with pytest.raises(rd.UnsupportedGroupError):
        wt.minimal_pim_candidates(rd.special_linear(2, 5))
    with pytest.raises(rd.UnsupportedGroupError):
        wt.minimal_pim_candidates(rd.special_unitary(3, 3))


# ---------------------------------------------------------------------------
# Doubling and independence
# ---------------------------------------------------------------------------


def test_doubling_unitary_even_ambient():
    spec = rd.special_unitary(4, 3)  # n = 2, k = 0
    rule = wt.doubling_applicable(spec, Weight((1, 0, 1)))
    assert not rule.applicable  # paired coefficients agree
    rule = wt.doubling_applicable(spec, Weight((1, 0, 2)))
    assert rule.applicable
    assert sorted(rule.parabolic.nodes) == [1, 3]


def test_doubling_unitary_odd_ambient():
    spec = rd.special_unitary(5, 3)  # rank 4: n = 2, k = 1
    rule = wt.doubling_applicable(spec, Weight((1, 2, 0, 1)))
    assert not rule.applicable
    rule = wt.doubling_applicable(spec, Weight((1, 2, 0, 2)))
    assert rule.applicable
    assert sorted(rule.parabolic.nodes) == [1, 4]


def test_doubling_symplectic_palindrome_escape():
    spec = rd.group("C", 3, q=3)
    assert not wt.doubling_applicable(spec, Weight((1, 1, 0))).applicable
    assert wt.doubling_applicable(spec, Weight((1, 2, 0))).applicable
    assert sorted(wt.doubling_applicable(
        spec, Weight((1, 2, 0))).parabolic.nodes) == [1, 2]


def test_doubling_twisted_d():
    spec = rd.group("D", 5, q=2, twist_order=2)
    rule = wt.doubling_applicable(spec, Weight((1, 0, 1, 0, 0)))
    assert sorted(rule.parabolic.nodes) == [1, 2, 3]
    assert not rule.applicable  # (1, 0, 1) is palindromic
    assert wt.doubling_applicable(spec, Weight((1, 1, 0, 0, 0))).applicable


def test_doubling_out_of_scope():
    with pytest.raises(rd.UnsupportedGroupError):
        wt.doubling_applicable(rd.special_linear(4, 3), Weight((1, 0, 0)))
    with pytest.raises(rd.UnsupportedGroupError):
        wt.doubling_applicable(rd.group("B", 2, q=3), Weight((1, 0)))
    with pytest.raises(rd.UnsupportedGroupError):
        wt.doubling_applicable(rd.group("G2", 2, q=3), Weight((1, 0)))


def test_independent_violating_set():
    spec = rd.special_linear(6, 4)
    sub = wt.independent_violating_set(spec, Weight((1, 2, 1, 2, 1)))
    nodes = sorted(sub.nodes)
    assert len(nodes) == 3
    assert nodes == [1, 3, 5]
    sub = wt.independent_violating_set(spec, Weight((0, 2, 1, 3, 0)))
    assert sorted(sub.nodes) == [2]  # nodes 1, 5 are at 0 and 4 is at q-1
    sub = wt.independent_violating_set(spec, Weight((0, 0, 0, 0, 0)))
    assert sorted(sub.nodes) == []


def test_independent_set_needs_split_group():
    with pytest.raises(rd.UnsupportedGroupError):
        wt.independent_violating_set(rd.special_unitary(4, 3), Weight((1, 1, 1)))
