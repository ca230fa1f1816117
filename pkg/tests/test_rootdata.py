"""Tests for root data, reflection matrices and order polynomials."""

import math

import pytest

from pimbounds import rootdata as rd
from pimbounds.degrees import DegreePolynomial


def all_small_data():
    for family, ranks in (("A", range(1, 9)), ("B", range(2, 9)),
                          ("C", range(2, 9)), ("D", range(3, 9)),
                          ("E6", (6,)), ("E7", (7,)), ("E8", (8,)),
                          ("F4", (4,)), ("G2", (2,))):
        for rank in ranks:
            yield rd.build_root_datum(family, rank)


def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def test_cartan_matrices_have_valid_entries():
    for datum in all_small_data():
        n = datum.rank
        for i in range(n):
            assert datum.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert -3 <= datum.cartan[i][j] <= 0
                    # Zero entries must be symmetric (no edge at all).
                    assert (datum.cartan[i][j] == 0) == (datum.cartan[j][i] == 0)


def test_known_cartan_matrices():
    a2 = rd.build_root_datum("A", 2)
    assert a2.cartan == ((2, -1), (-1, 2))
    g2 = rd.build_root_datum("G2", 2)
    # Stored transposed: entry [j][i] pairs root i against coroot j.
    assert g2.cartan == ((2, -3), (-1, 2))
    b3 = rd.build_root_datum("B", 3)
    assert b3.cartan == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    c3 = rd.build_root_datum("C", 3)
    assert c3.cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    # B and C matrices are transposes of one another.
    assert b3.cartan == tuple(zip(*c3.cartan))
    f4 = rd.build_root_datum("F4", 4)
    assert f4.cartan == ((2, -1, 0, 0), (-1, 2, -1, 0),
                         (0, -2, 2, -1), (0, 0, -1, 2))


def test_long_short_node_flags():
    assert rd.build_root_datum("B", 2).long_nodes == (True, False)
    assert rd.build_root_datum("C", 2).long_nodes == (False, True)
    assert rd.build_root_datum("G2", 2).long_nodes == (False, True)
    assert rd.build_root_datum("F4", 4).long_nodes == (True, True, False, False)
    assert rd.build_root_datum("E8", 8).long_nodes == (True,) * 8


def test_coxeter_relations_all_families():
    for datum in all_small_data():
        n = datum.rank
        mats = rd.reflection_matrices(datum)
        for i in range(n):
            assert mat_mul(mats[i], mats[i]) == identity(n)
        for i in range(n):
            for j in range(i + 1, n):
                order = datum.coxeter_order(i + 1, j + 1)
                assert order in (2, 3, 4, 6)
                prod = mat_mul(mats[i], mats[j])
                acc = identity(n)
                for _ in range(order):
                    acc = mat_mul(acc, prod)
                assert acc == identity(n)
                # No smaller power of the product is the identity.
                acc = prod
                for _ in range(order - 1):
                    assert acc != identity(n)
                    acc = mat_mul(acc, prod)


def test_weyl_orders_against_formulas():
    assert rd.build_root_datum("A", 7).weyl_order == math.factorial(8)
    assert rd.build_root_datum("B", 5).weyl_order == 2 ** 5 * math.factorial(5)
    assert rd.build_root_datum("D", 6).weyl_order == 2 ** 5 * math.factorial(6)
    assert rd.build_root_datum("E6", 6).weyl_order == 51840
    assert rd.build_root_datum("E7", 7).weyl_order == 2903040
    # Independent oracle: product of the invariant degrees.
    assert rd.build_root_datum("E8", 8).weyl_order == 2 * 8 * 12 * 14 * 18 * 20 * 24 * 30
    assert rd.build_root_datum("F4", 4).weyl_order == 1152
    assert rd.build_root_datum("G2", 2).weyl_order == 12


def test_weyl_order_by_bfs_small_groups():
    for family, rank in (("A", 3), ("B", 3), ("C", 4), ("D", 4),
                         ("F4", 4), ("G2", 2)):
        datum = rd.build_root_datum(family, rank)
        assert rd.weyl_order_by_bfs(datum) == datum.weyl_order


def test_positive_root_counts():
    expected = {("A", 5): 15, ("B", 4): 16, ("C", 4): 16, ("D", 5): 20,
                ("E6", 6): 36, ("E7", 7): 63, ("E8", 8): 120,
                ("F4", 4): 24, ("G2", 2): 6}
    for (fam, rank), count in expected.items():
        assert rd.build_root_datum(fam, rank).positive_root_count == count


def test_min_nonlinear_degrees():
    cases = {("A", 2): 2, ("A", 3): 2, ("A", 5): 5, ("B", 2): 2, ("B", 4): 2,
             ("B", 5): 4, ("C", 3): 2, ("D", 4): 2, ("D", 6): 5,
             ("E6", 6): 6, ("E7", 7): 7, ("E8", 8): 8, ("F4", 4): 2,
             ("G2", 2): 2}
    for (fam, rank), value in cases.items():
        assert rd.build_root_datum(fam, rank).min_nonlinear_degree == value


def test_diagram_symmetries():
    a5 = rd.build_root_datum("A", 5, 2)
    assert a5.diagram_perm == (5, 4, 3, 2, 1)
    d4 = rd.build_root_datum("D", 4, 3)
    assert d4.diagram_perm == (3, 2, 4, 1)
    assert d4.perm_orbit(1) == (1, 3, 4)
    assert d4.perm_orbit(2) == (2,)
    e6 = rd.build_root_datum("E6", 6, 2)
    assert e6.diagram_perm == (6, 2, 5, 4, 3, 1)
    f4 = rd.build_root_datum("F4", 4, 2)
    assert f4.diagram_perm == (4, 3, 2, 1)


def test_invalid_twists_rejected():
    with pytest.raises(rd.UnsupportedGroupError):
        rd.build_root_datum("A", 1, 2)
    with pytest.raises(rd.UnsupportedGroupError):
        rd.build_root_datum("B", 3, 2)
    with pytest.raises(rd.UnsupportedGroupError):
        rd.build_root_datum("D", 5, 3)
    with pytest.raises(rd.UnsupportedGroupError):
        rd.build_root_datum("G2", 3)


def sl_order(n, q):
    """Independent oracle for |SL(n, q)|."""
    return q ** (n * (n - 1) // 2) * math.prod(q ** i - 1 for i in range(2, n + 1))


def test_split_order_polynomials_match_direct_formula():
    for n in (2, 3, 4):
        for q in (2, 3, 4, 5):
            spec = rd.special_linear(n, q)
            assert rd.group_order(spec) == sl_order(n, q)


def test_symplectic_and_exceptional_orders():
    # |Sp(4, q)| = q^4 (q^2-1)(q^4-1)
    for q in (2, 3):
        spec = rd.group("C", 2, q=q)
        assert rd.group_order(spec) == q ** 4 * (q ** 2 - 1) * (q ** 4 - 1)
    # |G2(q)| = q^6 (q^2-1)(q^6-1)
    spec = rd.group("G2", 2, q=3)
    assert rd.group_order(spec) == 3 ** 6 * (3 ** 2 - 1) * (3 ** 6 - 1)


def test_unitary4_order():
    spec = rd.special_unitary(4, 3)
    p = 3
    assert rd.group_order(spec) == (
        p ** 6 * (p ** 4 - 1) * (p ** 3 + 1) * (p ** 2 - 1))


def test_triality_order():
    spec = rd.group("D", 4, q=2, twist_order=3)
    q = 2
    assert rd.group_order(spec) == (
        q ** 12 * (q ** 6 - 1) * (q ** 2 - 1) * (q ** 8 + q ** 4 + 1))


def test_ree_order_p_part_in_t():
    spec = rd.group("G2", 2, suzuki_ree_e=1)
    p_part, pprime = rd.group_order_poly(spec)
    t = 3
    assert p_part.evaluate(t) == 3 ** 9  # q^6 with q^2 = 27
    # |G| = q^6 (q^2 - 1)(q^6 + 1)
    assert pprime.evaluate(t) == (27 - 1) * (3 ** 9 + 1)


def test_order_formula_not_embedded_for_other_twisted():
    with pytest.raises(rd.OrderFormulaError):
        rd.group_order_poly(rd.special_unitary(5, 2))


def test_reflection_matrix_action_matches_vector_form():
    datum = rd.build_root_datum("F4", 4)
    v = (1, 2, 3, 4)
    for i in range(1, 5):
        mat = rd.simple_reflection_matrix(datum, i)
        via_matrix = tuple(sum(mat[j][k] * v[k] for k in range(4))
                           for j in range(4))
        assert via_matrix == rd.apply_reflection(datum, i, v)


def test_prime_power_factoring():
    assert rd.factor_prime_power(8) == (2, 3)
    assert rd.factor_prime_power(125) == (5, 3)
    assert rd.factor_prime_power(13) == (13, 1)
    with pytest.raises(ValueError):
        rd.factor_prime_power(12)
    with pytest.raises(ValueError):
        rd.factor_prime_power(1)


def test_suzuki_ree_specs():
    suz = rd.group("B", 2, suzuki_ree_e=1)
    assert suz.field.q_squared == 8
    assert suz.field.q1 == 2
    ree = rd.group("G2", 2, suzuki_ree_e=0)
    assert ree.field.q_squared == 3
    with pytest.raises(rd.UnsupportedGroupError):
        rd.GroupSpec(rd.build_root_datum("C", 2, 1), rd.SuzukiReeField(2, 1))
