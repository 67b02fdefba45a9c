from __future__ import annotations

import numpy as np
import pytest

from pcl import groups
from pcl.errors import GroupSpecError, SizeLimitError
from pcl.specs import build_family


FAMILY_SPECS = [
    "C(1)", "C(2)", "C(12)", "EA(2,3)", "EA(3,2)", "D(8)", "D(14)", "Q8",
    "M2(2,1)", "M2(3,2)", "M2(1,2,1)", "M2(2,2,1)", "C(4)xC(2)",
    "SD(C(5);C(4);1->2)", "SD(C(7);C(3);1->2)", "perm:(1 2 3),(1 2)",
]


@pytest.mark.parametrize("spec", FAMILY_SPECS)
def test_group_axioms(spec):
    g = build_family(spec)
    g.check_axioms()
    n = g.order
    idx = np.arange(n)
    assert np.array_equal(g.mult[0], idx)
    assert np.array_equal(g.mult[:, 0], idx)
    assert np.array_equal(g.mult[idx, g.inv], np.zeros(n, dtype=np.int32))
    # Latin square: every row and column is a permutation
    assert all(len(set(g.mult[i].tolist())) == n for i in range(n))
    assert all(len(set(g.mult[:, i].tolist())) == n for i in range(n))


def test_sampled_associativity_path_runs_above_exhaustive_limit():
    g = build_family("C(100)")
    g.check_axioms()


def test_catalog_entries_satisfy_group_axioms(catalog):
    for entry in catalog:
        entry.group.check_axioms()


def test_cyclic_orders():
    g = groups.cyclic(12)
    assert g.element_order(1) == 12
    assert g.element_order(0) == 1
    assert g.element_order(6) == 2


def test_identity_element_order_is_one():
    assert groups.element_order(build_family("Q8"), 0) == 1


def test_m2_generator_a_has_order_four():
    g = build_family("M2(2,1)")
    assert groups.element_order(g, g.witness["a"]) == 4


def test_q8_unique_involution_has_order_two():
    g = build_family("Q8")
    invs = np.flatnonzero(g.squares == 0)
    assert invs.tolist() != [0]
    (inv,) = [int(x) for x in invs if x != 0]
    assert g.element_order(inv) == 2


def test_metacyclic_presentation_relations():
    for n1, m1 in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 2)]:
        g = groups.metacyclic_m2(n1, m1)
        a, b = g.witness["a"], g.witness["b"]
        assert g.order == 2 ** (n1 + m1)
        assert g.element_order(a) == 2 ** n1
        assert g.element_order(b) == 2 ** m1
        conj = g.mult[g.mult[g.inv[b], a], b]
        assert conj == g.power(a, 1 + 2 ** (n1 - 1))


def test_nonmetacyclic_presentation_relations():
    for n2, m2 in [(1, 2), (1, 3), (2, 2), (2, 3)]:
        g = groups.nonmetacyclic_m2(n2, m2)
        a, b, c = g.witness["a"], g.witness["b"], g.witness["c"]
        assert g.order == 2 ** (n2 + m2 + 1)
        assert g.commutator(a, b) == c
        assert g.mul(c, c) == 0
        assert g.commutator(a, c) == 0 and g.commutator(b, c) == 0


def test_permutation_closure_known_orders():
    assert build_family("perm:(1 2)").order == 2
    assert build_family("perm:(1 2 3),(1 2)").order == 6
    assert build_family("perm:(1 2 3 4 5),(2 5)(3 4)").order == 10
    assert build_family("perm:(1 2 3),(1 2)(3 4)").order == 12
    assert build_family("perm:(1 2 3 4 5),(1 2 3)").order == 60
    assert build_family("perm:(1 2 3 4 5),(1 2 4 3)").order == 20


def test_direct_product_c4_c2_involution_count():
    g = build_family("C(4)xC(2)")
    assert int((g.squares == 0).sum()) - 1 == 3


def test_direct_product_with_trivial_keeps_table():
    g = build_family("Q8")
    prod = groups.direct_product(groups.cyclic(1), g)
    assert np.array_equal(prod.mult, g.mult)


def test_direct_product_order():
    g = groups.direct_product(groups.cyclic(6), groups.cyclic(4))
    assert g.order == 24
    g.check_axioms()


def test_semidirect_action_validation():
    c5, c4 = groups.cyclic(5), groups.cyclic(4)
    with pytest.raises(GroupSpecError):
        # x -> 2x has order 4 mod 5; it cannot be an action of C(2)
        groups.semidirect_product(c5, groups.cyclic(2), [(1, 2)])
    with pytest.raises(GroupSpecError):
        # x -> x+1 is not a homomorphism of C(5)
        groups.semidirect_product(c5, c4, [(1, 2), (2, 3)])
    f20 = groups.semidirect_product(c5, c4, [(1, 2)])
    assert f20.order == 20
    f20.check_axioms()


def test_semidirect_requires_cyclic_acting_factor():
    with pytest.raises(GroupSpecError):
        groups.semidirect_product(groups.cyclic(3), groups.elementary_abelian(2, 2),
                                  [(1, 1)])


def test_size_limit_on_construction(monkeypatch):
    monkeypatch.setenv("PCL_MAX_ORDER", "16")
    with pytest.raises(SizeLimitError):
        groups.cyclic(17)
    with pytest.raises(SizeLimitError):
        build_family("perm:(1 2 3 4 5),(1 2 3)")
    assert groups.cyclic(16).order == 16


def test_raw_table_roundtrip():
    g = build_family("D(8)")
    text = "\n".join(" ".join(str(int(x)) for x in row) for row in g.mult)
    back = groups.from_raw_table_text(text, label="d8")
    assert np.array_equal(back.mult, g.mult)


def test_raw_table_rejects_bad_input():
    with pytest.raises(GroupSpecError):
        groups.from_raw_table_text("0 1\n1 1")  # not a Latin square
    with pytest.raises(GroupSpecError):
        groups.from_raw_table_text("1 0\n0 1")  # identity not at 0
    with pytest.raises(GroupSpecError):
        groups.from_raw_table_text("0 1 2\n1 2")  # ragged
    # Latin square with identity that is not associative (order 5 loop)
    loop = ("0 1 2 3 4\n"
            "1 0 3 4 2\n"
            "2 4 0 1 3\n"
            "3 2 4 0 1\n"
            "4 3 1 2 0")
    with pytest.raises(GroupSpecError):
        groups.from_raw_table_text(loop)


def test_power_and_inverse():
    g = build_family("C(12)")
    assert g.power(1, 0) == 0
    assert g.power(1, 7) == 7
    assert g.power(1, -1) == 11
    assert g.power(5, 24) == 0
