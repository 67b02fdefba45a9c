from __future__ import annotations

import numpy as np
import pytest

from pcl import structure as st
from pcl.errors import PreconditionError
from pcl.specs import build_family

from conftest import (abelian_rank, brute_force_min_generators,
                      brute_force_subgroups)


@pytest.fixture(scope="module")
def d8():
    return build_family("D(8)")


@pytest.fixture(scope="module")
def q8():
    return build_family("Q8")


def test_subgroup_generated_trivial_cases(d8):
    triv = st.subgroup_generated(d8, [])
    assert triv.order == 1 and triv.members.tolist() == [0]
    a = d8.witness["a"]
    sq = st.subgroup_generated(d8, [d8.power(a, 2)])
    assert sq.order == 2
    whole = st.subgroup_generated(d8, [a, d8.witness["b"]])
    assert whole.is_full


def test_subgroup_invariants(d8):
    for S in st.all_subgroups(d8):
        assert 0 in S
        assert d8.order % S.order == 0  # Lagrange
        sub = d8.mult[np.ix_(S.members, S.members)]
        assert set(np.unique(sub).tolist()) <= set(S.members.tolist())
        assert set(d8.inv[S.members].tolist()) == set(S.members.tolist())
        regen = st.subgroup_generated(d8, S.generators)
        assert regen == S


@pytest.mark.parametrize("spec,count", [("Q8", 6), ("D(8)", 10), ("EA(2,2)", 5)])
def test_subgroup_counts_against_subset_bruteforce(spec, count):
    g = build_family(spec)
    subs = st.all_subgroups(g)
    assert len(subs) == count
    brute = brute_force_subgroups(g)
    assert {frozenset(s.members.tolist()) for s in subs} == set(brute)


def test_all_subgroups_sorted_and_deduplicated(q8):
    subs = st.all_subgroups(q8)
    keys = [s.sort_key() for s in subs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_frattini_examples(q8):
    c4 = build_family("C(4)")
    phi = st.frattini(st.full_subgroup(c4))
    assert phi.members.tolist() == [0, 2]
    ea = build_family("EA(2,3)")
    assert st.frattini(st.full_subgroup(ea)).is_trivial
    phi_q8 = st.frattini(st.full_subgroup(q8))
    assert phi_q8.order == 2
    maxes = st.maximal_subgroups(st.full_subgroup(q8))
    assert [m.order for m in maxes] == [4, 4, 4]
    expected = maxes[0].mask & maxes[1].mask & maxes[2].mask
    assert np.array_equal(phi_q8.mask, expected)
    triv = st.trivial_subgroup(q8)
    assert st.frattini(triv) == triv


def test_derived_and_center(d8, q8):
    for g in [build_family("C(12)"), build_family("EA(2,3)")]:
        assert st.derived_subgroup(g).is_trivial
    m = build_family("M2(2,2,1)")
    der = st.derived_subgroup(m)
    assert der.order == 2 and m.witness["c"] in der
    assert st.center(d8).order == 2
    assert st.center(q8).order == 2
    s3 = build_family("perm:(1 2 3),(1 2)")
    assert st.center(s3).is_trivial


def test_normalizer_by_conjugation_scan(d8):
    b = st.subgroup_generated(d8, [d8.witness["b"]])
    nz = st.normalizer(d8, b)
    # independent scan: x normalizes iff conjugating every member stays inside
    expected = [x for x in range(d8.order)
                if all(d8.conjugate(h, x) in b for h in b.members.tolist())]
    assert nz.members.tolist() == expected
    assert nz.order == 4
    a2 = d8.power(d8.witness["a"], 2)
    assert a2 in nz and d8.witness["b"] in nz
    # H <= N_G(H), and the normalizer is a subgroup
    for S in st.all_subgroups(d8):
        assert S.issubset(st.normalizer(d8, S))


def test_centralizer(d8):
    a = d8.witness["a"]
    cz = st.centralizer(d8, [a])
    assert cz.order == 4
    assert st.centralizer(d8, []).is_full


def test_sylow_examples():
    s3 = build_family("perm:(1 2 3),(1 2)")
    assert st.sylow(s3, 2).order == 2
    assert st.sylow(s3, 5).is_trivial
    a4 = build_family("perm:(1 2 3),(1 2)(3 4)")
    v4 = st.sylow(a4, 2)
    assert v4.order == 4
    assert st.normalizer(a4, v4).is_full  # unique, hence normal
    with pytest.raises(PreconditionError):
        st.sylow(s3, 4)


def test_sylow_containing(d8):
    a4 = build_family("perm:(1 2 3),(1 2)(3 4)")
    two = next(S for S in st.all_subgroups(a4) if S.order == 2)
    p = st.sylow_containing(a4, 2, two)
    assert p.order == 4 and two.issubset(p)
    triv = st.trivial_subgroup(a4)
    assert st.sylow_containing(a4, 2, triv) == st.sylow(a4, 2)
    b = st.subgroup_generated(d8, [d8.witness["b"]])
    assert st.sylow_containing(d8, 2, b).is_full
    three = next(S for S in st.all_subgroups(a4) if S.order == 3)
    with pytest.raises(PreconditionError):
        st.sylow_containing(a4, 2, three)


def test_involutions_and_omega1():
    q8 = build_family("Q8")
    assert st.involutions(q8).size == 2  # identity and the unique involution
    assert 0 in st.involutions(q8).tolist()
    for n1, m1 in [(2, 2), (3, 1), (3, 2), (2, 3)]:
        g = build_family(f"M2({n1},{m1})")
        om = st.omega1(g)
        assert om.order == 4
        assert (g.element_orders()[om.members] <= 2).all()
    for n2, m2 in [(1, 2), (2, 2), (2, 3)]:
        g = build_family(f"M2({n2},{m2},1)")
        om = st.omega1(g)
        assert om.order == 8
        assert (g.element_orders()[om.members] <= 2).all()


def test_squares_and_is_square():
    g = build_family("M2(2,2,1)")
    assert not st.is_square(g, g.witness["c"])
    assert st.is_square(g, 0)
    c4 = build_family("C(4)")
    assert st.squares_set(c4).tolist() == [0, 2]


def test_min_generators_against_bruteforce():
    cases = ["C(8)", "Q8", "EA(2,3)", "C(4)xC(2)", "D(8)", "M2(1,2,1)",
             "perm:(1 2 3),(1 2)", "SD(C(5);C(4);1->2)"]
    for spec in cases:
        g = build_family(spec)
        H = st.full_subgroup(g)
        assert st.min_generators(H) == brute_force_min_generators(H), spec
    assert st.min_generators(st.trivial_subgroup(build_family("C(4)"))) == 0


def test_min_generators_examples():
    assert st.min_generators(st.full_subgroup(build_family("C(8)"))) == 1
    assert st.min_generators(st.full_subgroup(build_family("Q8"))) == 2
    assert st.min_generators(st.full_subgroup(build_family("EA(2,3)"))) == 3


def test_is_minimal_nonabelian():
    assert st.is_minimal_nonabelian(build_family("Q8"))
    assert st.is_minimal_nonabelian(build_family("D(8)"))
    assert not st.is_minimal_nonabelian(build_family("C(4)xC(2)"))
    assert not st.is_minimal_nonabelian(build_family("D(16)"))
    # the minimal nonabelian 2-group test agrees with d(G)=2 and |G'|=2
    for spec in ["Q8", "D(8)", "M2(2,2)", "M2(1,2,1)", "M2(2,2,1)", "D(16)",
                 "C(4)xC(4)", "EA(2,3)"]:
        g = build_family(spec)
        expected = (st.min_generators(st.full_subgroup(g)) == 2
                    and st.derived_subgroup(g).order == 2)
        assert st.is_minimal_nonabelian(g) == expected, spec


def test_recognize_a1_family_recovers_parameters():
    for n1 in range(2, 5):
        for m1 in range(1, 4):
            g = build_family(f"M2({n1},{m1})")
            rec = st.recognize_a1_family(g)
            assert rec.tag == "metacyclic" and rec.params == (n1, m1)
            a, b = rec.witness
            assert g.element_order(a) == 2 ** n1
            assert g.element_order(b) == 2 ** m1
            conj = g.mult[g.mult[g.inv[b], a], b]
            assert conj == g.power(a, 1 + 2 ** (n1 - 1))
            assert g.closure([a, b]).size == g.order
    for n2, m2 in [(1, 2), (1, 3), (2, 2), (2, 3)]:
        g = build_family(f"M2({n2},{m2},1)")
        rec = st.recognize_a1_family(g)
        assert rec.tag == "nonmetacyclic" and rec.params == (n2, m2)
        a, b, c = rec.witness
        assert g.commutator(a, b) == c and g.mul(c, c) == 0
        assert g.closure([a, b]).size == g.order


def test_recognize_a1_family_order_eight_and_outsiders():
    assert st.recognize_a1_family(build_family("Q8")).tag == "q8"
    rec = st.recognize_a1_family(build_family("D(8)"))
    assert rec.tag == "metacyclic" and rec.params == (2, 1)
    assert st.recognize_a1_family(build_family("EA(2,4)")).tag == "abelian"
    assert st.recognize_a1_family(build_family("D(16)")).tag == "not_a1_or_a0"
    with pytest.raises(PreconditionError):
        st.recognize_a1_family(build_family("perm:(1 2 3),(1 2)"))


def test_burnside_basis_against_independent_rank():
    # |H / frattini(H)| = 2^d(H) with d computed without the lattice
    for spec in ["C(16)", "C(8)xC(2)", "C(4)xC(4)", "EA(2,4)", "C(4)xC(2)xC(2)"]:
        g = build_family(spec)
        for H in st.all_subgroups(g):
            quotient = H.order // st.frattini(H).order
            assert quotient == 2 ** abelian_rank(H), (spec, H.members.tolist())


def test_frattini_equals_squares_for_abelian_2groups():
    for spec in ["C(8)", "C(4)xC(2)", "EA(2,3)", "C(8)xC(4)"]:
        g = build_family(spec)
        phi = st.frattini(st.full_subgroup(g))
        assert phi.members.tolist() == st.squares_set(g).tolist(), spec


def test_frattini_is_generated_by_squares_in_2groups():
    for spec in ["Q8", "D(8)", "D(16)", "M2(2,2)", "M2(1,2,1)", "M2(2,2,1)",
                 "C(4)xC(4)", "EA(2,4)"]:
        g = build_family(spec)
        phi = st.frattini(st.full_subgroup(g))
        squares = st.subgroup_generated(g, st.squares_set(g).tolist())
        assert phi == squares, spec


def test_frattini_matches_derived_times_power_subgroup():
    # p-group identity: Phi(G) equals the set product of G' and <x^p>
    for spec in ["Q8", "D(8)", "D(16)", "M2(2,2)", "M2(1,2,1)", "C(8)xC(2)",
                 "EA(3,2)", "C(9)"]:
        g = build_family(spec)
        p = 2 if g.order % 2 == 0 else 3
        derived = st.derived_subgroup(g)
        powers = st.subgroup_generated(g, [g.power(x, p) for x in range(g.order)])
        product = np.unique(g.mult[np.ix_(derived.members, powers.members)])
        phi = st.frattini(st.full_subgroup(g))
        assert product.tolist() == phi.members.tolist(), spec


def test_subgroup_as_group_restriction():
    a4 = build_family("perm:(1 2 3),(1 2)(3 4)")
    v4 = st.sylow(a4, 2)
    two = next(S for S in st.all_subgroups(a4) if S.order == 2)
    group, (mapped,) = st.subgroup_as_group(v4, two)
    group.check_axioms()
    assert group.order == 4 and mapped.order == 2
    with pytest.raises(PreconditionError):
        st.subgroup_as_group(two, v4)


def test_abelian_quotient_exponents():
    g = build_family("M2(2,3,1)")
    der = st.derived_subgroup(g)
    assert st.abelian_quotient_exponents(g, der, 2) == (3, 2)
    c12 = build_family("C(12)")
    assert st.abelian_quotient_exponents(
        c12, st.trivial_subgroup(c12), 2) == (2,)
