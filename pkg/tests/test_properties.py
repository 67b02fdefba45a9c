"""Randomized cross-checks of the algebra and the decision routes."""

from __future__ import annotations

import numpy as np
from hypothesis import given, settings, strategies as stst

from pcl import codes, structure as st, theorems as th
from pcl.specs import build_family, parse_group_spec

SMALL_SPECS = [
    "C(2)", "C(4)", "C(8)", "C(12)", "EA(2,2)", "EA(2,3)", "C(4)xC(2)",
    "D(8)", "D(10)", "D(12)", "Q8", "M2(2,1)", "M2(2,2)", "M2(1,2,1)",
    "perm:(1 2 3),(1 2)", "perm:(1 2 3),(1 2)(3 4)", "SD(C(5);C(4);1->2)",
]

_groups = {}


def get_group(spec):
    if spec not in _groups:
        _groups[spec] = build_family(spec)
    return _groups[spec]


@settings(max_examples=60, deadline=None)
@given(stst.sampled_from(SMALL_SPECS), stst.data())
def test_generated_subgroup_properties(spec, data):
    g = get_group(spec)
    gens = data.draw(stst.lists(stst.integers(0, g.order - 1), max_size=3))
    H = st.subgroup_generated(g, gens)
    assert g.order % H.order == 0
    assert all(int(x) in H for x in gens)
    sub = g.mult[np.ix_(H.members, H.members)]
    assert set(np.unique(sub).tolist()) == set(H.members.tolist())


@settings(max_examples=60, deadline=None)
@given(stst.sampled_from(SMALL_SPECS), stst.data())
def test_decision_routes_agree_on_random_subgroups(spec, data):
    g = get_group(spec)
    gens = data.draw(stst.lists(stst.integers(0, g.order - 1), max_size=3))
    H = st.subgroup_generated(g, gens)
    c3 = codes.criterion3(g, H).is_code
    assert codes.criterion4(g, H).is_code == c3
    transversal = codes.find_inverse_closed_transversal(g, H)
    assert (transversal is not None) == c3
    if transversal is not None:
        s = codes.connection_set_from_transversal(g, H, transversal)
        assert codes.verify_perfect_code_in_cayley(g, s, H)


@settings(max_examples=40, deadline=None)
@given(stst.sampled_from(SMALL_SPECS), stst.data())
def test_zhang_reduction_preserves_the_verdict(spec, data):
    g = get_group(spec)
    gens = data.draw(stst.lists(stst.integers(0, g.order - 1), max_size=3))
    H = st.subgroup_generated(g, gens)
    Q, P = codes.zhang_reduce(g, H)
    assert Q.issubset(P)
    assert codes.criterion3_on_pair(P, Q).is_code == codes.criterion3(g, H).is_code


@settings(max_examples=30, deadline=None)
@given(stst.sampled_from(["C(8)", "C(4)xC(2)", "EA(2,3)", "C(16)", "C(4)xC(4)"]),
       stst.data())
def test_abelian_rule_matches_criterion(spec, data):
    g = get_group(spec)
    gens = data.draw(stst.lists(stst.integers(0, g.order - 1), max_size=3))
    H = st.subgroup_generated(g, gens)
    assert th.classify_abelian_2group(g, H).is_code == codes.criterion3(g, H).is_code


@settings(max_examples=50, deadline=None)
@given(stst.integers(1, 32))
def test_cyclic_spec_roundtrip(n):
    spec = parse_group_spec(f"C({n})")
    assert build_family(spec).order == n


@settings(max_examples=30, deadline=None)
@given(stst.sampled_from(SMALL_SPECS), stst.data())
def test_normalizer_contains_and_is_closed(spec, data):
    g = get_group(spec)
    gens = data.draw(stst.lists(stst.integers(0, g.order - 1), max_size=2))
    H = st.subgroup_generated(g, gens)
    N = st.normalizer(g, H)
    assert H.issubset(N)
    sub = g.mult[np.ix_(N.members, N.members)]
    assert set(np.unique(sub).tolist()) == set(N.members.tolist())
