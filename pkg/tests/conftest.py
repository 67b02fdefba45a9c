from __future__ import annotations

from itertools import combinations

import pytest

from pcl.catalog import default_catalog
from pcl.specs import build_family
from pcl.structure import Subgroup


@pytest.fixture(scope="session")
def catalog():
    """The default catalog, shared so lattices and verdict caches persist."""
    return default_catalog()


@pytest.fixture(scope="session")
def catalog_by_label(catalog):
    return {e.label: e for e in catalog}


def group(spec: str):
    return build_family(spec)


def brute_force_subgroups(G) -> list[frozenset[int]]:
    """All subgroups by filtering every subset containing the identity.

    Exponential; intended as an independent oracle for orders up to 8 or so.
    """
    n = G.order
    found = []
    rest = [x for x in range(1, n)]
    for k in range(0, n):
        for extra in combinations(rest, k):
            members = frozenset((0,) + extra)
            if _closed(G, members):
                found.append(members)
    return found


def _closed(G, members: frozenset[int]) -> bool:
    for a in members:
        if G.inv[a] not in members:
            return False
        for b in members:
            if int(G.mult[a, b]) not in members:
                return False
    return True


def brute_force_min_generators(H: Subgroup) -> int:
    """Smallest generating set by direct search (identity never helps)."""
    if H.order == 1:
        return 0
    G = H.parent
    candidates = [int(m) for m in H.members if m != 0]
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            if G.closure(combo).size == H.order:
                return k
    raise AssertionError("unreachable")


def abelian_rank(H: Subgroup) -> int:
    """d(H) for an abelian 2-group H: log2 of the number of x with x^2 = 1.

    Independent of the Frattini machinery, so it can cross-check it.
    """
    G = H.parent
    count = int((G.squares[H.members] == 0).sum())
    assert count & (count - 1) == 0
    return count.bit_length() - 1
