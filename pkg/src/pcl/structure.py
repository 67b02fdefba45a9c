"""Subgroup computations: lattices, characteristic subgroups, recognizers.

Subgroups are dense membership masks over a fixed parent group.  The full
subgroup lattice is enumerated by a layered join closure (seed with every
cyclic subgroup, repeatedly join with cyclic subgroups until no new masks
appear) and cached on the parent, so repeated structural queries stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import PreconditionError, SizeLimitError
from .groups import Group, max_order, prime_power, _is_prime


class Subgroup:
    """A subgroup of a fixed parent group, as a membership mask.

    Members and generators are element indices of the parent; ``closure`` of
    the generators equals the member set.  Instances are immutable, hashable
    and compare equal exactly when they have the same parent object and the
    same member set.
    """

    __slots__ = ("parent", "mask", "members", "order", "generators", "mask_int", "_key")

    def __init__(self, parent: Group, mask: np.ndarray,
                 generators: tuple[int, ...] | None = None):
        mask = np.array(mask, dtype=bool, copy=True)
        if mask.shape != (parent.order,):
            raise ValueError("mask length must equal the parent order")
        if not mask[0]:
            raise ValueError("a subgroup contains the identity")
        mask.setflags(write=False)
        members = np.flatnonzero(mask).astype(np.int32)
        members.setflags(write=False)
        self.parent = parent
        self.mask = mask
        self.members = members
        self.order = int(members.size)
        if generators is None:
            generators = _reduced_generators(parent, members)
        self.generators = tuple(int(g) for g in generators)
        self.mask_int = int.from_bytes(np.packbits(mask).tobytes(), "big")
        self._key = (id(parent), self.mask_int)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __contains__(self, element: int) -> bool:
        return bool(self.mask[element])

    def __repr__(self) -> str:
        return f"<Subgroup of {self.parent.label}, order {self.order}>"

    def __le__(self, other: "Subgroup") -> bool:
        return self.issubset(other)

    def issubset(self, other: "Subgroup") -> bool:
        return (self.mask_int & ~other.mask_int) == 0

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.mask & other.mask)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_full(self) -> bool:
        return self.order == self.parent.order

    @property
    def is_abelian(self) -> bool:
        sub = self.parent.mult[np.ix_(self.members, self.members)]
        return bool(np.array_equal(sub, sub.T))

    @property
    def is_cyclic(self) -> bool:
        return bool((self.parent.element_orders()[self.members] == self.order).any())

    def sort_key(self) -> tuple:
        return (self.order, tuple(self.members.tolist()))


def _reduced_generators(G: Group, members: np.ndarray) -> tuple[int, ...]:
    gens: list[int] = []
    closed = np.zeros(G.order, dtype=bool)
    closed[0] = True
    for m in members.tolist():
        if not closed[m]:
            gens.append(int(m))
            closed[:] = False
            closed[G.closure(gens)] = True
    return tuple(gens)


def trivial_subgroup(G: Group) -> Subgroup:
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    return Subgroup(G, mask, generators=())


def full_subgroup(G: Group) -> Subgroup:
    cached = G._cache.get("full_subgroup")
    if cached is None:
        cached = Subgroup(G, np.ones(G.order, dtype=bool))
        G._cache["full_subgroup"] = cached
    return cached


def subgroup_from_members(G: Group, members, generators=None) -> Subgroup:
    mask = np.zeros(G.order, dtype=bool)
    mask[np.asarray(list(members), dtype=np.int64)] = True
    mask[0] = True
    return Subgroup(G, mask, generators=generators)


def subgroup_generated(G: Group, gens) -> Subgroup:
    """Smallest subgroup containing ``gens`` (breadth-first product closure)."""
    gens = sorted({int(g) for g in gens} - {0})
    members = G.closure(gens)
    mask = np.zeros(G.order, dtype=bool)
    mask[members] = True
    return Subgroup(G, mask, generators=tuple(gens))


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup of G exactly once, sorted by (order, member tuple).

    Layered join closure: every subgroup is a join of cyclic subgroups, so
    seeding with the cyclic ones and repeatedly joining against them reaches
    the whole lattice.
    """
    cached = G._cache.get("lattice")
    if cached is not None:
        return cached
    if G.order > max_order():
        raise SizeLimitError(
            f"subgroup enumeration of order {G.order} exceeds PCL_MAX_ORDER={max_order()}")
    seeds: list[tuple[np.ndarray, int]] = []
    seen_seed: set[bytes] = set()
    for g in range(1, G.order):
        members = G.closure([g])
        key = members.tobytes()
        if key not in seen_seed:
            seen_seed.add(key)
            seeds.append((members, g))
    trivial = np.zeros(1, dtype=np.int32)
    records: dict[bytes, tuple[np.ndarray, tuple[int, ...]]] = {
        trivial.tobytes(): (trivial, ())}
    for members, g in seeds:
        records.setdefault(members.tobytes(), (members, (g,)))
    queue = list(records.values())
    while queue:
        current, gens = queue.pop()
        mask = np.zeros(G.order, dtype=bool)
        mask[current] = True
        for members, g in seeds:
            if mask[members].all():
                continue
            joined = G.closure(np.concatenate((current, members)))
            key = joined.tobytes()
            if key not in records:
                new_gens = gens if g in gens else gens + (g,)
                records[key] = (joined, new_gens)
                queue.append((joined, new_gens))
    subgroups = []
    for members, gens in records.values():
        mask = np.zeros(G.order, dtype=bool)
        mask[members] = True
        subgroups.append(Subgroup(G, mask, generators=gens))
    subgroups.sort(key=Subgroup.sort_key)
    G._cache["lattice"] = subgroups
    return subgroups


def subgroups_of(H: Subgroup) -> list[Subgroup]:
    """All subgroups of the parent contained in H, canonically sorted."""
    return [S for S in all_subgroups(H.parent)
            if (S.mask_int & ~H.mask_int) == 0]


def maximal_subgroups(H: Subgroup) -> list[Subgroup]:
    """Maximal proper subgroups of H, from the parent lattice."""
    G = H.parent
    cache = G._cache.setdefault("maximal", {})
    hit = cache.get(H.mask_int)
    if hit is not None:
        return hit
    proper = [S for S in subgroups_of(H) if S.order < H.order]
    proper.sort(key=lambda s: -s.order)
    maximal = [S for S in proper
               if not any(T.order > S.order and (S.mask_int & ~T.mask_int) == 0
                          for T in proper)]
    cache[H.mask_int] = maximal
    return maximal


def frattini(H: Subgroup) -> Subgroup:
    """Intersection of the maximal subgroups of H; trivial H gives H itself."""
    G = H.parent
    cache = G._cache.setdefault("frattini", {})
    hit = cache.get(H.mask_int)
    if hit is not None:
        return hit
    if H.order == 1:
        cache[H.mask_int] = H
        return H
    mask = H.mask.copy()
    for M in maximal_subgroups(H):
        mask &= M.mask
    phi = Subgroup(G, mask)
    cache[H.mask_int] = phi
    return phi


def derived_subgroup(G: Group) -> Subgroup:
    """Subgroup generated by all commutators."""
    cached = G._cache.get("derived")
    if cached is None:
        left = G.mult[G.inv[:, None], G.inv[None, :]]
        comms = np.unique(G.mult[left, G.mult])
        cached = subgroup_generated(G, comms.tolist())
        G._cache["derived"] = cached
    return cached


def center(G: Group) -> Subgroup:
    cached = G._cache.get("center")
    if cached is None:
        mask = (G.mult == G.mult.T).all(axis=1)
        cached = Subgroup(G, mask)
        G._cache["center"] = cached
    return cached


def centralizer(G: Group, elements) -> Subgroup:
    els = np.asarray(sorted({int(e) for e in elements}), dtype=np.int64)
    if els.size == 0:
        return full_subgroup(G)
    mask = (G.mult[:, els] == G.mult[els, :].T).all(axis=1)
    return Subgroup(G, mask)


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    ct = G.conj_table
    mask = H.mask[ct[:, H.members]].all(axis=1)
    return Subgroup(G, mask)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % (q * p) == 0:
        q *= p
    return q


def sylow(G: Group, p: int) -> Subgroup:
    """The canonically first Sylow p-subgroup (lattice order is deterministic)."""
    if not _is_prime(p):
        raise PreconditionError(f"sylow requires a prime, got {p}")
    return _sylow_within(G, full_subgroup(G), p, None)


def sylow_containing(G: Group, p: int, Q: Subgroup) -> Subgroup:
    """The canonically first Sylow p-subgroup of G containing the p-group Q."""
    if not _is_prime(p):
        raise PreconditionError(f"sylow_containing requires a prime, got {p}")
    if Q.order != 1:
        pk = prime_power(Q.order)
        if pk is None or pk[0] != p:
            raise PreconditionError(
                f"sylow_containing requires a {p}-subgroup, got order {Q.order}")
    return _sylow_within(G, full_subgroup(G), p, Q)


def _sylow_within(G: Group, within: Subgroup, p: int,
                  containing: Subgroup | None) -> Subgroup:
    q = _p_part(within.order, p)
    if q == 1:
        return trivial_subgroup(G)
    for S in all_subgroups(G):
        if S.order != q:
            continue
        if (S.mask_int & ~within.mask_int) != 0:
            continue
        if containing is not None and (containing.mask_int & ~S.mask_int) != 0:
            continue
        return S
    raise RuntimeError("no Sylow subgroup found; lattice enumeration is broken")


def involutions(G: Group) -> np.ndarray:
    """Indices of all solutions of x*x = identity, the identity included."""
    return np.flatnonzero(G.squares == 0).astype(np.int32)


def omega1(G: Group) -> Subgroup:
    """Subgroup generated by all solutions of x*x = identity."""
    return subgroup_generated(G, involutions(G).tolist())


def squares_set(G: Group) -> np.ndarray:
    """Sorted indices of elements of the form y*y."""
    return np.unique(G.squares)


def is_square(G: Group, g: int) -> bool:
    return bool(np.isin(g, squares_set(G)))


def min_generators(H: Subgroup) -> int:
    """Minimal number of generators d(H).

    For p-groups this is log_p of the index of the Frattini subgroup
    (Burnside basis); otherwise a direct search over generating sets.
    """
    if H.order == 1:
        return 0
    pk = prime_power(H.order)
    if pk is not None:
        p, _ = pk
        quotient = H.order // frattini(H).order
        d = 0
        while quotient > 1:
            quotient //= p
            d += 1
        return d
    G = H.parent
    candidates = [int(m) for m in H.members if m != 0]
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            if G.closure(combo).size == H.order:
                return k
    raise RuntimeError("generator search failed")


def is_minimal_nonabelian(G: Group) -> bool:
    """Nonabelian with every maximal (hence every proper) subgroup abelian."""
    if G.is_abelian:
        return False
    return all(M.is_abelian for M in maximal_subgroups(full_subgroup(G)))


def abelian_quotient_exponents(G: Group, N: Subgroup, p: int) -> tuple[int, ...]:
    """Cyclic factor exponents (descending) of the abelian p-group G/N.

    Counts solutions of x^(p^k) in N instead of building the quotient table;
    the counts determine the factor type.
    """
    comms = np.unique(G.mult[G.mult[G.inv[:, None], G.inv[None, :]], G.mult])
    if not N.mask[comms].all():
        raise PreconditionError("quotient is not abelian: commutators leave N")
    n = G.order
    logs = [0]
    v = np.arange(n, dtype=np.int32)
    while True:
        u = v.copy()
        for _ in range(p - 1):
            u = G.mult[u, v]
        v = u
        count = int(N.mask[v].sum()) // N.order
        k = 0
        while count > 1:
            count //= p
            k += 1
        logs.append(k)
        if logs[-1] == logs[-2]:
            break
    at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
    exps: list[int] = []
    for k, m in enumerate(at_least, start=1):
        nxt = at_least[k] if k < len(at_least) else 0
        exps.extend([k] * (m - nxt))
    return tuple(sorted(exps, reverse=True))


@dataclass(frozen=True)
class FamilyRecognition:
    """Outcome of testing a 2-group against the minimal nonabelian families.

    ``tag`` is one of 'abelian', 'q8', 'metacyclic', 'nonmetacyclic' or
    'not_a1_or_a0'.  For the family tags, ``params`` holds the recovered
    exponent parameters and ``witness`` generator indices (a, b) or (a, b, c)
    that verify the defining relations and generate the group.
    """

    tag: str
    params: tuple[int, int] | None = None
    witness: tuple[int, ...] = ()


def _is_2group(G: Group) -> bool:
    return (G.order & (G.order - 1)) == 0


def recognize_a1_family(G: Group) -> FamilyRecognition:
    """Identify an abelian or minimal nonabelian 2-group, with witnesses.

    Parameter recovery starts from the order and the abelianization type;
    where two metacyclic parameter pairs share both invariants, the witness
    search decides.  The recovered witness always satisfies the presentation
    relations exactly and generates the group.
    """
    if not _is_2group(G):
        raise PreconditionError(f"recognize_a1_family requires a 2-group, got order {G.order}")
    cached = G._cache.get("a1_recognition")
    if cached is not None:
        return cached
    result = _recognize_a1(G)
    G._cache["a1_recognition"] = result
    return result


def _recognize_a1(G: Group) -> FamilyRecognition:
    if G.is_abelian:
        return FamilyRecognition("abelian")
    if not is_minimal_nonabelian(G):
        return FamilyRecognition("not_a1_or_a0")
    if G.order == 8:
        if involutions(G).size == 2:  # unique involution
            witness = _find_quaternion_witness(G)
            return FamilyRecognition("q8", None, witness)
        witness = _find_metacyclic_witness(G, 2, 1)
        return FamilyRecognition("metacyclic", (2, 1), witness)
    om = omega1(G).order
    log_order = G.order.bit_length() - 1
    derived = derived_subgroup(G)
    ab_type = abelian_quotient_exponents(G, derived, 2)
    if om == 4:
        # abelianization of the metacyclic family is (2^(n1-1), 2^m1)
        alpha, beta = sorted(ab_type)
        for n1, m1 in sorted({(alpha + 1, beta), (beta + 1, alpha)}):
            if n1 >= 2 and m1 >= 1 and n1 + m1 == log_order:
                witness = _find_metacyclic_witness(G, n1, m1)
                if witness is not None:
                    return FamilyRecognition("metacyclic", (n1, m1), witness)
    elif om == 8:
        n2, m2 = sorted(ab_type)
        if n2 >= 1 and n2 + m2 + 1 == log_order:
            witness = _find_nonmetacyclic_witness(G, n2, m2)
            if witness is not None:
                return FamilyRecognition("nonmetacyclic", (n2, m2), witness)
    raise RuntimeError(f"minimal nonabelian 2-group {G.label} matched no family")


def _find_quaternion_witness(G: Group) -> tuple[int, int] | None:
    orders = G.element_orders()
    four = np.flatnonzero(orders == 4)
    for a in four.tolist():
        a2 = G.mul(a, a)
        a3 = G.power(a, 3)
        for b in four.tolist():
            if G.mul(b, b) != a2:
                continue
            if G.mult[G.mult[G.inv[b], a], b] != a3:
                continue
            if G.closure([a, b]).size == G.order:
                return (a, b)
    return None


def _find_metacyclic_witness(G: Group, n1: int, m1: int) -> tuple[int, int] | None:
    orders = G.element_orders()
    r = (1 + 2 ** (n1 - 1)) % 2 ** n1
    for a in np.flatnonzero(orders == 2 ** n1).tolist():
        target = G.power(a, r)
        for b in np.flatnonzero(orders == 2 ** m1).tolist():
            if G.mult[G.mult[G.inv[b], a], b] != target:
                continue
            if G.closure([a, b]).size == G.order:
                return (a, b)
    return None


def _find_nonmetacyclic_witness(G: Group, n2: int, m2: int) -> tuple[int, int, int] | None:
    orders = G.element_orders()
    for a in np.flatnonzero(orders == 2 ** n2).tolist():
        for b in np.flatnonzero(orders == 2 ** m2).tolist():
            c = G.commutator(a, b)
            if c == 0 or G.mul(c, c) != 0:
                continue
            if G.commutator(a, c) != 0 or G.commutator(b, c) != 0:
                continue
            if G.closure([a, b]).size == G.order:
                return (a, b, c)
    return None


def recognize_dihedral(G: Group) -> tuple[int, int] | None:
    """Find (a, b) with o(a) = |G|/2, b an involution inverting a, if any."""
    if G.order % 2 != 0:
        return None
    cached = G._cache.get("dihedral_witness", "missing")
    if cached != "missing":
        return cached
    n = G.order // 2
    orders = G.element_orders()
    witness = None
    for a in np.flatnonzero(orders == n).tolist() if n > 1 else [0]:
        rotations = G.closure([a])
        if rotations.size != n:
            continue
        in_rot = np.zeros(G.order, dtype=bool)
        in_rot[rotations] = True
        a_inv = G.inv[a]
        for b in range(G.order):
            if in_rot[b] or G.mul(b, b) != 0:
                continue
            if G.mult[G.mult[G.inv[b], a], b] == a_inv:
                witness = (a, int(b))
                break
        if witness:
            break
    G._cache["dihedral_witness"] = witness
    return witness


def subgroup_as_group(P: Subgroup, *inner: Subgroup) -> tuple[Group, list[Subgroup]]:
    """Re-index a subgroup as a standalone group; map inner subgroups along."""
    G = P.parent
    members = P.members
    position = np.full(G.order, -1, dtype=np.int32)
    position[members] = np.arange(members.size, dtype=np.int32)
    table = position[G.mult[np.ix_(members, members)]]
    group = Group(table, label=f"{G.label}|{P.order}")
    mapped = []
    for Q in inner:
        if (Q.mask_int & ~P.mask_int) != 0:
            raise PreconditionError("inner subgroup is not contained in the restriction")
        mask = np.zeros(members.size, dtype=bool)
        mask[position[Q.members]] = True
        mapped.append(Subgroup(group, mask))
    return group, mapped
