"""Fast-path classifiers for the perfect-code decision.

Each classifier implements a closed-form rule for one class of groups and is
differentially tested against the coset criterion.  All rules are evaluated
against a recognition witness (explicit generators inside the concrete
group), never against an abstract presentation; family membership is decided
by element-set equality of generated subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import WrongClassifierError
from .groups import Group
from .structure import (FamilyRecognition, Subgroup, frattini, full_subgroup,
                        recognize_a1_family, recognize_dihedral, squares_set,
                        subgroup_generated, sylow, sylow_containing,
                        _sylow_within, _is_2group)

CLAUSE_TRIVIAL = "trivial-subgroup"
CLAUSE_FRATTINI = "frattini-containment"
CLAUSE_Q8 = "quaternion-no-nontrivial-codes"
CLAUSE_NONSQUARE = "cyclic-nonsquare-generator"
CLAUSE_KLEIN_D8 = "klein-four-in-dihedral-8"
CLAUSE_METACYCLIC_NONCYCLIC = "metacyclic-noncyclic-excluded"
CLAUSE_FAMILY = "noncyclic-family-match"
CLAUSE_DIHEDRAL = "dihedral-rule"
CLAUSE_SYLOW2 = "sylow2-frattini-containment"


@dataclass(frozen=True)
class FamilyMatch:
    """A noncyclic subgroup matched to one of the classified shapes."""

    family: str
    params: dict[str, int]
    generators: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationOutcome:
    is_code: bool
    clause: str
    match: FamilyMatch | None = None


def classify_abelian_2group(G: Group, H: Subgroup) -> ClassificationOutcome:
    """Abelian 2-group rule: H is a perfect code iff H meet Phi(G) <= Phi(H)."""
    if not (G.is_abelian and _is_2group(G)):
        raise WrongClassifierError(
            f"classify_abelian_2group requires an abelian 2-group, got {G.label}")
    if H.is_trivial or H.is_full:
        return ClassificationOutcome(True, CLAUSE_TRIVIAL)
    phi_g = frattini(full_subgroup(G))
    phi_h = frattini(H)
    ok = ((H.mask_int & phi_g.mask_int) & ~phi_h.mask_int) == 0
    return ClassificationOutcome(ok, CLAUSE_FRATTINI)


def classify_a1_2group(G: Group, H: Subgroup,
                       rec: FamilyRecognition | None = None) -> ClassificationOutcome:
    """Minimal nonabelian 2-group rule.

    Cyclic subgroups are codes exactly when some generator is a nonsquare
    (never in the quaternion group); noncyclic codes exist only in the
    dihedral group of order 8 (the Klein four subgroups) and in the
    nonmetacyclic family, where membership in an explicit list of
    two-generator shapes decides.
    """
    if rec is None:
        rec = recognize_a1_family(G)
    if rec.tag not in ("q8", "metacyclic", "nonmetacyclic"):
        raise WrongClassifierError(
            f"classify_a1_2group requires a minimal nonabelian 2-group, got {G.label}")
    if H.is_trivial or H.is_full:
        return ClassificationOutcome(True, CLAUSE_TRIVIAL)
    if rec.tag == "q8":
        return ClassificationOutcome(False, CLAUSE_Q8)
    if H.is_cyclic:
        sq = squares_set(G)
        orders = G.element_orders()
        gens = H.members[orders[H.members] == H.order]
        nonsquare = bool((~np.isin(gens, sq)).any())
        return ClassificationOutcome(nonsquare, CLAUSE_NONSQUARE)
    if rec.tag == "metacyclic":
        if rec.params == (2, 1):
            klein = H.order == 4 and bool((G.element_orders()[H.members] <= 2).all())
            if klein:
                match = FamilyMatch("Z2xZ2 in D8", {}, H.generators)
                return ClassificationOutcome(True, CLAUSE_KLEIN_D8, match)
            return ClassificationOutcome(False, CLAUSE_KLEIN_D8)
        return ClassificationOutcome(False, CLAUSE_METACYCLIC_NONCYCLIC)
    match = match_theorem_family(rec, H)
    return ClassificationOutcome(match is not None, CLAUSE_FAMILY, match)


def _odd_residues(modulus: int) -> list[int]:
    return [d for d in range(1, max(modulus, 2)) if d % 2 == 1]


def _family_shapes(n2: int, m2: int):
    """Shape table for the nonmetacyclic group with parameters (n2, m2).

    Each entry is (label, parameter names, range lists, generator builder);
    exponent parameters range over residues modulo the relevant element
    orders, so every subgroup the unbounded shapes describe is produced.
    The constraint on k is 2^k divides 2^n2 * j (always met when j = 0).
    """
    qa, qb = 2 ** n2, 2 ** m2

    def v2(x: int) -> int:
        return (x & -x).bit_length() - 1 if x else 10 ** 9

    shapes = []
    if n2 == 1:
        shapes.append(("<a c^s, b^2>", ("s",), lambda s: ((("a", 1), ("c", s)), (("b", 2),))))
        shapes.append(("<a b^2j c^s, b^(2^k r) c>", ("j", "s", "k", "r"),
                       lambda j, s, k, r: ((("a", 1), ("b", 2 * j), ("c", s)),
                                           (("b", (2 ** k) * r), ("c", 1)))))
        shapes.append(("<a b^t, c>", ("t",), lambda t: ((("a", 1), ("b", t)), (("c", 1),))))
        shapes.append(("<a^t b^d, c>", ("t", "d"),
                       lambda t, d: ((("a", t), ("b", d)), (("c", 1),))))
    else:
        shapes.append(("<a^d c^s, b^2>", ("d", "s"),
                       lambda d, s: ((("a", d), ("c", s)), (("b", 2),))))
        shapes.append(("<a^d b^2j c^s, b^(2^k r) c>", ("d", "j", "s", "k", "r"),
                       lambda d, j, s, k, r: ((("a", d), ("b", 2 * j), ("c", s)),
                                              (("b", (2 ** k) * r), ("c", 1)))))
        shapes.append(("<a^t b^d c^s, a^2>", ("t", "d", "s"),
                       lambda t, d, s: ((("a", t), ("b", d), ("c", s)), (("a", 2),))))
        shapes.append(("<a^t b^d c^s, a^(2^l r) c>", ("t", "d", "s", "l", "r"),
                       lambda t, d, s, l, r: ((("a", t), ("b", d), ("c", s)),
                                              (("a", (2 ** l) * r), ("c", 1)))))
        shapes.append(("<a^d b^t, c>", ("d", "t"),
                       lambda d, t: ((("a", d), ("b", t)), (("c", 1),))))
        shapes.append(("<a^t b^d, c>", ("t", "d"),
                       lambda t, d: ((("a", t), ("b", d)), (("c", 1),))))

    def ranges(label: str, names: tuple[str, ...],
               partial: dict[str, int]) -> list[int]:
        name = names[len(partial)]
        if name == "s":
            return [0, 1]
        if name == "t":
            # position decides the modulus: t exponentiates a in a^t forms
            return list(range(qa)) if "a^t" in label else list(range(qb))
        if name == "d":
            return _odd_residues(qb) if "b^d" in label else _odd_residues(qa)
        if name == "j":
            return list(range(max(qb // 2, 1)))
        if name == "k":
            j = partial["j"]
            top = n2 + v2(j) if j else m2 - 1
            return [k for k in range(1, m2) if k <= top]
        if name == "l":
            return list(range(1, n2))
        if name == "r":
            if "b^(2^k r)" in label:
                return _odd_residues(2 ** (m2 - partial["k"]))
            return _odd_residues(2 ** (n2 - partial["l"]))
        raise AssertionError(name)

    expanded = []
    for label, names, builder in shapes:
        combos: list[dict[str, int]] = [{}]
        for _ in names:
            combos = [dict(c, **{names[len(c)]: v}) for c in combos
                      for v in ranges(label, names, c)]
        expanded.append((label, names, combos, builder))
    return expanded


def _family_candidates(G: Group, rec: FamilyRecognition):
    """All candidate (shape, params, generators, member-mask) tuples, cached."""
    cached = G._cache.get("family_candidates")
    if cached is not None:
        return cached
    n2, m2 = rec.params
    a, b, c = rec.witness
    powers = {"a": a, "b": b, "c": c}

    def element(word) -> int:
        out = 0
        for sym, exp in word:
            out = G.mul(out, G.power(powers[sym], exp))
        return out

    candidates = []
    seen_pair: dict[tuple[int, int], np.ndarray] = {}
    for label, names, combos, builder in _family_shapes(n2, m2):
        for params in combos:
            words = builder(**params)
            g1, g2 = element(words[0]), element(words[1])
            pair = (g1, g2)
            members = seen_pair.get(pair)
            if members is None:
                members = G.closure([g1, g2])
                seen_pair[pair] = members
            candidates.append((label, params, pair, members.tobytes()))
    G._cache["family_candidates"] = candidates
    return candidates


def match_theorem_family(rec: FamilyRecognition, H: Subgroup) -> FamilyMatch | None:
    """First classified shape whose generated subgroup equals H, if any.

    Only noncyclic proper nontrivial subgroups can match; other inputs
    return None.
    """
    if rec.tag != "nonmetacyclic":
        raise WrongClassifierError("match_theorem_family needs a nonmetacyclic recognition")
    G = H.parent
    if H.is_trivial or H.is_full or H.is_cyclic:
        return None
    target = H.members.tobytes()
    for label, params, pair, members in _family_candidates(G, rec):
        if members == target:
            return FamilyMatch(label, dict(params), pair)
    return None


def dihedral_classify(G: Group, H: Subgroup,
                      rotation: int | None = None) -> ClassificationOutcome:
    """Dihedral rule: subgroups of the rotation subgroup <a> are codes iff
    |H| or n/|H| is odd; everything else is a code."""
    if rotation is None:
        witness = recognize_dihedral(G)
        if witness is None:
            raise WrongClassifierError(f"{G.label} is not dihedral")
        rotation = witness[0]
    n = G.order // 2
    rotations = subgroup_generated(G, [rotation])
    if rotations.order != n:
        raise WrongClassifierError("rotation witness has the wrong order")
    if H.issubset(rotations):
        ok = (H.order % 2 == 1) or ((n // H.order) % 2 == 1)
        return ClassificationOutcome(ok, CLAUSE_DIHEDRAL)
    return ClassificationOutcome(True, CLAUSE_DIHEDRAL)


def classify_abelian_sylow2(G: Group, H: Subgroup) -> ClassificationOutcome:
    """Rule for groups with a nontrivial abelian Sylow 2-subgroup: with Q a
    Sylow 2-subgroup of H inside a Sylow 2-subgroup P of G, H is a perfect
    code iff Q meet Phi(P) <= Phi(Q)."""
    P0 = sylow(G, 2)
    if P0.order == 1 or not P0.is_abelian:
        raise WrongClassifierError(
            f"classify_abelian_sylow2 requires a nontrivial abelian Sylow 2-subgroup, got {G.label}")
    Q = _sylow_within(G, H, 2, None)
    P = sylow_containing(G, 2, Q)
    phi_p = frattini(P)
    phi_q = frattini(Q)
    ok = ((Q.mask_int & phi_p.mask_int) & ~phi_q.mask_int) == 0
    return ClassificationOutcome(ok, CLAUSE_SYLOW2)
