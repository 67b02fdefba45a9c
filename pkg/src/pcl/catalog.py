"""The default verification catalog and structural tagging of entries."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GroupSpecError
from .groups import Group, prime_power
from .specs import build_family
from .structure import (FamilyRecognition, recognize_a1_family,
                        recognize_dihedral, sylow, _is_2group)

TAG_ABELIAN_2 = "abelian-2"
TAG_A1_2GROUP = "a1-2group"
TAG_DIHEDRAL = "dihedral"
TAG_ABELIAN_SYLOW2 = "abelian-sylow2"
TAG_MIXED_ORDER = "mixed-order"


@dataclass
class CatalogEntry:
    label: str
    spec_text: str
    group: Group
    tags: frozenset[str]
    recognition: FamilyRecognition | None = None
    dihedral_rotation: int | None = None


def build_entry(label: str, spec_text: str) -> CatalogEntry:
    group = build_family(spec_text, label=label)
    tags = set()
    recognition = None
    rotation = None
    if _is_2group(group):
        recognition = recognize_a1_family(group)
        if recognition.tag == "abelian":
            tags.add(TAG_ABELIAN_2)
        elif recognition.tag in ("q8", "metacyclic", "nonmetacyclic"):
            tags.add(TAG_A1_2GROUP)
    witness = recognize_dihedral(group)
    if witness is not None:
        tags.add(TAG_DIHEDRAL)
        rotation = witness[0]
    if prime_power(group.order) is not None and group.order % 2 == 0:
        # a 2-group is its own Sylow 2-subgroup; skip the lattice
        if group.is_abelian:
            tags.add(TAG_ABELIAN_SYLOW2)
    elif group.order > 1:
        syl2 = sylow(group, 2)
        if syl2.order > 1 and syl2.is_abelian:
            tags.add(TAG_ABELIAN_SYLOW2)
    if group.order > 1 and prime_power(group.order) is None:
        tags.add(TAG_MIXED_ORDER)
    return CatalogEntry(label, spec_text, group, frozenset(tags),
                        recognition, rotation)


def _partitions(total: int):
    """Partitions of ``total`` into nonincreasing positive parts."""
    if total == 0:
        yield ()
        return
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    yield from rec(total, total)


def default_catalog_specs() -> list[tuple[str, str]]:
    """(label, spec) pairs covering abelian 2-groups up to order 64, the
    minimal nonabelian families, small dihedral groups, and mixed-order
    groups with abelian Sylow 2-subgroups."""
    pairs: list[tuple[str, str]] = []
    for k in range(0, 7):
        for partition in _partitions(k):
            if not partition:
                spec = "C(1)"
            elif all(part == 1 for part in partition):
                spec = f"EA(2,{len(partition)})"
            else:
                spec = "x".join(f"C({2 ** part})" for part in partition)
            pairs.append((spec, spec))
    pairs.append(("Q8", "Q8"))
    # the dihedral and minimal nonabelian ranges reach order 150 and 128 so
    # that the agreement matrix quantifies over >= 10^4 (G, H) pairs
    for order in range(8, 152, 2):
        pairs.append((f"D({order})", f"D({order})"))
    for n1 in range(2, 7):
        for m1 in range(1, 8 - n1):
            pairs.append((f"M2({n1},{m1})", f"M2({n1},{m1})"))
    for n2 in range(1, 4):
        for m2 in range(n2, 7 - n2):
            if n2 + m2 >= 3:
                pairs.append((f"M2({n2},{m2},1)", f"M2({n2},{m2},1)"))
    pairs.extend([
        ("S3", "perm:(1 2 3),(1 2)"),
        ("A4", "perm:(1 2 3),(1 2)(3 4)"),
        ("A5", "perm:(1 2 3 4 5),(1 2 3)"),
        ("F20", "SD(C(5);C(4);1->2)"),
        ("C7:C3", "SD(C(7);C(3);1->2)"),
        ("D12", "D(12)"),
    ])
    seen = set()
    unique: list[tuple[str, str]] = []
    for label, spec in pairs:
        if spec not in seen:
            seen.add(spec)
            unique.append((label, spec))
    return unique


def default_catalog() -> list[CatalogEntry]:
    return [build_entry(label, spec) for label, spec in default_catalog_specs()]


def load_catalog_pairs(path: str) -> list[tuple[str, str]]:
    """(label, spec) pairs from a JSON file: a list of spec strings or of
    objects with ``spec`` and optional ``label`` keys."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise GroupSpecError("catalog file must hold a JSON list")
    pairs = []
    for item in data:
        if isinstance(item, str):
            pairs.append((item, item))
        elif isinstance(item, dict) and "spec" in item:
            pairs.append((item.get("label", item["spec"]), item["spec"]))
        else:
            raise GroupSpecError(f"bad catalog item: {item!r}")
    return pairs


def load_catalog_file(path: str) -> list[CatalogEntry]:
    """Built catalog entries from a JSON file (see ``load_catalog_pairs``)."""
    return [build_entry(label, spec) for label, spec in load_catalog_pairs(path)]
