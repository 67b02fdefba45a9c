"""The verification matrix: run every decision method over every subgroup.

Each (group, subgroup) pair yields one report record holding the verdict of
every requested method, an agreement flag, and per-method wall timings.
Record content other than the timing fields is deterministic; entries may be
processed in parallel worker processes, with emission serialized in catalog
order.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import codes, theorems
from .catalog import (CatalogEntry, TAG_A1_2GROUP, TAG_ABELIAN_2,
                      TAG_ABELIAN_SYLOW2, TAG_DIHEDRAL, build_entry)
from .errors import PclError, SizeLimitError
from .structure import Subgroup, all_subgroups

METHODS = ("criterion3", "criterion4", "oracle", "cayley", "theorem")
EXHAUSTIVE_CAYLEY_LIMIT = 16


def _oracle_verdict(G, H) -> codes.Verdict:
    transversal = codes.find_inverse_closed_transversal(G, H)
    if transversal is None:
        return codes.Verdict(False, "oracle")
    return codes.Verdict(True, "oracle", {"transversal": list(transversal.reps)})


def _cayley_verdict(G, H) -> codes.Verdict | None:
    """Definition-level verdict: re-check a constructed connection set, or
    exhaust all inverse-closed sets on small groups.  None when neither
    route applies (no witness and the group is too large to sweep)."""
    transversal = codes.find_inverse_closed_transversal(G, H)
    if transversal is not None:
        connection = codes.connection_set_from_transversal(G, H, transversal)
        ok = codes.verify_perfect_code_in_cayley(G, connection, H)
        return codes.Verdict(ok, "cayley", {"connection_set": list(connection.members)})
    if G.order <= EXHAUSTIVE_CAYLEY_LIMIT:
        found = codes.exhaustive_connection_set_search(G, H)
        if found is None:
            return codes.Verdict(False, "cayley", {"exhausted_all_sets": True})
        return codes.Verdict(True, "cayley", {"connection_set": list(found.members)})
    return None


def theorem_outcome(entry: CatalogEntry, H: Subgroup) -> theorems.ClassificationOutcome | None:
    """Dispatch to the classifier matching the entry's structural tags."""
    G = entry.group
    if TAG_ABELIAN_2 in entry.tags:
        return theorems.classify_abelian_2group(G, H)
    if TAG_A1_2GROUP in entry.tags:
        return theorems.classify_a1_2group(G, H, entry.recognition)
    if TAG_DIHEDRAL in entry.tags:
        return theorems.dihedral_classify(G, H, entry.dihedral_rotation)
    if TAG_ABELIAN_SYLOW2 in entry.tags:
        return theorems.classify_abelian_sylow2(G, H)
    return None


def _verdict_payload(entry: CatalogEntry, H: Subgroup, method: str) -> dict:
    G = entry.group
    start = time.perf_counter()
    if method == "criterion3":
        v = codes.criterion3(G, H)
        payload = {"is_code": v.is_code, "evidence": v.evidence}
    elif method == "criterion4":
        v = codes.criterion4(G, H)
        payload = {"is_code": v.is_code, "evidence": v.evidence}
    elif method == "oracle":
        v = _oracle_verdict(G, H)
        payload = {"is_code": v.is_code, "evidence": v.evidence}
    elif method == "cayley":
        v = _cayley_verdict(G, H)
        if v is None:
            payload = {"not_applicable": True}
        else:
            payload = {"is_code": v.is_code, "evidence": v.evidence}
    elif method == "theorem":
        outcome = theorem_outcome(entry, H)
        if outcome is None:
            payload = {"not_applicable": True}
        else:
            payload = {"is_code": outcome.is_code, "clause": outcome.clause}
            if outcome.match is not None:
                payload["match"] = {"family": outcome.match.family,
                                    "params": outcome.match.params,
                                    "generators": list(outcome.match.generators)}
    else:
        raise PclError(f"unknown method {method!r}")
    payload["time_ms"] = (time.perf_counter() - start) * 1000.0
    return payload


GROUND_TRUTH_METHODS = ("criterion3", "criterion4", "oracle", "cayley")


def record_for(entry: CatalogEntry, H: Subgroup, methods=METHODS) -> dict:
    verdicts = {m: _verdict_payload(entry, H, m) for m in methods}
    votes = {v["is_code"] for v in verdicts.values() if "is_code" in v}
    return {
        "group": entry.label,
        "subgroup": {
            "elements": H.members.tolist(),
            "order": H.order,
            "generators": list(H.generators),
        },
        "verdicts": verdicts,
        "agreement": len(votes) <= 1,
    }


def _split_disagreement(record: dict) -> tuple[bool, bool]:
    """(ground-truth routes disagree, theorem clause mismatches them).

    The equivalence routes are the correctness gate; a theorem verdict that
    contradicts their agreed answer is a reported finding about the
    classification, not an engine failure.
    """
    truth_votes = {v["is_code"] for m, v in record["verdicts"].items()
                   if m in GROUND_TRUTH_METHODS and "is_code" in v}
    theorem = record["verdicts"].get("theorem", {})
    route_split = len(truth_votes) > 1
    finding = ("is_code" in theorem and len(truth_votes) == 1
               and theorem["is_code"] not in truth_votes)
    return route_split, finding


def entry_records(entry: CatalogEntry, methods=METHODS) -> list[dict]:
    return [record_for(entry, H, methods) for H in all_subgroups(entry.group)]


def _records_for_spec(args: tuple[str, str, tuple[str, ...]]) -> list[dict] | str:
    label, spec_text, methods = args
    try:
        return entry_records(build_entry(label, spec_text), methods)
    except SizeLimitError as exc:
        return str(exc)


def run_verification_matrix(entries: list[CatalogEntry | tuple[str, str]],
                            methods=METHODS, out=None, workers: int = 1) -> dict:
    """Run the matrix; returns a summary with per-group rows and the records.

    Entries may be built CatalogEntry objects or (label, spec) pairs; pairs
    are built here so that a size-limit error surfaces in that entry's row
    instead of aborting the run.  Entries run in catalog order (or across
    ``workers`` processes, results still emitted in catalog order).  A record
    disagrees when two applicable methods return different verdicts.
    """
    methods = tuple(methods)
    for m in methods:
        if m not in METHODS:
            raise PclError(f"unknown method {m!r}; choose from {', '.join(METHODS)}")
    labels = [e.label if isinstance(e, CatalogEntry) else e[0] for e in entries]
    if workers > 1 and len(entries) > 1:
        jobs = [(e.label, e.spec_text, methods) if isinstance(e, CatalogEntry)
                else (e[0], e[1], methods) for e in entries]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_entry = list(pool.map(_records_for_spec, jobs))
    else:
        per_entry = []
        for entry in entries:
            if isinstance(entry, CatalogEntry):
                per_entry.append(entry_records(entry, methods))
            else:
                per_entry.append(_records_for_spec((entry[0], entry[1], methods)))
    rows = []
    records = []
    disagreements = 0
    findings = 0
    size_limited = 0
    for label, recs in zip(labels, per_entry):
        if isinstance(recs, str):
            size_limited += 1
            rows.append({"group": label, "order": "", "subgroups": 0,
                         "codes": 0, "disagreements": 0, "findings": 0,
                         "error": recs})
            continue
        codes_found = sum(1 for r in recs
                          if next((v["is_code"] for v in r["verdicts"].values()
                                   if "is_code" in v), False))
        bad = found = 0
        for r in recs:
            route_split, finding = _split_disagreement(r)
            bad += route_split
            found += finding
        disagreements += bad
        findings += found
        rows.append({"group": label,
                     "order": max(r["subgroup"]["order"] for r in recs),
                     "subgroups": len(recs), "codes": codes_found,
                     "disagreements": bad, "findings": found})
        records.extend(recs)
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
    return {"rows": rows, "records": records, "disagreements": disagreements,
            "findings": findings, "size_limited": size_limited}


def render_summary_table(rows: list[dict]) -> str:
    headers = ("group", "order", "subgroups", "codes", "disagreements", "findings")
    headers = tuple(h for h in headers if any(h in r for r in rows))
    widths = [max(len(h), max((len(str(r.get(h, ""))) for r in rows), default=0))
              for h in headers]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        cells = "  ".join(str(r.get(h, "")).ljust(w) for h, w in zip(headers, widths))
        if "error" in r:
            cells += "  ! " + r["error"]
        lines.append(cells)
    total = {h: sum(r.get(h, 0) for r in rows
                    if isinstance(r.get(h, 0), int))
             for h in headers if h not in ("group", "order")}
    total["group"] = "TOTAL"
    total["order"] = ""
    lines.append("  ".join(str(total[h]).ljust(w) for h, w in zip(headers, widths)))
    return "\n".join(lines)


def conjugacy_class_rows(entries: list[CatalogEntry]) -> list[dict]:
    """Summary rows with subgroups collapsed to conjugacy classes.

    Perfect-code status is constant on a conjugacy class (the records stay
    per-subgroup; only this summary collapses), so each class reports the
    verdict of its canonical representative.
    """
    rows = []
    for entry in entries:
        G = entry.group
        ct = G.conj_table
        seen: set[int] = set()
        classes = 0
        code_classes = 0
        for H in all_subgroups(G):
            if H.mask_int in seen:
                continue
            classes += 1
            for x in range(G.order):
                conj = np.zeros(G.order, dtype=bool)
                conj[ct[x, H.members]] = True
                seen.add(int.from_bytes(np.packbits(conj).tobytes(), "big"))
            if codes.criterion3(G, H).is_code:
                code_classes += 1
        rows.append({"group": entry.label, "order": G.order,
                     "subgroups": classes, "codes": code_classes,
                     "disagreements": 0})
    return rows


def verdict_to_json(group_label: str, H: Subgroup, verdict: codes.Verdict) -> dict:
    """Single-verdict serialization: group, subgroup indices, method, result."""
    return {"group": group_label, "subgroup": H.members.tolist(),
            "method": verdict.method, "is_code": verdict.is_code,
            "evidence": verdict.evidence}
