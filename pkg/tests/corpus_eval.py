"""Scoring system graphs against the hand-annotated corpus.

A system proposition is aligned to the gold proposition of the same sentence
with the highest word-set Jaccard similarity (ties go to the lower gold id);
pairs below ``MIN_JACCARD`` stay unaligned and count as errors.
"""

import re

MIN_JACCARD = 0.5


def words(text):
    return set(re.findall(r"[a-z0-9']+", text.lower()))


def jaccard(a, b):
    a, b = words(a), words(b)
    return len(a & b) / len(a | b) if a | b else 1.0


def align(system_props, gold_props):
    """Map system id -> gold id (or None)."""
    out = {}
    for p in system_props:
        best, score = None, 0.0
        for g in gold_props:
            s = jaccard(p["text"], g["text"])
            if s > score:
                best, score = g["id"], s
        out[p["id"]] = best if score >= MIN_JACCARD else None
    return out


def score_sentence(doc, gold):
    """Counts for one sentence: (type_ok, type_total, rel_ok, rel_total)."""
    props = doc["propositions"]
    mapping = align(props, gold["propositions"])
    gold_types = {g["id"]: g["type"] for g in gold["propositions"]}
    type_ok = type_total = 0
    if len(props) >= 2:
        for p in props:
            type_total += 1
            sys_type = "CORE" if p["layer"] == 0 else "CONTEXT"
            if mapping[p["id"]] is not None and gold_types[mapping[p["id"]]] == sys_type:
                type_ok += 1
    gold_links = {(lk["from"], lk["to"], lk["relation"]) for lk in gold["links"]}
    rel_ok = 0
    for lk in doc["links"]:
        a, b = mapping[lk["from"]], mapping[lk["to"]]
        if a is not None and b is not None and (a, b, lk["relation"]) in gold_links:
            rel_ok += 1
    return type_ok, type_total, rel_ok, len(doc["links"])
