"""JSON, flat text and DOT renderings of a proposition graph."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .lexicon import RhetoricalRelation
from .simplifier import Link, Proposition, PropositionGraph

__all__ = ["ENGINE_VERSION", "OutputDocument", "to_json", "from_json", "to_flat", "to_dot", "LAYER_COLORS"]

ENGINE_VERSION = "discsplit-0.1.0/catalog-1"

# layer 0, layer 1, deeper layers
LAYER_COLORS = ("#cfe8ff", "#ffe9b3", "#f3c7c7")


@dataclass(frozen=True)
class OutputDocument:
    input_text: str
    graph: PropositionGraph
    engine_version: str = ENGINE_VERSION
    rule_trace: tuple[str, ...] | None = None


def _sorted_links(graph: PropositionGraph) -> list[Link]:
    return sorted(graph.links, key=lambda lk: (lk.from_id, lk.to_id, lk.relation.value))


def to_json(graph: PropositionGraph, input_text: str, rule_trace=None, engine_version: str = ENGINE_VERSION) -> str:
    """Canonical single-line JSON document; equal inputs give identical bytes."""
    doc = {
        "input_text": input_text,
        "propositions": [
            {"id": p.id, "text": p.text, "layer": p.layer}
            for p in sorted(graph.propositions, key=lambda p: p.id)
        ],
        "links": [
            {"from": lk.from_id, "to": lk.to_id, "relation": lk.relation.value, "mutual": lk.mutual}
            for lk in _sorted_links(graph)
        ],
        "engine_version": engine_version,
    }
    if rule_trace is not None:
        doc["rule_trace"] = list(rule_trace)
    return json.dumps(doc, ensure_ascii=False)


def from_json(text: str) -> OutputDocument:
    doc = json.loads(text)
    props = tuple(Proposition(p["id"], p["text"], p["layer"]) for p in doc["propositions"])
    links = tuple(
        Link(lk["from"], lk["to"], RhetoricalRelation(lk["relation"]), lk["mutual"]) for lk in doc["links"]
    )
    trace = doc.get("rule_trace")
    return OutputDocument(
        doc["input_text"],
        PropositionGraph(props, links),
        doc["engine_version"],
        tuple(trace) if trace is not None else None,
    )


def to_flat(graph: PropositionGraph) -> str:
    """``#id layer text`` per proposition followed by its outgoing ``L:RELATION #target`` lines."""
    lines = []
    links = _sorted_links(graph)
    for p in sorted(graph.propositions, key=lambda p: p.id):
        lines.append(f"#{p.id} {p.layer} {p.text}")
        lines.extend(f"    L:{lk.relation.value} #{lk.to_id}" for lk in links if lk.from_id == p.id)
    return "\n".join(lines)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: PropositionGraph, name: str = "propositions") -> str:
    """A DOT digraph; mutual links are drawn once with ``dir=both``."""
    out = [f"digraph {name} {{", "    node [shape=box, style=filled];"]
    for p in sorted(graph.propositions, key=lambda p: p.id):
        color = LAYER_COLORS[min(p.layer, len(LAYER_COLORS) - 1)]
        out.append(f"    {p.id} [label={_quote(p.text)}, fillcolor={_quote(color)}];")
    for lk in _sorted_links(graph):
        if lk.mutual:
            if lk.from_id < lk.to_id:
                out.append(f"    {lk.from_id} -> {lk.to_id} [label={lk.relation.value}, dir=both];")
        else:
            out.append(f"    {lk.from_id} -> {lk.to_id} [label={lk.relation.value}];")
    out.append("}")
    return "\n".join(out)
