"""Recursive top-down splitting and the flattened proposition graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .extractors import ConstituencyType, Structure
from .lexicon import Lexicon, RhetoricalRelation, default_lexicon
from .rephrase import finish_sentence
from .rules import Rule, RuleApplication, apply, inventory
from .tree import ParseTree, PTBError, ensure_root, parse_ptb

__all__ = [
    "Leaf",
    "Subordination",
    "Coordination",
    "DiscourseTree",
    "Proposition",
    "Link",
    "PropositionGraph",
    "TraceStep",
    "ItemError",
    "DepthGuardExceeded",
    "Engine",
    "flatten",
    "leaves",
]


@dataclass(frozen=True)
class Leaf:
    sentence: str
    source_tree: ParseTree


@dataclass(frozen=True)
class Subordination:
    relation: RhetoricalRelation
    nucleus: "DiscourseTree"
    satellite: "DiscourseTree"
    rule: str = ""


@dataclass(frozen=True)
class Coordination:
    relation: RhetoricalRelation
    children: tuple["DiscourseTree", ...]
    rule: str = ""

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a coordination needs at least two children")


DiscourseTree = Union[Leaf, Subordination, Coordination]


@dataclass(frozen=True)
class Proposition:
    id: int
    text: str
    layer: int


@dataclass(frozen=True)
class Link:
    from_id: int
    to_id: int
    relation: RhetoricalRelation
    mutual: bool = False


@dataclass(frozen=True)
class PropositionGraph:
    propositions: tuple[Proposition, ...] = ()
    links: tuple[Link, ...] = ()

    def outgoing(self, pid: int) -> list[Link]:
        return [lk for lk in self.links if lk.from_id == pid]


@dataclass(frozen=True)
class TraceStep:
    rule: str
    input_tree: ParseTree
    application: RuleApplication
    relation: RhetoricalRelation


@dataclass(frozen=True)
class ItemError:
    index: int
    message: str


class DepthGuardExceeded(RuntimeError):
    pass


@dataclass
class Engine:
    """Rule inventory plus cue lexicon; both are treated as read-only."""

    rules: Sequence[Rule] = field(default_factory=inventory)
    lexicon: Lexicon = field(default_factory=default_lexicon)

    def classify(self, app: RuleApplication) -> RhetoricalRelation:
        if app.structure is Structure.COORDINATION:
            return self.lexicon.classify_coordination(app.cue)
        return self.lexicon.classify_subordination(app.cue, app.clause_initial)

    def first_application(self, tree: ParseTree) -> tuple[Rule, RuleApplication] | None:
        for rule in self.rules:
            app = apply(rule, tree)
            if app is not None:
                return rule, app
        return None

    def simplify(self, tree: ParseTree, trace: list | None = None) -> DiscourseTree:
        """Split ``tree`` until no rule applies to any part.

        ``trace``, when given, receives one :class:`TraceStep` per application
        in the order they were made.
        """
        tree = ensure_root(tree).reindexed()
        return self._simplify(tree, 0, len(tree), trace)

    def _simplify(self, tree: ParseTree, depth: int, limit: int, trace) -> DiscourseTree:
        if depth > limit:
            raise DepthGuardExceeded(f"recursion depth {depth} exceeds token count {limit}")
        found = self.first_application(tree)
        if found is None:
            return Leaf(finish_sentence(tree.words), tree)
        rule, app = found
        relation = self.classify(app)
        if trace is not None:
            trace.append(TraceStep(rule.name, tree, app, relation))
        subs = [self._simplify(p.tree, depth + 1, limit, trace) for p in app.parts]
        if app.structure is Structure.COORDINATION:
            return Coordination(relation, tuple(subs), rule.name)
        nucleus = next(s for s, p in zip(subs, app.parts) if p.type is ConstituencyType.CORE)
        satellite = next(s for s, p in zip(subs, app.parts) if p.type is ConstituencyType.CONTEXT)
        return Subordination(relation, nucleus, satellite, rule.name)

    def graph(self, tree: ParseTree, trace: list | None = None) -> PropositionGraph:
        return flatten(self.simplify(tree, trace))

    def simplify_all(self, items: Iterable[ParseTree | str]) -> list[PropositionGraph | ItemError]:
        """Graphs for each item in order; failures become :class:`ItemError` records."""
        out: list[PropositionGraph | ItemError] = []
        for i, item in enumerate(items):
            try:
                tree = parse_ptb(item) if isinstance(item, str) else item
                out.append(self.graph(tree))
            except (PTBError, DepthGuardExceeded) as exc:
                out.append(ItemError(i, f"{type(exc).__name__}: {exc}"))
        return out


# ---------------------------------------------------------------- flattening

def leaves(dtree: DiscourseTree) -> list[Leaf]:
    if isinstance(dtree, Leaf):
        return [dtree]
    if isinstance(dtree, Subordination):
        return leaves(dtree.nucleus) + leaves(dtree.satellite)
    return [lf for c in dtree.children for lf in leaves(c)]


def flatten(dtree: DiscourseTree) -> PropositionGraph:
    props: list[Proposition] = []
    links: list[Link] = []

    # returns (all leaf ids, representative id)
    def walk(node, layer) -> tuple[list[int], int]:
        if isinstance(node, Leaf):
            props.append(Proposition(len(props) + 1, node.sentence, layer))
            return [len(props)], len(props)
        if isinstance(node, Subordination):
            nuc_ids, rep = walk(node.nucleus, layer)
            sat_ids, _ = walk(node.satellite, layer + 1)
            links.extend(Link(rep, s, node.relation) for s in sat_ids)
            return nuc_ids + sat_ids, rep
        results = [walk(c, layer) for c in node.children]
        reps = [r for _, r in results]
        for a in reps:
            links.extend(Link(a, b, node.relation, True) for b in reps if b != a)
        return [i for ids, _ in results for i in ids], reps[0]

    walk(dtree, 0)
    links.sort(key=lambda lk: (lk.from_id, lk.to_id, lk.relation.value))
    return PropositionGraph(tuple(props), tuple(links))
