"""A small Tregex-style query language over constituency trees.

Syntax::

    pattern  := node relation*
    relation := ["!"] OP target
    target   := node | "(" pattern ")"
    node     := alt ("|" alt)* ["=" name]
    alt      := "__" | LABEL | word | "quoted word"

``A < B < C`` means A has a child B *and* a child C; use parentheses to
chain relations on B.  Relations:

    ``<``   immediate dominance        ``<<``  dominance
    ``<:``  only child                 ``$+``  immediate right sister
    ``$..`` right sister               ``.``   immediately precedes (yields)
    ``==``  same node                  ``!``   negates the following relation

Words are the leaves below preterminals.  An unquoted literal containing a
lowercase letter is a case-insensitive word test (``although`` matches
"Although"); an unquoted literal without lowercase letters is a category label
(``NP``, ``-LRB-``, ``,``); a double-quoted literal is a case-sensitive word
test.  ``__`` matches any node, words included.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .tree import ParseTree

__all__ = [
    "PatternSyntaxError",
    "DuplicateCaptureName",
    "Pattern",
    "PatternNode",
    "Relation",
    "MatchBindings",
    "TreeIndex",
    "compile",
    "match_all",
    "match_first",
    "iter_matches",
    "RELATIONS",
]

RELATIONS = ("<", "<<", "<:", "$+", "$..", ".", "==")
_OPS = ("<<", "<:", "<", "$+", "$..", "==", ".")  # longest first
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_LITERAL = re.compile(r'[^\s()|=!<"]+')


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int, source: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.source = source


class DuplicateCaptureName(PatternSyntaxError):
    pass


@dataclass(frozen=True)
class Alt:
    kind: str  # "any" | "label" | "word" | "exact"
    text: str = ""

    def test(self, label: str | None, word: str | None, lword: str | None) -> bool:
        if self.kind == "any":
            return True
        if self.kind == "label":
            return label == self.text
        if self.kind == "word":
            return lword == self.text
        return word == self.text


@dataclass
class PatternNode:
    alts: tuple[Alt, ...]
    capture: str | None = None
    relations: list["Relation"] = field(default_factory=list)

    @functools.cached_property
    def keys(self) -> tuple[bool, frozenset, frozenset, frozenset]:
        """(wildcard, labels, lowercased words, exact words) for fast node tests."""
        by_kind = {k: frozenset(a.text for a in self.alts if a.kind == k) for k in ("label", "word", "exact")}
        return any(a.kind == "any" for a in self.alts), by_kind["label"], by_kind["word"], by_kind["exact"]

    def nodes(self) -> Iterator["PatternNode"]:
        yield self
        for rel in self.relations:
            yield from rel.target.nodes()


@dataclass
class Relation:
    op: str
    negated: bool
    target: PatternNode


class _Parser:
    def __init__(self, source: str):
        self.src = source
        self.pos = 0
        self.captures: list[str] = []
        self.negation_depth = 0

    def error(self, msg, pos=None):
        raise PatternSyntaxError(msg, self.pos if pos is None else pos, self.src)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def parse(self) -> PatternNode:
        root = self.pattern()
        if self.peek():
            self.error(f"unexpected {self.src[self.pos]!r}")
        return root

    def pattern(self) -> PatternNode:
        node = self.node()
        while True:
            c = self.peek()
            if not c or c == ")":
                return node
            node.relations.append(self.relation())

    def relation(self) -> Relation:
        negated = False
        if self.peek() == "!":
            negated = True
            self.pos += 1
            self.skip()
        for op in _OPS:
            if self.src.startswith(op, self.pos):
                self.pos += len(op)
                break
        else:
            self.error("expected a relation")
        if negated:
            self.negation_depth += 1
        if self.peek() == "(":
            self.pos += 1
            target = self.pattern()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        else:
            target = self.node()
        if negated:
            self.negation_depth -= 1
        return Relation(op, negated, target)

    def node(self) -> PatternNode:
        alts = [self.alt()]
        while self.src.startswith("|", self.pos):
            self.pos += 1
            alts.append(self.alt())
        capture = None
        if self.src.startswith("=", self.pos) and not self.src.startswith("==", self.pos):
            start = self.pos
            self.pos += 1
            m = _NAME.match(self.src, self.pos)
            if not m:
                self.error("expected a capture name")
            capture = m.group()
            self.pos = m.end()
            if self.negation_depth:
                self.error("captures are not allowed under negation", start)
            if capture in self.captures:
                raise DuplicateCaptureName(f"capture {capture!r} declared twice", start, self.src)
            self.captures.append(capture)
        return PatternNode(tuple(alts), capture)

    def alt(self) -> Alt:
        self.skip()
        if self.pos >= len(self.src):
            self.error("unexpected end of pattern")
        if self.src[self.pos] == '"':
            end = self.src.find('"', self.pos + 1)
            if end < 0:
                self.error("unterminated quoted word")
            text = self.src[self.pos + 1:end]
            if not text:
                self.error("empty quoted word")
            self.pos = end + 1
            return Alt("exact", text)
        m = _LITERAL.match(self.src, self.pos)
        if not m:
            self.error(f"expected a node description, found {self.src[self.pos]!r}")
        text = m.group()
        self.pos = m.end()
        if text == "__":
            return Alt("any")
        if any(c.islower() for c in text):
            return Alt("word", text.lower())
        return Alt("label", text)


@dataclass(frozen=True, eq=False)
class Pattern:
    source: str
    root: PatternNode

    @property
    def captures(self) -> list[str]:
        return [n.capture for n in self.root.nodes() if n.capture]

    def __eq__(self, other):
        return isinstance(other, Pattern) and other.source == self.source

    def __hash__(self):
        return hash(self.source)

    def __repr__(self):
        return f"Pattern({self.source!r})"


def compile(source: str) -> Pattern:  # noqa: A001 - mirrors re.compile
    if not isinstance(source, str) or not source.strip():
        raise PatternSyntaxError("empty pattern", 0, source or "")
    return Pattern(source, _Parser(source).parse())


class TreeIndex:
    """Flat pre-order view of a tree with word leaves as extra nodes."""

    def __init__(self, tree: ParseTree):
        self.objs: list = []
        self.label: list = []
        self.word: list = []
        self.lword: list = []
        self.parent: list[int] = []
        self.kids: list[list[int]] = []
        self.sib: list[int] = []
        self.end: list[int] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.paths: list[tuple[int, ...]] = []
        self._walk(tree, -1, 0, ())
        self.starts_at: dict[int, list[int]] = {}
        for i, l in enumerate(self.left):
            self.starts_at.setdefault(l, []).append(i)

    def _add(self, obj, label, word, parent, sib, path) -> int:
        i = len(self.objs)
        self.objs.append(obj)
        self.label.append(label)
        self.word.append(word)
        self.lword.append(word.lower() if word is not None else None)
        self.parent.append(parent)
        self.kids.append([])
        self.sib.append(sib)
        self.end.append(i)
        self.left.append(0)
        self.right.append(0)
        self.paths.append(path)
        if parent >= 0:
            self.kids[parent].append(i)
        return i

    def _walk(self, node: ParseTree, parent: int, sib: int, path) -> int:
        i = self._add(node, node.label, None, parent, sib, path)
        if node.token is not None:
            w = self._add(node.token, None, node.token.text, i, 0, path)
            self.left[w] = self.right[w] = self.left[i] = self.right[i] = node.token.index
            self.end[i] = w
            return i
        for k, child in enumerate(node.children):
            self._walk(child, i, k, path + (k,))
        first, last = self.kids[i][0], self.kids[i][-1]
        self.left[i] = self.left[first]
        self.right[i] = self.right[last]
        self.end[i] = self.end[last]
        return i

    def __len__(self):
        return len(self.objs)

    def candidates(self, op: str, i: int):
        if op == "<":
            return self.kids[i]
        if op == "<<":
            return range(i + 1, self.end[i] + 1)
        if op == "<:":
            return self.kids[i] if len(self.kids[i]) == 1 else ()
        if op == "==":
            return (i,)
        if op == ".":
            return self.starts_at.get(self.right[i] + 1, ())
        p = self.parent[i]
        if p < 0:
            return ()
        sisters = self.kids[p]
        k = self.sib[i]
        if op == "$+":
            return sisters[k + 1:k + 2]
        if op == "$..":
            return sisters[k + 1:]
        raise ValueError(op)

    def test(self, pnode: PatternNode, i: int) -> bool:
        wildcard, labels, lwords, exact = pnode.keys
        return wildcard or self.label[i] in labels or self.lword[i] in lwords or self.word[i] in exact


def tree_index(tree: ParseTree) -> TreeIndex:
    idx = tree.__dict__.get("_match_index")
    if idx is None:
        idx = TreeIndex(tree)
        tree.__dict__["_match_index"] = idx
    return idx


@dataclass(frozen=True)
class MatchBindings:
    """One match: the node bound to the pattern root plus the named captures.

    ``positions`` holds pre-order indices (word leaves count as nodes);
    ``bindings`` maps names to ParseTree nodes, or Token objects for words.
    """

    tree: ParseTree
    root_position: int
    positions: dict[str, int]

    @property
    def _index(self) -> TreeIndex:
        return tree_index(self.tree)

    @property
    def root(self):
        return self._index.objs[self.root_position]

    @property
    def bindings(self) -> dict[str, object]:
        objs = self._index.objs
        return {name: objs[i] for name, i in self.positions.items()}

    def __getitem__(self, name: str):
        return self._index.objs[self.positions[name]]

    def __contains__(self, name: str) -> bool:
        return name in self.positions

    def path(self, name: str) -> tuple[int, ...]:
        return self._index.paths[self.positions[name]]

    def key(self) -> tuple[int, ...]:
        return (self.root_position, *self.positions.values())


def _match_node(idx: TreeIndex, pn: PatternNode, i: int, env: dict):
    if pn.capture:
        env = {**env, pn.capture: i}
    yield from _match_rels(idx, pn.relations, 0, i, env)


def _match_rels(idx: TreeIndex, rels: list[Relation], k: int, i: int, env: dict):
    if k == len(rels):
        yield env
        return
    rel = rels[k]
    target = rel.target
    if rel.negated:
        for j in idx.candidates(rel.op, i):
            if idx.test(target, j) and next(_match_node(idx, target, j, env), None) is not None:
                return
        yield from _match_rels(idx, rels, k + 1, i, env)
        return
    for j in idx.candidates(rel.op, i):
        if idx.test(target, j):
            for env2 in _match_node(idx, target, j, env):
                yield from _match_rels(idx, rels, k + 1, i, env2)


def iter_matches(pattern: Pattern, tree: ParseTree) -> Iterator[MatchBindings]:
    """Lazily yield matches in the canonical order (root pre-order, then captures)."""
    idx = tree_index(tree)
    names = pattern.captures
    root = pattern.root
    for i in range(len(idx)):
        if not idx.test(root, i):
            continue
        seen = set()
        for env in _match_node(idx, root, i, {}):
            seen.add(tuple(env[n] for n in names))
        for key in sorted(seen):
            yield MatchBindings(tree, i, dict(zip(names, key)))


def match_all(pattern: Pattern, tree: ParseTree) -> list[MatchBindings]:
    return list(iter_matches(pattern, tree))


def match_first(pattern: Pattern, tree: ParseTree) -> MatchBindings | None:
    return next(iter_matches(pattern, tree), None)

