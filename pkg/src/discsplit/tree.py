"""Constituency trees and the Penn Treebank bracketed format.

Trees are immutable.  Every node is either a preterminal carrying exactly one
:class:`Token`, or a phrase with one or more children.  Functional tags
(``NP-SBJ`` -> ``NP``) and trace nodes (``-NONE-``) are removed while reading.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Token",
    "ParseTree",
    "PTBError",
    "UnbalancedBrackets",
    "EmptyNode",
    "EmptyInput",
    "MalformedTree",
    "parse_ptb",
    "serialize",
    "yield_text",
    "detokenize",
    "ensure_root",
    "read_tree_lines",
]


class PTBError(ValueError):
    """Base class for bracketed-input errors."""


class UnbalancedBrackets(PTBError):
    pass


class EmptyNode(PTBError):
    pass


class EmptyInput(PTBError):
    pass


class MalformedTree(PTBError):
    """Well-bracketed input that does not describe a single tree."""


@dataclass(frozen=True)
class Token:
    text: str
    index: int

    def __post_init__(self):
        if not self.text or any(c.isspace() for c in self.text):
            raise ValueError(f"invalid token text {self.text!r}")
        if self.index < 0:
            raise ValueError("token index must be non-negative")


@dataclass(frozen=True, eq=True)
class ParseTree:
    label: str
    children: tuple["ParseTree", ...] = ()
    token: Token | None = field(default=None)

    def __post_init__(self):
        if not self.label:
            raise EmptyNode("node with empty label")
        if self.token is None and not self.children:
            raise EmptyNode(f"node {self.label!r} has neither children nor token")
        if self.token is not None and self.children:
            raise MalformedTree(f"node {self.label!r} has both a token and children")
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @classmethod
    def leaf(cls, label: str, text: str, index: int = 0) -> "ParseTree":
        return cls(label, (), Token(text, index))

    @property
    def is_preterminal(self) -> bool:
        return self.token is not None

    def preterminals(self) -> Iterator["ParseTree"]:
        if self.token is not None:
            yield self
            return
        for child in self.children:
            yield from child.preterminals()

    @cached_property
    def tokens(self) -> tuple[Token, ...]:
        return tuple(p.token for p in self.preterminals())

    @property
    def words(self) -> list[str]:
        return [t.text for t in self.tokens]

    @property
    def tags(self) -> list[str]:
        return [p.label for p in self.preterminals()]

    def __len__(self) -> int:
        return len(self.tokens)

    def subtree(self, path: Sequence[int]) -> "ParseTree":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def replace(self, path: Sequence[int], new: "ParseTree | None") -> "ParseTree | None":
        """Return a copy with the node at ``path`` replaced (or removed if ``new`` is None).

        Phrases left without children are pruned; removing everything yields None.
        """
        if not path:
            return new
        head, rest = path[0], path[1:]
        kids = list(self.children)
        repl = kids[head].replace(rest, new)
        if repl is None:
            del kids[head]
        else:
            kids[head] = repl
        if not kids:
            return None
        return ParseTree(self.label, tuple(kids))

    def without(self, paths: Iterable[Sequence[int]]) -> "ParseTree | None":
        # deepest / rightmost first so earlier paths stay valid
        tree: ParseTree | None = self
        for p in sorted({tuple(p) for p in paths}, reverse=True):
            if tree is None:
                break
            tree = tree.replace(p, None)
        return tree

    def reindexed(self, start: int = 0) -> "ParseTree":
        """Copy of the tree whose token indices run from ``start`` without gaps."""
        counter = iter(range(start, start + len(self.tokens)))

        def walk(node: ParseTree) -> ParseTree:
            if node.token is not None:
                return ParseTree(node.label, (), Token(node.token.text, next(counter)))
            return ParseTree(node.label, tuple(walk(c) for c in node.children))

        return walk(self)

    def __str__(self) -> str:
        return serialize(self)


_LEX = re.compile(r"\(|\)|[^\s()]+")
_TRACE_LABELS = {"-NONE-"}


def _strip_functional(label: str) -> str:
    if label.startswith("-") or label in {"$", "#", "''", "``", ",", ".", ":", "--"}:
        return label
    base = re.split(r"[-=]", label, maxsplit=1)[0]
    return base or label


def parse_ptb(text: str) -> ParseTree:
    """Read one bracketed tree.

    The top-level wrapper ``( (S ...) )`` with an empty label becomes ``ROOT``.
    Token indices are assigned left to right from 0.
    """
    if text is None or not text.strip():
        raise EmptyInput("empty input")
    lexemes = _LEX.findall(text)
    if lexemes[0] != "(":
        raise MalformedTree("input must start with '('")
    depth, closed_at = 0, None
    for i, lex in enumerate(lexemes):
        if lex == "(":
            depth += 1
        elif lex == ")":
            depth -= 1
            if depth < 0:
                raise UnbalancedBrackets(f"unexpected ')' at lexeme {i}")
            if depth == 0 and closed_at is None:
                closed_at = i
    if depth != 0:
        raise UnbalancedBrackets(f"{depth} unclosed '('")
    if closed_at != len(lexemes) - 1:
        raise MalformedTree("trailing material after the first tree")

    pos = 0

    def node() -> ParseTree | None:
        # lexemes[pos] == "("; returns None for trace material
        nonlocal pos
        pos += 1
        label = ""
        if lexemes[pos] not in ("(", ")"):
            label = lexemes[pos]
            pos += 1
        kids: list[ParseTree] = []
        words: list[str] = []
        dropped = False
        while lexemes[pos] != ")":
            if lexemes[pos] == "(":
                child = node()
                if child is None:
                    dropped = True
                else:
                    kids.append(child)
            else:
                words.append(lexemes[pos])
                pos += 1
        pos += 1
        if label in _TRACE_LABELS:
            return None
        if words:
            if kids or len(words) > 1:
                raise MalformedTree(f"node {label or '?'!r} mixes words and subtrees")
            if not label:
                raise EmptyNode("word without a part-of-speech label")
            return ParseTree(_strip_functional(label), (), Token(words[0], 0))
        if not kids:
            if dropped:
                return None
            raise EmptyNode(f"node {label or '()'!r} has no children")
        return ParseTree(_strip_functional(label) if label else "ROOT", tuple(kids))

    tree = node()
    if tree is None:
        raise EmptyNode("tree consists only of empty elements")
    return tree.reindexed()


def serialize(tree: ParseTree) -> str:
    if tree.token is not None:
        return f"({tree.label} {tree.token.text})"
    return "(" + tree.label + " " + " ".join(serialize(c) for c in tree.children) + ")"


_ESCAPES = {
    "-LRB-": "(", "-RRB-": ")", "-LSB-": "[", "-RSB-": "]",
    "-LCB-": "{", "-RCB-": "}", "``": '"', "''": '"',
}
_NO_SPACE_BEFORE = {",", ".", ";", ":", "?", "!", ")", "]", "}", "%", "n't", "'s", "'re", "'ve", "'ll", "'d", "'m", "'"}
_NO_SPACE_AFTER = {"(", "[", "{", "$"}


def detokenize(words: Iterable[str]) -> str:
    """Join PTB tokens into running text."""
    out: list[str] = []
    glue_next = False
    quote_open = False
    for raw in words:
        w = _ESCAPES.get(raw, raw)
        attach = glue_next or not out
        if raw in _NO_SPACE_BEFORE or w in _NO_SPACE_BEFORE or raw.lower() in _NO_SPACE_BEFORE:
            attach = True
        if raw == "''":
            attach = True
            quote_open = False
        glue_next = w in _NO_SPACE_AFTER
        if raw == "``":
            glue_next = True
            quote_open = True
        if raw == '"':
            if quote_open:
                attach = True
            else:
                glue_next = True
            quote_open = not quote_open
        if out and not attach:
            out.append(" ")
        out.append(w)
    return "".join(out)


def yield_text(node: ParseTree) -> str:
    return detokenize(node.words)


def ensure_root(tree: ParseTree) -> ParseTree:
    if tree.label == "ROOT":
        return tree
    return ParseTree("ROOT", (tree,))


def read_tree_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield the non-blank, non-comment lines of a one-tree-per-line file."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line
