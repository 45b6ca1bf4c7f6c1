"""Turning extracted constituents back into stand-alone sentences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tree import ParseTree, Token, detokenize

__all__ = ["Insertion", "rephrase", "finish_sentence", "referent_np", "copula_sentence", "decapitalize", "is_plural", "DETERMINERS"]

EDGE_PUNCT = {",", ";", ":", "--", "-"}
TERMINAL = {".", "?", "!"}
DETERMINERS = {"a", "an", "the", "this", "that", "these", "those", "some", "any"}


@dataclass(frozen=True)
class Insertion:
    """What a template adds in front of a part.

    ``referent`` is prefixed by this/these (``plural`` picks which), followed by
    ``copula`` when given.  ``subject`` and ``auxiliaries`` are copied verbatim,
    e.g. for the second conjunct of a coordinated verb phrase.
    """

    referent: tuple[str, ...] = ()
    copula: str | None = None
    subject: tuple[str, ...] = ()
    auxiliaries: tuple[str, ...] = ()
    plural: bool = False

    def prefix(self) -> list[str]:
        out: list[str] = []
        if self.referent or self.copula:
            out.append("these" if self.plural else "this")
            out.extend(self.referent)
            if self.copula:
                out.append(self.copula)
        out.extend(self.subject)
        out.extend(self.auxiliaries)
        return out


def _repair(words: Sequence[str]) -> list[str]:
    words = [w for w in words if w]
    while words and words[0] in EDGE_PUNCT:
        words.pop(0)
    end = []
    while words and words[-1] in TERMINAL | EDGE_PUNCT:
        w = words.pop()
        if w in TERMINAL and not end:
            end.append(w)
    out: list[str] = []
    for w in words:
        if w in EDGE_PUNCT and out and out[-1] in EDGE_PUNCT:
            continue
        out.append(w)
    return out + (end or ["."])


def finish_sentence(words: Sequence[str]) -> str:
    """Detokenize, drop dangling edge punctuation, capitalize, end with a period."""
    text = detokenize(_repair(words))
    for i, c in enumerate(text):
        if c.isalpha():
            return text[:i] + c.upper() + text[i + 1:]
    return text


def rephrase(part_tokens: Sequence[str], template: Insertion | None = None) -> str:
    tokens = [t.text if isinstance(t, Token) else t for t in part_tokens]
    if template is not None:
        tokens = template.prefix() + tokens
    return finish_sentence(tokens)


# ---------------------------------------------------------------- tree helpers

def _noun_head(np: ParseTree) -> ParseTree | None:
    if np.token is not None:
        return np if np.label.startswith("NN") or np.label == "PRP" else None
    kids = np.children
    nouns = [k for k in kids if k.token is not None and (k.label.startswith("NN") or k.label in ("PRP", "CD"))]
    if nouns:
        return nouns[-1]
    for k in kids:
        if k.label == "NP":
            return _noun_head(k)
    return None


def is_plural(np: ParseTree) -> bool:
    if any(k.label == "CC" for k in np.children):
        return True
    head = _noun_head(np)
    if head is None:
        return False
    if head.label in ("NNS", "NNPS"):
        return True
    return head.label == "PRP" and head.token.text.lower() in {"we", "they", "you", "us", "them"}


def _strip_edges(tree: ParseTree) -> ParseTree:
    pre = list(tree.preterminals())
    drop = set()
    for p in pre:
        if p.label in {",", ":", "."}:
            drop.add(id(p))
        else:
            break
    for p in reversed(pre):
        if p.label in {",", ":", "."}:
            drop.add(id(p))
        else:
            break
    if not drop:
        return tree

    def walk(node):
        if node.token is not None:
            return None if id(node) in drop else node
        kids = tuple(k for k in (walk(c) for c in node.children) if k is not None)
        return ParseTree(node.label, kids) if kids else None

    return walk(tree) or tree


def referent_np(head: ParseTree) -> tuple[ParseTree, bool]:
    """Copy of ``head`` usable as a new subject, with its article turned into this/these.

    Returns the referent tree and whether it is plural.
    """
    plural = is_plural(head)
    head = _strip_edges(head)
    pre = list(head.preterminals())
    first = pre[0]
    replaced = {}
    if first.label == "DT" and first.token.text.lower() in DETERMINERS:
        replaced[id(first)] = ParseTree("DT", (), Token("these" if plural else "this", 0))
    elif not first.label.startswith("NNP") and first.token.text != "I" and first.token.text[:1].isupper():
        replaced[id(first)] = ParseTree(first.label, (), Token(first.token.text.lower(), 0))

    def walk(node):
        if node.token is not None:
            return replaced.get(id(node), node)
        return ParseTree(node.label, tuple(walk(c) for c in node.children))

    out = walk(head)
    if head.label != "NP":
        out = ParseTree("NP", (out,))
    return out, plural


def decapitalize(tree: ParseTree) -> ParseTree:
    """Lowercase a sentence-initial word that is about to move inside a sentence."""
    first = next(tree.preterminals())
    text = first.token.text
    if first.label.startswith("NNP") or text == "I" or not text[:1].isupper() or text.isupper() and len(text) > 1:
        return tree

    def walk(node):
        if node is first:
            return ParseTree(node.label, (), Token(text.lower(), node.token.index))
        if node.token is not None:
            return node
        return ParseTree(node.label, tuple(walk(c) for c in node.children))

    return walk(tree)


def copula(plural: bool, past: bool = False) -> ParseTree:
    if past:
        return ParseTree("VBD", (), Token("were" if plural else "was", 0))
    return ParseTree("VBP" if plural else "VBZ", (), Token("are" if plural else "is", 0))


def copula_sentence(subject: ParseTree, predicate: ParseTree, plural: bool, past: bool = False) -> ParseTree:
    """``subject is predicate`` as an S tree."""
    return ParseTree("S", (subject, ParseTree("VP", (copula(plural, past), predicate))))


def this_np() -> ParseTree:
    return ParseTree("NP", (ParseTree("DT", (), Token("this", 0)),))
