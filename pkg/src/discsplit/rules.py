"""Rule catalog: loading, the shipped inventory, and single-step application."""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from importlib import resources

from .extractors import EXTRACTORS, TEMPLATES, ConstituencyType, Structure, deletable
from .lexicon import CuePhrase
from .pattern import Pattern, PatternSyntaxError, compile as compile_pattern, iter_matches
from .rephrase import finish_sentence
from .tree import ParseTree, Token, ensure_root

__all__ = [
    "Rule",
    "Part",
    "RuleApplication",
    "CatalogError",
    "ExtractionFailure",
    "RuleInvariantError",
    "load_catalog",
    "default_catalog_text",
    "inventory",
    "apply",
]


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class ExtractionFailure(RuntimeError):
    """A pattern matched but one of the captures the extractor needs is empty."""


class RuleInvariantError(RuntimeError):
    """An application broke type discipline or lexical accounting."""


@dataclass(frozen=True)
class Rule:
    name: str
    pattern: Pattern
    structure: Structure
    priority: int
    extractor: str
    template: str
    cue_capture: str | None = None


@dataclass(frozen=True)
class Part:
    tree: ParseTree
    type: ConstituencyType
    inserted: tuple[str, ...] = ()

    @property
    def text(self) -> str:
        return finish_sentence(self.tree.words)


@dataclass(frozen=True)
class RuleApplication:
    rule_name: str
    structure: Structure
    parts: tuple[Part, ...]
    cue: CuePhrase
    deleted: tuple[str, ...] = ()
    clause_initial: bool = False

    def accounting_holds(self, input_tree: ParseTree) -> bool:
        """input + inserted == parts + cue + deleted, as token multisets."""
        lhs = Counter(input_tree.words)
        rhs = Counter(self.deleted) + Counter(t.text for t in self.cue.tokens)
        for p in self.parts:
            lhs.update(p.inserted)
            rhs.update(p.tree.words)
        return lhs == rhs

    def type_discipline_holds(self) -> bool:
        n_context = sum(p.type is ConstituencyType.CONTEXT for p in self.parts)
        if self.structure is Structure.SUBORDINATION:
            return len(self.parts) == 2 and n_context == 1
        return len(self.parts) >= 2 and n_context == 0


# ---------------------------------------------------------------- catalog

def load_catalog(source: str) -> list[Rule]:
    """Parse catalog records ``name | STRUCTURE | pattern | extractor | template | cue``.

    Fields are separated by `` | `` (a bar with spaces around it) so that label
    disjunctions inside the pattern keep their bare ``|``.
    """
    rules: list[Rule] = []
    names = set()
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(" | ")]
        if len(fields) != 6:
            raise CatalogError(f"expected 6 fields, got {len(fields)}", lineno)
        name, structure, src, ext_id, template, cue = fields
        if not name or name in names:
            raise CatalogError(f"missing or duplicate rule name {name!r}", lineno)
        try:
            struct = Structure[structure]
        except KeyError:
            raise CatalogError(f"unknown structure {structure!r}", lineno) from None
        try:
            pattern = compile_pattern(src)
        except PatternSyntaxError as exc:
            raise CatalogError(f"pattern does not compile: {exc}", lineno) from None
        ext = EXTRACTORS.get(ext_id)
        if ext is None:
            raise CatalogError(f"unknown extractor {ext_id!r}", lineno)
        if ext.structure is not struct:
            raise CatalogError(f"extractor {ext_id} produces {ext.structure.value}", lineno)
        if template not in TEMPLATES:
            raise CatalogError(f"unknown template {template!r}", lineno)
        if template != ext.template:
            raise CatalogError(f"extractor {ext_id} inserts per template {ext.template!r}", lineno)
        missing = ext.captures - set(pattern.captures)
        if missing:
            raise CatalogError(f"pattern lacks captures {sorted(missing)}", lineno)
        cue_capture = None if cue == "-" else cue
        if cue_capture is not None and cue_capture not in pattern.captures:
            raise CatalogError(f"cue capture {cue!r} not in pattern", lineno)
        names.add(name)
        rules.append(Rule(name, pattern, struct, len(rules) + 1, ext_id, template, cue_capture))
    return rules


def default_catalog_text() -> str:
    return resources.files("discsplit").joinpath("data/rules.catalog").read_text(encoding="utf-8")


@functools.lru_cache(maxsize=1)
def _default_rules() -> tuple[Rule, ...]:
    return tuple(load_catalog(default_catalog_text()))


def inventory() -> list[Rule]:
    """The shipped rules in priority order."""
    return list(_default_rules())


# ---------------------------------------------------------------- application

def _sentence(tree: ParseTree) -> ParseTree:
    return ensure_root(tree).reindexed()


def _within(cue: tuple[Token, ...], node: ParseTree) -> bool:
    idx = {t.index for t in node.tokens}
    return all(t.index in idx for t in cue)


def apply(rule: Rule, tree: ParseTree) -> RuleApplication | None:
    """Split ``tree`` with ``rule`` at the first match site the extractor accepts.

    Returns None when the pattern does not match or every site is declined,
    including sites whose split would not make every part shorter.
    """
    tree = ensure_root(tree)
    n = len(tree)
    ext = EXTRACTORS[rule.extractor]
    for m in iter_matches(rule.pattern, tree):
        for name in ext.captures:
            node = m[name]
            if not isinstance(node, ParseTree) or not node.tokens:
                raise ExtractionFailure(f"{rule.name}: capture {name!r} has no constituent yield")
        draft = ext.fn(tree, m)
        if draft is None:
            continue
        parts = tuple(Part(_sentence(t), typ, ins) for t, typ, ins in draft.parts)
        if any(len(p.tree) >= n for p in parts):
            continue
        if not all(deletable(d) for d in draft.deleted):
            continue
        if rule.cue_capture is not None and not _within(draft.cue, m[rule.cue_capture]):
            continue
        app = RuleApplication(
            rule.name,
            rule.structure,
            parts,
            CuePhrase(tuple(draft.cue), draft.origin),
            tuple(d.token.text for d in draft.deleted),
            draft.clause_initial,
        )
        if not app.type_discipline_holds():
            raise RuleInvariantError(f"{rule.name}: wrong constituency types for {rule.structure.value}")
        if not app.accounting_holds(tree):
            raise RuleInvariantError(f"{rule.name}: lexical accounting failed on {' '.join(tree.words)!r}")
        return app
    return None
