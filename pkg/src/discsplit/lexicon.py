"""Cue-phrase lexicon mapping discourse markers to rhetorical relations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

__all__ = [
    "RhetoricalRelation",
    "CueOrigin",
    "Position",
    "CuePhrase",
    "LexiconEntry",
    "Lexicon",
    "LexiconError",
    "DuplicateEntry",
    "UnknownRelationName",
    "MalformedLine",
    "load_lexicon",
    "default_lexicon",
    "COORDINATION_RELATIONS",
    "SUBORDINATION_RELATIONS",
]


class RhetoricalRelation(str, enum.Enum):
    ELABORATION = "ELABORATION"
    CONTRAST = "CONTRAST"
    CONDITION = "CONDITION"
    BACKGROUND = "BACKGROUND"
    CAUSE = "CAUSE"
    RESULT = "RESULT"
    LIST = "LIST"
    DISJUNCTION = "DISJUNCTION"
    PURPOSE = "PURPOSE"
    TEMPORAL_BEFORE = "TEMPORAL_BEFORE"
    TEMPORAL_AFTER = "TEMPORAL_AFTER"
    ATTRIBUTION = "ATTRIBUTION"
    UNKNOWN_SUBORDINATION = "UNKNOWN_SUBORDINATION"
    UNKNOWN_COORDINATION = "UNKNOWN_COORDINATION"

    def __str__(self):
        return self.value


R = RhetoricalRelation

COORDINATION_RELATIONS = frozenset({
    R.LIST, R.CONTRAST, R.DISJUNCTION, R.CAUSE, R.RESULT,
    R.TEMPORAL_BEFORE, R.TEMPORAL_AFTER, R.UNKNOWN_COORDINATION,
})
SUBORDINATION_RELATIONS = frozenset(set(R) - {R.LIST, R.DISJUNCTION, R.UNKNOWN_COORDINATION})


class CueOrigin(str, enum.Enum):
    SUBORDINATOR = "SUBORDINATOR"
    COORDINATOR = "COORDINATOR"
    RELATIVE_PRONOUN = "RELATIVE_PRONOUN"
    PUNCTUATION = "PUNCTUATION"
    NONE = "NONE"


class Position(str, enum.Enum):
    CLAUSE_INITIAL = "CLAUSE_INITIAL"
    ANY = "ANY"


@dataclass(frozen=True)
class CuePhrase:
    """Lexical marker removed from the input by a split, with its syntactic source."""

    tokens: tuple = ()
    syntactic_origin: CueOrigin = CueOrigin.NONE

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(t.text.lower() for t in self.tokens)

    @property
    def text(self) -> str:
        return " ".join(t.text for t in self.tokens)


@dataclass(frozen=True)
class LexiconEntry:
    cue: tuple[str, ...]
    required_origin: CueOrigin | None  # None = ANY
    position_constraint: Position
    relation: RhetoricalRelation

    @property
    def specificity(self) -> int:
        return len(self.cue)

    @property
    def key(self):
        return (self.cue, self.required_origin, self.position_constraint)

    def fires(self, words: Sequence[str], origin: CueOrigin, clause_initial: bool) -> bool:
        if self.required_origin is not None and self.required_origin != origin:
            return False
        if self.position_constraint is Position.CLAUSE_INITIAL and not clause_initial:
            return False
        n = len(self.cue)
        return any(tuple(words[i:i + n]) == self.cue for i in range(len(words) - n + 1))


class LexiconError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class DuplicateEntry(LexiconError):
    pass


class UnknownRelationName(LexiconError):
    pass


class MalformedLine(LexiconError):
    pass


def load_lexicon(source: str) -> list[LexiconEntry]:
    """Parse ``cue|origin|position|RELATION`` lines; ``#`` starts a comment line."""
    entries: list[LexiconEntry] = []
    seen = set()
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 4 or not fields[0]:
            raise MalformedLine(f"expected 4 '|'-separated fields: {raw!r}", lineno)
        cue, origin, position, relation = fields
        try:
            rel = RhetoricalRelation[relation]
        except KeyError:
            raise UnknownRelationName(f"unknown relation {relation!r}", lineno) from None
        try:
            org = None if origin == "ANY" else CueOrigin[origin]
            pos = Position[position]
        except KeyError as exc:
            raise MalformedLine(f"bad origin/position {exc.args[0]!r}", lineno) from None
        entry = LexiconEntry(tuple(cue.lower().split()), org, pos, rel)
        if entry.key in seen:
            raise DuplicateEntry(f"duplicate entry for {cue!r}", lineno)
        seen.add(entry.key)
        entries.append(entry)
    return entries


class Lexicon:
    """Ordered cue-phrase table; the longest matching cue wins, then file order."""

    def __init__(self, entries: Iterable[LexiconEntry]):
        self.entries = tuple(entries)

    @classmethod
    def from_file(cls, path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls(load_lexicon(fh.read()))

    def lookup(self, cue: CuePhrase, clause_initial: bool = False) -> LexiconEntry | None:
        words = cue.words
        if not words:
            return None
        best = None
        for entry in self.entries:
            if entry.fires(words, cue.syntactic_origin, clause_initial):
                if best is None or entry.specificity > best.specificity:
                    best = entry
        return best

    def classify_subordination(self, cue: CuePhrase, clause_initial: bool = False) -> RhetoricalRelation:
        entry = self.lookup(cue, clause_initial)
        if entry is not None and entry.relation in SUBORDINATION_RELATIONS:
            return entry.relation
        if not cue.tokens and cue.syntactic_origin is not CueOrigin.SUBORDINATOR:
            # relative clauses, participles, appositions and parentheticals
            return R.ELABORATION
        return R.UNKNOWN_SUBORDINATION

    def classify_coordination(self, cue: CuePhrase) -> RhetoricalRelation:
        if not cue.tokens:
            return R.LIST
        entry = self.lookup(cue)
        if entry is not None and entry.relation in COORDINATION_RELATIONS:
            return entry.relation
        return R.UNKNOWN_COORDINATION


def default_lexicon_text() -> str:
    return resources.files("discsplit").joinpath("data/lexicon.txt").read_text(encoding="utf-8")


def default_lexicon() -> Lexicon:
    return Lexicon(load_lexicon(default_lexicon_text()))
