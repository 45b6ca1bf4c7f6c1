"""Discourse-aware splitting of complex sentences into linked minimal propositions."""

from .lexicon import CuePhrase, Lexicon, RhetoricalRelation, default_lexicon, load_lexicon
from .pattern import compile, match_all, match_first
from .rules import Rule, RuleApplication, apply, inventory, load_catalog
from .serialization import from_json, to_dot, to_flat, to_json
from .simplifier import Coordination, Engine, Leaf, PropositionGraph, Subordination, flatten
from .tree import ParseTree, Token, parse_ptb, serialize

__version__ = "0.1.0"

__all__ = [
    "CuePhrase", "Lexicon", "RhetoricalRelation", "default_lexicon", "load_lexicon",
    "compile", "match_all", "match_first",
    "Rule", "RuleApplication", "apply", "inventory", "load_catalog",
    "from_json", "to_dot", "to_flat", "to_json",
    "Coordination", "Engine", "Leaf", "PropositionGraph", "Subordination", "flatten",
    "ParseTree", "Token", "parse_ptb", "serialize",
]
