"""Split-and-rephrase procedures behind the rule catalog.

Each extractor receives the ROOT-wrapped input tree and one set of match
bindings and returns a :class:`Draft` (the split parts, the cue phrase, and
the tokens it deleted) or ``None`` when the construction at that match site is
not one it can split safely.  Extractors never mutate the input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from .lexicon import CueOrigin
from .pattern import MatchBindings
from .rephrase import copula_sentence, decapitalize, referent_np, this_np
from .tree import ParseTree, Token

__all__ = [
    "ConstituencyType",
    "Structure",
    "Draft",
    "EXTRACTORS",
    "TEMPLATES",
    "PUNCT_TAGS",
    "deletable",
]


class ConstituencyType(str, enum.Enum):
    CORE = "CORE"
    CONTEXT = "CONTEXT"


class Structure(str, enum.Enum):
    SUBORDINATION = "SUBORDINATION"
    COORDINATION = "COORDINATION"


CORE, CONTEXT = ConstituencyType.CORE, ConstituencyType.CONTEXT

PUNCT_TAGS = {",", ":", ".", "-LRB-", "-RRB-", "``", "''"}
# function words a split may drop besides punctuation and conjunctions
_DELETABLE_WORDS = {("IN", "that"), ("RB", "then"), ("DT", "both"), ("DT", "either"), ("DT", "neither")}


def deletable(pre: ParseTree) -> bool:
    """The catalog-wide set of tokens a rule may delete."""
    return pre.label in PUNCT_TAGS or pre.label == "CC" or (pre.label, pre.token.text.lower()) in _DELETABLE_WORDS


@dataclass
class Draft:
    parts: list[tuple[ParseTree, ConstituencyType, tuple[str, ...]]]
    cue: tuple[Token, ...] = ()
    origin: CueOrigin = CueOrigin.NONE
    deleted: list[ParseTree] = field(default_factory=list)
    clause_initial: bool = False


# ---------------------------------------------------------------- helpers

def leaf(tag: str, word: str) -> ParseTree:
    return ParseTree(tag, (), Token(word, 0))


def parent_path(path):
    return path[:-1]


def on_spine(tree: ParseTree, top: tuple, path: tuple) -> bool:
    """Every node strictly between ``top`` and ``path`` is a VP."""
    for n in range(len(top) + 1, len(path)):
        if tree.subtree(path[:n]).label != "VP":
            return False
    return True


def postposed(tree: ParseTree, top: tuple, path: tuple) -> bool:
    """Attached after the verb: inside the VP spine, or a clause child after a VP."""
    if not on_spine(tree, top, path) or len(path) <= len(top):
        return False
    if len(path) > len(top) + 1:
        return True
    kids = tree.subtree(top).children
    return any(k.label == "VP" for k in kids[:path[-1]])


def remove(tree: ParseTree, path: tuple) -> tuple[ParseTree | None, list[ParseTree]]:
    """Drop the node at ``path`` together with the commas that set it off."""
    parent = tree.subtree(path[:-1])
    k = path[-1]
    kids = parent.children
    drop = [path]
    deleted: list[ParseTree] = []
    left = k > 0 and kids[k - 1].label == ","
    if left:
        drop.append(path[:-1] + (k - 1,))
        deleted.append(kids[k - 1])
    if k + 1 < len(kids) and kids[k + 1].label == "," and (left or k == 0):
        drop.append(path[:-1] + (k + 1,))
        deleted.append(kids[k + 1])
    return tree.without(drop), deleted


def preterminals(node: ParseTree) -> list[ParseTree]:
    return list(node.preterminals())


def texts(node: ParseTree | None) -> tuple[str, ...]:
    return tuple(node.words) if node is not None else ()


def main_verb(vp: ParseTree) -> ParseTree | None:
    """First verb-like preterminal along the VP spine."""
    node = vp
    while node is not None and node.token is None:
        nxt = None
        for k in node.children:
            if k.token is not None and (k.label.startswith("VB") or k.label == "MD"):
                return k
            if nxt is None and k.label == "VP":
                nxt = k
        node = nxt
    return None


def clause_is_past(top: ParseTree) -> bool:
    vp = next((k for k in top.children if k.label == "VP"), None)
    verb = main_verb(vp) if vp is not None else None
    return verb is not None and verb.label == "VBD"


def cue_before(node: ParseTree, stop_labels) -> tuple[int, list[ParseTree]] | None:
    """Index of the first child labelled in ``stop_labels`` and the children before it."""
    for i, k in enumerate(node.children):
        if k.label in stop_labels:
            return i, list(node.children[:i])
    return None


def tokens_of(nodes) -> tuple[Token, ...]:
    out: list[Token] = []
    for n in nodes:
        out.extend(n.tokens)
    return tuple(out)


# ---------------------------------------------------------------- templates
# A template names the kind of material an extractor inserts; the catalog pairs
# each rule with exactly one.

TEMPLATES = {
    "none": "no insertion",
    "shared_context": "copy the material shared by all conjuncts into every part",
    "referent_gap": "fill the relative-clause gap with this/these + antecedent",
    "referent_copula": "this/these + antecedent + is/are before the phrase",
    "attribution": "source + reporting verb + this",
    "this_copula": "this + is/was before the phrase",
}


# ---------------------------------------------------------------- extractors

def coordinate_clauses(tree, m: MatchBindings) -> Draft | None:
    top = m["top"]
    conj_idx = [i for i, k in enumerate(top.children) if k.label == "S"]
    others = [k for k in top.children if k.label != "S"]
    if len(conj_idx) < 2 or any(k.label not in PUNCT_TAGS | {"CC"} for k in others):
        return None
    first, last = conj_idx[0], conj_idx[-1]
    if any(k.label == "CC" for k in top.children[last + 1:]):
        return None
    ccs = [k for k in top.children[first:last] if k.label == "CC"]
    cue = ccs[0].tokens if ccs else ()
    origin = CueOrigin.COORDINATOR if ccs else CueOrigin.PUNCTUATION
    deleted = [p for k in others for p in preterminals(k) if not (ccs and p is ccs[0])]
    parts = [(top.children[i], CORE, ()) for i in conj_idx]
    return Draft(parts, cue, origin, deleted)


def _replace_with_conjuncts(tree, conj_path, conj: ParseTree, label: str, cc: ParseTree):
    members = [k for k in conj.children if k.label == label]
    others = [k for k in conj.children if k.label != label]
    if len(members) < 2 or any(k.label not in {"CC", ",", ":"} and not (k.token and deletable(k)) for k in others):
        return None
    outside = [t.text for t in tree.tokens]
    for t in conj.tokens:
        outside.remove(t.text)
    parts = []
    for n, member in enumerate(members):
        part = tree.replace(conj_path, member)
        parts.append((part, CORE, tuple(outside) if n else ()))
    deleted = [p for k in others for p in preterminals(k) if p is not cc]
    return Draft(parts, cc.tokens, CueOrigin.COORDINATOR, deleted)


def conjoined_vp(tree, m: MatchBindings) -> Draft | None:
    conj_path = m.path("conj")
    if not on_spine(tree, m.path("clause"), conj_path):
        return None
    conj = m["conj"]
    if m.path("cc")[:-1] != conj_path:
        return None
    return _replace_with_conjuncts(tree, conj_path, conj, "VP", m["cc"])


_RECIPROCAL = {"met", "married", "agreed", "collided", "fought", "disagreed", "divorced", "merged", "differed"}


def coordinate_np(tree, m: MatchBindings) -> Draft | None:
    subj = m["subj"]
    verb = main_verb(m["vp"])
    if verb is None or verb.label not in {"VBD", "MD"} or verb.token.text.lower() in _RECIPROCAL:
        return None
    if {"together", "each", "both", "between", "other"} & {w.lower() for w in m["vp"].words}:
        return None
    if m.path("cc")[:-1] != m.path("subj"):
        return None
    return _replace_with_conjuncts(tree, m.path("subj"), subj, "NP", m["cc"])


_ATTRIBUTION_VERBS = {
    "said", "says", "say", "reported", "reports", "claimed", "claims", "stated", "states",
    "announced", "argued", "argues", "explained", "noted", "added", "believes", "believed", "warned",
}


def attribution(tree, m: MatchBindings) -> Draft | None:
    top, vp, verb, content = m["top"], m["vp"], m["verb"], m["content"]
    if verb.token.text.lower() not in _ATTRIBUTION_VERBS:
        return None
    vp_kids = vp.children
    if vp_kids[0] is not verb or any(k is not verb and k is not content and k.label != "," for k in vp_kids):
        return None
    if any(k.label not in PUNCT_TAGS for k in top.children if k is not m["source"] and k is not vp):
        return None
    deleted = [p for k in top.children if k.label in PUNCT_TAGS for p in preterminals(k)]
    deleted += [k for k in vp_kids if k.label == ","]
    if content.label == "SBAR":
        comp = content.children
        if len(comp) != 2 or comp[1].label != "S" or comp[0].label != "IN" or comp[0].token.text.lower() != "that":
            return None
        deleted.append(comp[0])
        content = comp[1]
    source = m["source"]
    satellite = ParseTree("S", (source, ParseTree("VP", (verb, this_np()))))
    inserted = (verb.token.text, "this")
    parts = [(content, CORE, ()), (satellite, CONTEXT, inserted)]
    return Draft(parts, verb.tokens, CueOrigin.NONE, deleted)


_EXCLUDED_SUBORDINATORS = {"that", "whether", "than", "how", "what", "why", "who", "which", "whom", "whose"}


def _adverbial(tree, m: MatchBindings, preposed: bool, structure: Structure) -> Draft | None:
    top_path, adv_path = m.path("top"), m.path("adv")
    adv = m["adv"]
    split = cue_before(adv, {"S"})
    if split is None:
        return None
    i, cue_nodes = split
    if not cue_nodes or i != len(adv.children) - 1:
        return None
    if any(k.label not in {"IN", "WHADVP", "RB", "ADVP"} for k in cue_nodes):
        return None
    cue = tokens_of(cue_nodes)
    if cue[0].text.lower() in _EXCLUDED_SUBORDINATORS:
        return None
    if preposed:
        if len(adv_path) != len(top_path) + 1:
            return None
    elif not postposed(tree, top_path, adv_path):
        return None
    inner = adv.children[i]
    core, deleted = remove(tree, adv_path)
    if core is None:
        return None
    if preposed:
        # "If X, then Y": the resumptive "then" goes with the subordinate clause
        top = core.subtree(top_path)
        k = adv_path[-1]
        if k < len(top.children) and top.children[k].label == "ADVP" and [w.lower() for w in top.children[k].words] == ["then"]:
            deleted.extend(preterminals(top.children[k]))
            core = core.without([top_path + (k,)])
    ctx_type = CONTEXT if structure is Structure.SUBORDINATION else CORE
    return Draft([(core, CORE, ()), (inner, ctx_type, ())], cue, CueOrigin.SUBORDINATOR, deleted, clause_initial=preposed)


def preposed_adverbial(tree, m):
    return _adverbial(tree, m, True, Structure.SUBORDINATION)


def postposed_adverbial(tree, m):
    return _adverbial(tree, m, False, Structure.SUBORDINATION)


def contrast_clause(tree, m):
    return _adverbial(tree, m, False, Structure.COORDINATION)


def _insert_after_verb(body: ParseTree, referent: ParseTree) -> ParseTree | None:
    """Put ``referent`` into the object gap of a relative clause body."""
    vp_path = next((i for i, k in enumerate(body.children) if k.label == "VP"), None)
    if vp_path is None:
        return None
    path = (vp_path,)
    node = body.children[vp_path]
    while True:
        deeper = next((i for i, k in enumerate(node.children) if k.label == "VP"), None)
        if deeper is None:
            break
        path += (deeper,)
        node = node.children[deeper]
    kids = list(node.children)
    # stranded preposition: "the house that he lives in"
    for i, k in enumerate(kids):
        if k.label == "PP" and len(k.children) == 1 and k.children[0].label in {"IN", "TO"}:
            pp = ParseTree("PP", (k.children[0], referent))
            return body.replace(path + (i,), pp)
    verb_i = next((i for i, k in enumerate(kids) if k.token is not None and k.label.startswith("VB")), None)
    if verb_i is None:
        return None
    kids.insert(verb_i + 1, referent)
    return body.replace(path, ParseTree(node.label, tuple(kids)))


def relative_clause(tree, m: MatchBindings) -> Draft | None:
    wh, body, head = m["wh"], m["body"], m["head"]
    if len(wh.tokens) != 1 or wh.tokens[0].text.lower() not in {"who", "which", "that", "whom"}:
        return None
    rel = m["rel"]
    if len(rel.children) != 2:
        return None
    referent, plural = referent_np(head)
    labels = [k.label for k in body.children]
    if "VP" not in labels:
        return None
    has_subject = "NP" in labels[:labels.index("VP")]
    if has_subject:
        context = _insert_after_verb(body, referent)
        if context is None:
            return None
    else:
        context = ParseTree("S", (referent,) + body.children)
    core, deleted = remove(tree, m.path("rel"))
    if core is None:
        return None
    return Draft([(core, CORE, ()), (context, CONTEXT, tuple(referent.words))], wh.tokens,
                 CueOrigin.RELATIVE_PRONOUN, deleted)


def _between_only_commas(np: ParseTree, a: ParseTree, b: ParseTree) -> bool:
    kids = list(np.children)
    ia = next(i for i, k in enumerate(kids) if k is a)
    ib = next(i for i, k in enumerate(kids) if k is b)
    return all(k.label == "," for k in kids[ia + 1:ib])


def participial(tree, m: MatchBindings) -> Draft | None:
    np, head, mod = m["np"], m["head"], m["mod"]
    if not _between_only_commas(np, head, mod):
        return None
    first = mod.children[0]
    if first.label not in {"VBN", "VBG"}:
        return None
    if any(k.label not in {","} for k in np.children if k is not head and k is not mod):
        return None
    referent, plural = referent_np(head)
    context = copula_sentence(referent, mod, plural)
    core, deleted = remove(tree, m.path("mod"))
    if core is None:
        return None
    # "A, known as B, is ..." leaves the closing comma behind
    return Draft([(core, CORE, ()), (context, CONTEXT, tuple(referent.words) + (context.children[1].children[0].token.text,))],
                 (), CueOrigin.NONE, deleted)


def appositive(tree, m: MatchBindings) -> Draft | None:
    np, head, app = m["np"], m["head"], m["app"]
    labels = [k.label for k in np.children]
    if labels not in (["NP", ",", "NP"], ["NP", ",", "NP", ","]) or np.children[0] is not head:
        return None
    app_tags = app.tags
    if not any(t.startswith("NN") for t in app_tags) or "CC" in app_tags:
        return None
    if all(t.startswith("NNP") or t in PUNCT_TAGS for t in head.tags + app_tags):
        return None  # "Paris, France"
    if all(t in {"CD", ","} for t in app_tags) or all(t in {"CD", ","} for t in head.tags):
        return None
    referent, plural = referent_np(head)
    context = copula_sentence(referent, app, plural)
    core, deleted = remove(tree, m.path("app"))
    if core is None:
        return None
    inserted = tuple(referent.words) + (context.children[1].children[0].token.text,)
    return Draft([(core, CORE, ()), (context, CONTEXT, inserted)], (), CueOrigin.PUNCTUATION, deleted)


_CONTROL_VERBS = {
    "want", "wants", "wanted", "try", "tries", "tried", "ask", "asks", "asked", "tell", "tells", "told",
    "allow", "allows", "allowed", "force", "forced", "order", "ordered", "encourage", "encouraged",
    "persuade", "persuaded", "require", "requires", "required", "urge", "urged", "help", "helps", "helped",
    "expect", "expects", "expected", "cause", "caused", "enable", "enables", "enabled", "invite", "invited",
    "permit", "permitted", "advise", "advised", "remind", "reminded", "teach", "taught", "decide", "decided",
    "plan", "plans", "planned", "hope", "hopes", "hoped", "need", "needs", "needed", "agree", "agreed",
    "refuse", "refused", "fail", "failed", "begin", "began", "start", "started", "continue", "continued",
    "seem", "seems", "seemed", "appear", "appeared", "have", "has", "had", "use", "used", "going", "like",
    "likes", "liked", "love", "loved", "prefer", "preferred", "promise", "promised", "manage", "managed",
    "is", "was", "are", "were", "be", "been", "able", "due", "likely",
}


def purpose(tree, m: MatchBindings) -> Draft | None:
    top_path, purp_path = m.path("top"), m.path("purp")
    inf = m["inf"]
    to = inf.children[0]
    if to.label != "TO" or len(inf.children) != 2:
        return None
    parent = tree.subtree(purp_path[:-1])
    removed_path = purp_path
    cue_nodes = [to]
    if parent.label in {"SBAR", "NP"}:
        # "in order to": (SBAR (IN in) (NN order) (S ...)) or (PP (IN in) (NP (NN order) (S ...)))
        words = [w.lower() for w in parent.words[: len(parent.words) - len(m["purp"].words)]]
        holder_path = purp_path[:-1]
        if parent.label == "NP":
            holder_path = holder_path[:-1]
            words = ["in"] + words if tree.subtree(holder_path).words[0].lower() == "in" else words
        if words not in (["in", "order"], ["so", "as"]):
            return None
        holder = tree.subtree(holder_path)
        n_prefix = len(holder.words) - len(m["purp"].words)
        cue_nodes = preterminals(holder)[:n_prefix] + [to]
        removed_path = holder_path
    else:
        if parent.label != "VP" or purp_path[-1] == 0:
            return None
        prev = parent.children[purp_path[-1] - 1]
        if prev.label not in {"NP", "PP", ",", "ADVP"}:
            return None
        verb = main_verb(parent)
        if verb is None or verb.token.text.lower() in _CONTROL_VERBS:
            return None
    if not postposed(tree, top_path, removed_path):
        return None
    core, deleted = remove(tree, removed_path)
    if core is None:
        return None
    past = clause_is_past(m["top"])
    context = ParseTree("S", (this_np(), ParseTree("VP", (
        ParseTree("VBD", (), Token("was", 0)) if past else ParseTree("VBZ", (), Token("is", 0)),
        inf))))
    inserted = ("this", "was" if past else "is", to.token.text)
    return Draft([(core, CORE, ()), (context, CONTEXT, inserted)], tokens_of(cue_nodes), CueOrigin.NONE, deleted)


_PREP_TAGS = {"IN", "TO", "VBG", "RB", "JJ"}


def _prep_cue(pp: ParseTree) -> list[ParseTree] | None:
    split = cue_before(pp, {"NP", "S", "SBAR", "ADJP"})
    if split is None:
        # "according to X" nests a second PP
        if len(pp.children) == 2 and pp.children[0].label == "VBG" and pp.children[1].label == "PP":
            inner = _prep_cue(pp.children[1])
            return [pp.children[0]] + inner if inner else None
        return None
    i, nodes = split
    if not nodes or any(k.label not in _PREP_TAGS for k in nodes):
        return None
    return nodes


def _circumstance(tree, m: MatchBindings, name: str, past: bool) -> Draft | None:
    node = m[name]
    pp = node
    if node.label == "ADVP":
        if not node.children or node.children[-1].label != "PP" or any(
                k.label not in {"RB"} for k in node.children[:-1]):
            return None
        pp = node.children[-1]
    cue_nodes = _prep_cue(pp)
    if cue_nodes is None:
        return None
    core, deleted = remove(tree, m.path(name))
    if core is None:
        return None
    cue = tokens_of(cue_nodes)
    verb = ParseTree("VBD", (), Token("was", 0)) if past else ParseTree("VBZ", (), Token("is", 0))
    context = ParseTree("S", (this_np(), ParseTree("VP", (verb, decapitalize(node)))))
    inserted = ("this", verb.token.text) + tuple(t.text.lower() for t in cue)
    return Draft([(core, CORE, ()), (context, CONTEXT, inserted)], cue, CueOrigin.NONE, deleted,
                 clause_initial=name == "pp")


def preposed_pp(tree, m: MatchBindings) -> Draft | None:
    if len(m.path("pp")) != len(m.path("top")) + 1:
        return None
    return _circumstance(tree, m, "pp", clause_is_past(m["top"]))


def trailing_adjunct(tree, m: MatchBindings) -> Draft | None:
    top_path, adj_path = m.path("top"), m.path("adj")
    if not postposed(tree, top_path, adj_path):
        return None
    parent = tree.subtree(adj_path[:-1])
    if any(k.label not in PUNCT_TAGS for k in parent.children[adj_path[-1] + 1:]):
        return None
    return _circumstance(tree, m, "adj", clause_is_past(m["top"]))


_OPENERS = {"-LRB-", ":"}
_CLOSERS = {"-RRB-", ":"}


def parenthetical(tree, m: MatchBindings) -> Draft | None:
    prn, inner = m["prn"], m["inner"]
    kids = prn.children
    if len(kids) not in (2, 3) or kids[0].label not in _OPENERS or kids[1] is not inner:
        return None
    if len(kids) == 3 and kids[2].label not in _CLOSERS:
        return None
    prn_path = m.path("prn")
    host = tree.subtree(prn_path[:-1])
    k = prn_path[-1]
    if inner.label == "S":
        context = inner
        inserted: tuple[str, ...] = ()
    elif inner.label == "NP" and k > 0 and host.children[k - 1].label == "NP":
        referent, plural = referent_np(host.children[k - 1])
        context = copula_sentence(referent, inner, plural)
        inserted = tuple(referent.words) + (context.children[1].children[0].token.text,)
    else:
        context = copula_sentence(this_np(), inner, False)
        inserted = ("this", "is")
    core = tree.without([prn_path])
    if core is None:
        return None
    deleted = [k for k in kids if k is not inner]
    return Draft([(core, CORE, ()), (context, CONTEXT, inserted)], (), CueOrigin.PUNCTUATION, deleted)


@dataclass(frozen=True)
class Extractor:
    fn: Callable[[ParseTree, MatchBindings], Draft | None]
    structure: Structure
    captures: frozenset[str]
    template: str


EXTRACTORS: dict[str, Extractor] = {
    "coordinate_clauses": Extractor(coordinate_clauses, Structure.COORDINATION, frozenset({"top"}), "none"),
    "conjoined_vp": Extractor(conjoined_vp, Structure.COORDINATION, frozenset({"clause", "conj", "cc"}), "shared_context"),
    "attribution": Extractor(attribution, Structure.SUBORDINATION,
                             frozenset({"top", "source", "vp", "verb", "content"}), "attribution"),
    "contrast_clause": Extractor(contrast_clause, Structure.COORDINATION, frozenset({"top", "adv"}), "none"),
    "preposed_adverbial": Extractor(preposed_adverbial, Structure.SUBORDINATION, frozenset({"top", "adv"}), "none"),
    "postposed_adverbial": Extractor(postposed_adverbial, Structure.SUBORDINATION, frozenset({"top", "adv"}), "none"),
    "relative_clause": Extractor(relative_clause, Structure.SUBORDINATION,
                                 frozenset({"head", "rel", "wh", "body"}), "referent_gap"),
    "participial": Extractor(participial, Structure.SUBORDINATION, frozenset({"np", "head", "mod"}), "referent_copula"),
    "appositive": Extractor(appositive, Structure.SUBORDINATION, frozenset({"np", "head", "app"}), "referent_copula"),
    "purpose": Extractor(purpose, Structure.SUBORDINATION, frozenset({"top", "purp", "inf"}), "this_copula"),
    "preposed_pp": Extractor(preposed_pp, Structure.SUBORDINATION, frozenset({"top", "pp"}), "this_copula"),
    "parenthetical": Extractor(parenthetical, Structure.SUBORDINATION, frozenset({"prn", "inner"}), "referent_copula"),
    "coordinate_np": Extractor(coordinate_np, Structure.COORDINATION, frozenset({"subj", "cc", "vp"}), "shared_context"),
    "trailing_adjunct": Extractor(trailing_adjunct, Structure.SUBORDINATION, frozenset({"top", "adj"}), "this_copula"),
}
