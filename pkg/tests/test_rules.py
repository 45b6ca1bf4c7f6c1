import random

import pytest

from discsplit.extractors import ConstituencyType, Structure
from discsplit.pattern import compile
from discsplit.rules import (
    CatalogError,
    ExtractionFailure,
    Rule,
    apply,
    default_catalog_text,
    inventory,
    load_catalog,
)
from discsplit.tree import parse_ptb

from generators import random_sentence_tree

CORE, CONTEXT = ConstituencyType.CORE, ConstituencyType.CONTEXT

KNOWN_AS = (
    "(ROOT (S (NP (NP (DT A) (JJ fluoroscopic) (NN study)) (VP (VBN known) (PP (IN as) (NP (DT an) (JJ upper)"
    " (JJ gastrointestinal) (NN series))))) (VP (VBZ is) (ADVP (RB typically)) (NP (NP (DT the) (JJ next) (NN step))"
    " (PP (IN in) (NP (NN management))))) (. .)))"
)
BARIUM = (
    "(ROOT (S (NP (NP (DT the) (NN usage)) (PP (IN of) (NP (NN barium)))) (VP (MD can) (VP (VP (VB impede)"
    " (NP (JJ surgical) (NN revision))) (CC and) (VP (VB lead) (PP (TO to) (NP (VBN increased) (NN post)"
    " (JJ operative) (NNS complications))))))))"
)


def rule(name):
    return next(r for r in inventory() if r.name == name)


def test_inventory_shape():
    rules = inventory()
    assert len(rules) == 15
    assert rules[0].name == "coordinate_clauses"
    assert [r.priority for r in rules] == list(range(1, 16))
    assert len({r.name for r in rules}) == 15
    assert [r.name for r in inventory()] == [r.name for r in rules]


def test_contrast_rule_on_fluoro(fluoro_tree):
    app = apply(rule("contrast_clause"), fluoro_tree)
    assert app.cue.text == "although"
    first, second = app.parts
    assert first.text == ("A fluoroscopic study known as an upper gastrointestinal series is typically "
                          "the next step in management.")
    assert second.text.startswith("If volvulus is suspected, caution")
    assert app.structure is Structure.COORDINATION


def test_participial_rule():
    app = apply(rule("participial_phrase"), parse_ptb(KNOWN_AS))
    assert [(p.type, p.text) for p in app.parts] == [
        (CORE, "A fluoroscopic study is typically the next step in management."),
        (CONTEXT, "This fluoroscopic study is known as an upper gastrointestinal series."),
    ]


def test_conjoined_vp_rule():
    app = apply(rule("conjoined_vp"), parse_ptb(BARIUM))
    assert app.cue.text == "and"
    assert [p.text for p in app.parts] == [
        "The usage of barium can impede surgical revision.",
        "The usage of barium can lead to increased post operative complications.",
    ]
    assert all(p.type is CORE for p in app.parts)


def test_no_match_returns_none():
    t = parse_ptb("(ROOT (S (NP (NN Volvulus)) (VP (VBZ is) (VP (VBN suspected))) (. .)))")
    assert all(apply(r, t) is None for r in inventory())


@pytest.mark.parametrize("ptb,name,texts", [
    ("(ROOT (S (NP (DT The) (NN senator)) (VP (VBD said) (SBAR (IN that) (S (NP (DT the) (NN bill))"
     " (VP (MD would) (VP (VB pass)))))) (. .)))", "attribution",
     ["The bill would pass.", "The senator said this."]),
    ("(ROOT (S (NP (NP (DT The) (NN book)) (SBAR (WHNP (WDT that)) (S (NP (PRP she)) (VP (VBD wrote)))))"
     " (VP (VBD became) (NP (DT a) (NN hit))) (. .)))", "restrictive_relative",
     ["The book became a hit.", "She wrote this book."]),
    ("(ROOT (S (NP (DT The) (NN city)) (VP (VBD built) (NP (DT a) (NN dam)) (S (VP (TO to) (VP (VB stop)"
     " (NP (NNS floods)))))) (. .)))", "purpose_infinitive",
     ["The city built a dam.", "This was to stop floods."]),
    ("(ROOT (S (PP (IN In) (NP (CD 2010))) (, ,) (NP (DT the) (NN firm)) (VP (VBD moved)) (. .)))", "preposed_pp",
     ["The firm moved.", "This was in 2010."]),
])
def test_rule_outputs(ptb, name, texts):
    app = apply(rule(name), parse_ptb(ptb))
    assert [p.text for p in app.parts] == texts


def test_appositive_guard_for_place_names():
    t = parse_ptb("(ROOT (S (NP (DT The) (NN event)) (VP (VBD was) (PP (IN in) (NP (NP (NNP Paris)) (, ,)"
                  " (NP (NNP France))))) (. .)))")
    assert apply(rule("appositive"), t) is None


def test_extraction_failure_on_word_capture():
    bad = Rule("bad", compile("ROOT << (SBAR=adv < (IN < although=top))"), Structure.COORDINATION, 1,
               "contrast_clause", "none")
    t = parse_ptb("(ROOT (S (NP (PRP it)) (VP (VBD rained) (SBAR (IN although) (S (NP (PRP we)) (VP (VBD ran)))))))")
    with pytest.raises(ExtractionFailure):
        apply(bad, t)


@pytest.mark.parametrize("line,needle", [
    ("a | SUBORDINATION | ROOT < | purpose | this_copula | -", "compile"),
    ("a | SUBORDINATION | ROOT | nope | this_copula | -", "extractor"),
    ("a | COORDINATION | ROOT <: (S=top << (S=purp <: (VP=inf < TO))) | purpose | this_copula | -", "produces"),
    ("a | SUBORDINATION | ROOT <: (S=top << S=purp) | purpose | this_copula | -", "captures"),
    ("a | SUBORDINATION | ROOT <: (S=top << (S=purp <: (VP=inf < TO))) | purpose | none | -", "template"),
    ("a | SUBORDINATION | ROOT <: (S=top << (S=purp <: (VP=inf < TO))) | purpose | this_copula | zz", "cue"),
    ("a | SIDEWAYS | ROOT | purpose | this_copula | -", "structure"),
    ("a | SUBORDINATION | ROOT", "6 fields"),
])
def test_catalog_errors(line, needle):
    with pytest.raises(CatalogError) as err:
        load_catalog("# header\n" + line)
    assert needle in str(err.value)
    assert err.value.line == 2


def test_catalog_rejects_duplicate_names():
    line = default_catalog_text().splitlines()[-1]
    with pytest.raises(CatalogError):
        load_catalog(line + "\n" + line)


def test_strict_reduction_types_and_accounting_on_random_trees():
    rng = random.Random(5)
    fired = set()
    for _ in range(400):
        t = random_sentence_tree(rng)
        for r in inventory():
            app = apply(r, t)  # raises on type or accounting violations
            if app is None:
                continue
            fired.add(r.name)
            assert all(len(p.tree) < len(t) for p in app.parts)
            assert app.accounting_holds(t)
            n_ctx = sum(p.type is CONTEXT for p in app.parts)
            assert n_ctx == (1 if r.structure is Structure.SUBORDINATION else 0)
    assert len(fired) >= 12
