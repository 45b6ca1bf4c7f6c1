import pytest

from discsplit.lexicon import (
    CueOrigin,
    CuePhrase,
    DuplicateEntry,
    Lexicon,
    MalformedLine,
    RhetoricalRelation as R,
    UnknownRelationName,
    default_lexicon,
    load_lexicon,
)
from discsplit.tree import Token


def cue(text, origin=CueOrigin.SUBORDINATOR):
    return CuePhrase(tuple(Token(w, i) for i, w in enumerate(text.split())), origin)


@pytest.fixture(scope="module")
def lex():
    return default_lexicon()


@pytest.mark.parametrize("text,origin,initial,expected", [
    ("although", CueOrigin.SUBORDINATOR, False, R.CONTRAST),
    ("if", CueOrigin.SUBORDINATOR, True, R.CONDITION),
    ("as", CueOrigin.SUBORDINATOR, False, R.BACKGROUND),
    ("because", CueOrigin.SUBORDINATOR, False, R.CAUSE),
    ("in order to", CueOrigin.NONE, False, R.PURPOSE),
    ("said", CueOrigin.NONE, False, R.ATTRIBUTION),
    ("which", CueOrigin.RELATIVE_PRONOUN, False, R.ELABORATION),
    ("zzz", CueOrigin.SUBORDINATOR, False, R.UNKNOWN_SUBORDINATION),
])
def test_classify_subordination(lex, text, origin, initial, expected):
    assert lex.classify_subordination(cue(text, origin), initial) is expected


def test_empty_cue_defaults(lex):
    assert lex.classify_subordination(CuePhrase((), CueOrigin.RELATIVE_PRONOUN)) is R.ELABORATION
    assert lex.classify_subordination(CuePhrase((), CueOrigin.SUBORDINATOR)) is R.UNKNOWN_SUBORDINATION
    assert lex.classify_coordination(CuePhrase((), CueOrigin.PUNCTUATION)) is R.LIST


@pytest.mark.parametrize("text,expected", [
    ("and", R.LIST), ("but", R.CONTRAST), ("or", R.DISJUNCTION), ("so", R.RESULT), ("zzz", R.UNKNOWN_COORDINATION),
])
def test_classify_coordination(lex, text, expected):
    assert lex.classify_coordination(cue(text, CueOrigin.COORDINATOR)) is expected


def test_case_insensitive(lex):
    assert lex.classify_subordination(cue("ALTHOUGH")) is lex.classify_subordination(cue("although"))


def test_specificity_longer_cue_wins():
    lex = Lexicon(load_lexicon("though|ANY|ANY|CONTRAST\neven though|ANY|ANY|CONDITION\n"))
    assert lex.classify_subordination(cue("even though")) is R.CONDITION
    assert lex.classify_subordination(cue("though")) is R.CONTRAST


def test_specificity_property_over_shipped_lexicon(lex):
    # whenever one cue contains another, the longer one decides
    for long in lex.entries:
        for short in lex.entries:
            if len(long.cue) > len(short.cue) and all(w in long.cue for w in short.cue):
                origin = long.required_origin or CueOrigin.NONE
                got = lex.lookup(CuePhrase(tuple(Token(w, i) for i, w in enumerate(long.cue)), origin), True)
                assert got.specificity >= long.specificity


def test_load_errors():
    assert len(load_lexicon("although|SUBORDINATOR|ANY|CONTRAST")) == 1
    with pytest.raises(DuplicateEntry):
        load_lexicon("a|ANY|ANY|LIST\na|ANY|ANY|LIST")
    with pytest.raises(UnknownRelationName) as err:
        load_lexicon("# c\nalthough|SUBORDINATOR|ANY|CONTRASTY")
    assert err.value.line == 2
    with pytest.raises(MalformedLine):
        load_lexicon("although|ANY|CONTRAST")
    with pytest.raises(MalformedLine):
        load_lexicon("although|NOWHERE|ANY|CONTRAST")


def test_totality(lex):
    for origin in CueOrigin:
        for words in ["", "x", "and", "although", "in order to", "so that"]:
            c = cue(words, origin) if words else CuePhrase((), origin)
            assert isinstance(lex.classify_subordination(c), R)
            assert isinstance(lex.classify_coordination(c), R)
