from discsplit.rephrase import Insertion, finish_sentence, is_plural, referent_np, rephrase
from discsplit.tree import parse_ptb


def test_plain_tokens():
    assert rephrase(["volvulus", "is", "suspected"]) == "Volvulus is suspected."


def test_referent_copula_template():
    words = "an upper gastrointestinal series".split()
    assert rephrase(words, Insertion(referent=("study",), copula="is")) == "This study is an upper gastrointestinal series."


def test_subject_and_modal_copy():
    words = "lead to increased post operative complications".split()
    ins = Insertion(subject=("The", "usage", "of", "barium"), auxiliaries=("can",))
    assert rephrase(words, ins) == "The usage of barium can lead to increased post operative complications."


def test_punctuation_repair():
    assert finish_sentence([",", "it", "rained", ",", "."]) == "It rained."
    assert finish_sentence(["did", "it", "rain", "?"]) == "Did it rain?"
    assert finish_sentence(["a", ",", ",", "b"]) == "A, b."


def test_referent_np():
    np, plural = referent_np(parse_ptb("(NP (DT A) (JJ fluoroscopic) (NN study))"))
    assert np.words == ["this", "fluoroscopic", "study"] and not plural
    np, plural = referent_np(parse_ptb("(NP (DT the) (NNS soldiers))"))
    assert np.words == ["these", "soldiers"] and plural
    np, _ = referent_np(parse_ptb("(NP (NNP Marie) (NNP Curie))"))
    assert np.words == ["Marie", "Curie"]


def test_plurality():
    assert is_plural(parse_ptb("(NP (NP (NNP A)) (CC and) (NP (NNP B)))"))
    assert is_plural(parse_ptb("(NP (PRP they))"))
    assert not is_plural(parse_ptb("(NP (DT the) (NN dog))"))
