"""Random but well-formed sentence trees.

Two sources are mixed: a small clause grammar that produces the constructions
the rules look for (coordination, adverbial and relative clauses,
appositions, parentheticals, infinitives, fronted PPs), and unconstrained
label soup.
"""

import random

from discsplit.tree import ParseTree, Token

NOUNS = ["dog", "report", "city", "river", "team", "plan", "study", "price"]
NAMES = ["Anna", "Paris", "Boston", "Smith"]
VERBS_PAST = ["saw", "built", "left", "said", "met", "found", "closed", "reported"]
ADJ = ["new", "old", "large", "small"]
PREPS = ["in", "on", "after", "during", "with", "despite", "before"]
SUBS = ["although", "because", "if", "when", "while", "as", "since", "unless", "before", "after", "though"]
CCS = ["and", "but", "or", "so", "yet"]


def pre(tag, word):
    return ParseTree(tag, (), Token(word, 0))


class Grammar:
    def __init__(self, rng: random.Random, budget: int = 60):
        self.rng = rng
        self.budget = budget

    def spend(self, n=1):
        self.budget -= n
        return self.budget > 0

    def chance(self, p):
        return self.budget > 6 and self.rng.random() < p

    def np(self, depth=0):
        r = self.rng
        self.spend(2)
        if r.random() < 0.2:
            base = ParseTree("NP", (pre("NNP", r.choice(NAMES)),))
        elif r.random() < 0.2:
            base = ParseTree("NP", (pre("PRP", r.choice(["it", "they", "we"])),))
        else:
            kids = [pre("DT", r.choice(["the", "a", "this"]))]
            if r.random() < 0.4:
                kids.append(pre("JJ", r.choice(ADJ)))
            kids.append(pre(r.choice(["NN", "NNS"]), r.choice(NOUNS)))
            base = ParseTree("NP", tuple(kids))
        if depth > 2:
            return base
        c = r.random()
        if self.chance(0.12):
            return ParseTree("NP", (base, pre(",", ","), ParseTree("SBAR", (
                ParseTree("WHNP", (pre("WDT", "which"),)), ParseTree("S", (self.vp(depth + 1),)))), pre(",", ",")))
        if self.chance(0.1):
            body = ParseTree("S", (self.np(depth + 1), ParseTree("VP", (pre("VBD", r.choice(VERBS_PAST)),))))
            return ParseTree("NP", (base, ParseTree("SBAR", (ParseTree("WHNP", (pre("WDT", "that"),)), body))))
        if self.chance(0.1):
            return ParseTree("NP", (base, pre(",", ","), self.np(depth + 1), pre(",", ",")))
        if self.chance(0.1):
            return ParseTree("NP", (base, ParseTree("VP", (pre("VBN", "known"), self.pp(depth + 1)))))
        if self.chance(0.08):
            return ParseTree("NP", (base, pre("CC", r.choice(["and", "or"])), self.np(depth + 1)))
        if self.chance(0.05):
            return ParseTree("NP", (base, ParseTree("PRN", (pre("-LRB-", "-LRB-"), self.np(depth + 1), pre("-RRB-", "-RRB-")))))
        if c < 0.15 and self.chance(1):
            return ParseTree("NP", (base, self.pp(depth + 1)))
        return base

    def pp(self, depth=0):
        self.spend(1)
        return ParseTree("PP", (pre("IN", self.rng.choice(PREPS)), self.np(depth + 1)))

    def vp(self, depth=0):
        r = self.rng
        self.spend(1)
        kids = [pre(r.choice(["VBD", "VBZ", "MD"]), r.choice(VERBS_PAST))]
        if r.random() < 0.6:
            kids.append(self.np(depth + 1))
        if depth < 3:
            if self.chance(0.15):
                kids.append(ParseTree("SBAR", (pre("IN", "that"), self.clause(depth + 1))))
            elif self.chance(0.2):
                if r.random() < 0.5:
                    kids.append(pre(",", ","))
                kids.append(self.sbar(depth + 1))
            elif self.chance(0.1):
                kids.append(ParseTree("S", (ParseTree("VP", (pre("TO", "to"), ParseTree("VP", (
                    pre("VB", "win"), self.np(depth + 1))))),)))
            elif self.chance(0.15):
                if r.random() < 0.5:
                    kids.append(pre(",", ","))
                kids.append(self.pp(depth + 1))
        vp = ParseTree("VP", tuple(kids))
        if depth < 3 and self.chance(0.12):
            return ParseTree("VP", (vp, pre("CC", r.choice(CCS)), self.vp(depth + 1)))
        return vp

    def sbar(self, depth):
        return ParseTree("SBAR", (pre("IN", self.rng.choice(SUBS)), self.clause(depth + 1)))

    def clause(self, depth=0):
        r = self.rng
        kids = []
        if depth < 3 and self.chance(0.15):
            kids += [self.sbar(depth + 1), pre(",", ",")]
        elif depth < 3 and self.chance(0.1):
            kids += [self.pp(depth + 1), pre(",", ",")]
        kids += [self.np(depth + 1), self.vp(depth + 1)]
        s = ParseTree("S", tuple(kids))
        if depth < 2 and self.chance(0.15):
            s = ParseTree("S", (s, pre(",", ","), pre("CC", r.choice(CCS)), self.clause(depth + 1)))
        return s

    def sentence(self):
        s = self.clause()
        return ParseTree("ROOT", (ParseTree("S", s.children + (pre(".", "."),)),))


LABELS = ["S", "NP", "VP", "PP", "SBAR", "PRN", "ADVP", "WHNP"]
TAGS = ["DT", "NN", "VBD", "VBN", "IN", "CC", ",", "TO", "WDT", "NNP", "-LRB-", ":"]
WORDS = ["the", "dog", "and", "if", "said", "to", ",", "which", "although", "known", "Paris", "in"]


def soup_tree(rng: random.Random, max_tokens: int = 60):
    budget = [max_tokens]

    def make(depth):
        if depth > 6 or budget[0] <= 1 or rng.random() < 0.4:
            budget[0] -= 1
            return ParseTree(rng.choice(TAGS), (), Token(rng.choice(WORDS), 0))
        kids = [make(depth + 1) for _ in range(rng.randint(1, 4)) if budget[0] > 0]
        if not kids:
            budget[0] -= 1
            kids = [ParseTree(rng.choice(TAGS), (), Token(rng.choice(WORDS), 0))]
        return ParseTree(rng.choice(LABELS), tuple(kids))

    return ParseTree("ROOT", (ParseTree("S", tuple(make(1) for _ in range(rng.randint(1, 3)))),)).reindexed()


def random_sentence_tree(rng: random.Random, max_tokens: int = 60):
    """A well-formed tree with at most ``max_tokens`` tokens."""
    while True:
        if rng.random() < 0.75:
            tree = Grammar(rng).sentence().reindexed()
        else:
            tree = soup_tree(rng, max_tokens)
        if len(tree) <= max_tokens:
            return tree
